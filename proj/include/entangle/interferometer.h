// Copyright 2026 The Entangle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ENTANGLE_INTERFEROMETER_H
#define ENTANGLE_INTERFEROMETER_H

#include <array>
#include <cstdint>

#include "entangle/decomposition.h"
#include "entangle/measures.h"
#include "entangle/qstate.h"

/// Two-particle interferometer: each particle passes a local unitary, then
/// detectors record singles and coincidences in the output bases.
namespace entangle {

/// Offset added to the coincidence covariance. Fixed, not a tuning knob.
inline constexpr double kCoincidenceOffset = 0.25;

struct RateTable {
    std::array<double, 2> singles_1;                    // P1(u1), P1(u2)
    std::array<double, 2> singles_2;                    // P2(v1), P2(v2)
    std::array<std::array<double, 2>, 2> coincidences;  // P12(u_i, v_j)
};

/// Rates for output amplitudes over |u_i, v_j>.
RateTable rates_from_amplitudes(const Vec4 &output);

/// Rates after the source state passes U1 (x) U2.
RateTable rates(const TwoQubitState &s, const ParamUnitaryPair &u);

/// P12(u1, v1) - P1(u1) P2(v1), without the offset.
double coincidence_covariance(const RateTable &t);

/// P12(u1, v1) - P1(u1) P2(v1) + 1/4.
double corrected_coincidence(const RateTable &t);

/// The source as emitted in its own Schmidt bases: kappa1 |00> + kappa2 |11>.
/// Sweeps act on this frame.
TwoQubitState schmidt_source(const TwoQubitState &s);

struct SweepSpec {
    /// Grid points per swept parameter.
    size_t resolution = 8;
    /// Coordinate-ascent sweeps after the grid.
    size_t refine_iters = 100;
};

struct VisibilityReport {
    double corrected_max;
    double corrected_min;
    double v12;
    /// One-particle visibilities from sweeps over U1 alone and U2 alone.
    double v1;
    double v2;
    double offset_A;
    /// Unitary pairs (acting on schmidt_source) attaining the extremes.
    ParamUnitaryPair setting_max;
    ParamUnitaryPair setting_min;
};

/// Extremizes the corrected coincidence over unitary pairs whose phase sum
/// theta1 + theta2 + phi1 + phi2 is 0 or pi, then
/// v12 = (max - min) / (max + min).
///
/// Each branch sweeps (mix1, mix2, theta1, theta2, phi1) on a grid with
/// phi2 fixed by the branch, then refines the best point of each extreme.
/// Throws std::invalid_argument if resolution < 8.
VisibilityReport two_particle_visibility(const TwoQubitState &s, const SweepSpec &sweep = {});

/// kappa1^2 - kappa2^2 = sqrt(1 - P_E^2), identical for both subsystems.
double one_particle_visibility(const TwoQubitState &s, Subsystem which);

/// Visibility of P1(u1) (or P2(v1)) as that particle's unitary alone is swept.
double one_particle_visibility_sweep(const TwoQubitState &s, Subsystem which, const SweepSpec &sweep = {});

/// Largest |(a1 a4 + a2 a3) / 2| found over the phase-constrained sweep,
/// together with the output amplitudes where it occurs.
struct OffsetProbe {
    double value;
    Vec4 amplitudes;
};
OffsetProbe max_offset_quantity(const TwoQubitState &s, const SweepSpec &sweep = {});

struct CountTable {
    std::array<std::array<uint64_t, 2>, 2> coincidences;
    std::array<uint64_t, 2> singles_1;
    std::array<uint64_t, 2> singles_2;
    uint64_t total;

    /// Relative frequencies as a RateTable.
    RateTable frequencies() const;
};

/// Multinomial draw of `total` coincidence events (singles are marginals).
/// Throws std::invalid_argument if total == 0.
CountTable sample_counts(const RateTable &t, uint64_t total, uint64_t seed);

/// V12 estimated from `total` sampled events at each of the report's two
/// extreme settings.
double empirical_visibility(const TwoQubitState &s, const VisibilityReport &report, uint64_t total, uint64_t seed);

}  // namespace entangle

#endif

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

#ifndef ENTANGLE_MEASURES_H
#define ENTANGLE_MEASURES_H

#include <array>
#include <cstdint>

#include "entangle/qstate.h"

namespace entangle {

inline constexpr uint64_t kDefaultSeed = 0x5eed2002u;

using BlochVector = std::array<double, 3>;

/// Spin observables n . sigma (eigenvalues +-1) for the CHSH sum
/// E(c, d) + E(c', d) + E(c, d') - E(c', d').
struct MeasurementSetting {
    BlochVector c;
    BlochVector c_prime;
    BlochVector d;
    BlochVector d_prime;
};

/// <psi| (c . sigma) (x) (d . sigma) |psi>. Throws std::invalid_argument if
/// c or d is not a unit vector (within 1e-9).
double correlation(const TwoQubitState &s, const BlochVector &c, const BlochVector &d);

/// |E(c,d) + E(c',d) + E(c,d') - E(c',d')|.
double chsh_f(const TwoQubitState &s, const MeasurementSetting &m);

/// 2 sqrt(1 + P_E^2).
double chsh_closed_form(double degree_of_entanglement);

struct ChshResult {
    double f_value;
    MeasurementSetting setting;
    double f_max_closed_form;
};

inline constexpr size_t kDefaultChshGridSteps = 12;
inline constexpr size_t kDefaultChshRefineIters = 200;

/// Numerical maximum of chsh_f over all four Bloch directions.
///
/// The search runs in the Schmidt frame of the state: a grid over the x-z
/// plane (grid_steps angles per direction), then cyclic coordinate ascent
/// over all eight polar/azimuthal angles for at most refine_iters sweeps.
/// The winning setting is rotated back to the computational frame and
/// f_value is re-evaluated there. f_max_closed_form is reported alongside
/// but never used by the search.
///
/// Throws std::invalid_argument if grid_steps < 8.
ChshResult chsh_max(
    const TwoQubitState &s,
    size_t grid_steps = kDefaultChshGridSteps,
    size_t refine_iters = kDefaultChshRefineIters);

/// |sum_j beta_j^2| over the magic basis.
double concurrence(const TwoQubitState &s);

/// 1 - kappa1.
double shimony_measure(const TwoQubitState &s);

inline constexpr size_t kDefaultShimonySamples = 4096;
inline constexpr size_t kShimonyRestarts = 64;

/// min over product states phi of |||psi> - |phi>||^2 / 2, by direct search.
///
/// Product states are e^{iw} (cos t1, e^{ix1} sin t1) (x) (cos t2, e^{ix2} sin t2).
/// `samples` random parameter points are drawn; the best kShimonyRestarts of
/// them are refined by coordinate descent. Throws std::invalid_argument if
/// samples < 1000.
double shimony_bruteforce(const TwoQubitState &s, size_t samples = kDefaultShimonySamples, uint64_t seed = kDefaultSeed);

}  // namespace entangle

#endif

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

#include "entangle/interferometer.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "entangle/optimize.h"

using namespace entangle;

namespace {

constexpr double kPi = std::numbers::pi;

// x = (mix1, mix2, theta1, theta2, phi1); phi2 closes the phase sum to `branch`.
ParamUnitaryPair constrained_pair(std::span<const double> x, double branch) {
    ParamUnitaryPair p;
    p.mix1 = x[0];
    p.mix2 = x[1];
    p.theta1 = x[2];
    p.theta2 = x[3];
    p.phi1 = x[4];
    p.phi2 = branch - x[2] - x[3] - x[4];
    return p;
}

struct BranchOptimum {
    Optimum optimum;
    double branch;
};

void require_resolution(const SweepSpec &sweep) {
    if (sweep.resolution < 8) {
        throw std::invalid_argument("sweep resolution must be >= 8 per parameter");
    }
}

// Maximizes f(pair) over the phase-constrained family, both branches.
BranchOptimum maximize_constrained(
    const std::function<double(const ParamUnitaryPair &)> &f, const SweepSpec &sweep) {
    std::array<GridAxis, 5> axes{
        GridAxis{0, 0.5 * kPi, sweep.resolution, false},
        GridAxis{0, 0.5 * kPi, sweep.resolution, false},
        GridAxis{0, 2 * kPi, sweep.resolution, true},
        GridAxis{0, 2 * kPi, sweep.resolution, true},
        GridAxis{0, 2 * kPi, sweep.resolution, true},
    };
    BranchOptimum best{{{}, -std::numeric_limits<double>::infinity()}, 0};
    for (double branch : {0.0, kPi}) {
        auto objective = [&](std::span<const double> x) {
            return f(constrained_pair(x, branch));
        };
        Optimum coarse = grid_maximize(objective, axes);
        if (coarse.value > best.optimum.value) {
            best = {coarse, branch};
        }
    }
    auto objective = [&](std::span<const double> x) {
        return f(constrained_pair(x, best.branch));
    };
    CoordinateAscentOptions opts;
    opts.max_sweeps = sweep.refine_iters;
    opts.initial_step = 0.5 * kPi / static_cast<double>(sweep.resolution);
    best.optimum = coordinate_ascent(objective, best.optimum.x, opts);
    return best;
}

// Extremes of a single particle's singles rate P(first outcome) as its own
// unitary (mix, phase_a, phase_b) is swept.
std::pair<double, double> singles_range(const TwoQubitState &s, Subsystem which, const SweepSpec &sweep) {
    auto pair_for = [which](std::span<const double> x) {
        ParamUnitaryPair p;
        if (which == Subsystem::First) {
            p.mix1 = x[0];
            p.theta1 = x[1];
            p.theta2 = x[2];
        } else {
            p.mix2 = x[0];
            p.phi1 = x[1];
            p.phi2 = x[2];
        }
        return p;
    };
    auto singles = [&](std::span<const double> x) {
        RateTable t = rates(s, pair_for(x));
        return which == Subsystem::First ? t.singles_1[0] : t.singles_2[0];
    };
    std::array<GridAxis, 3> axes{
        GridAxis{0, 0.5 * kPi, sweep.resolution, false},
        GridAxis{0, 2 * kPi, sweep.resolution, true},
        GridAxis{0, 2 * kPi, sweep.resolution, true},
    };
    CoordinateAscentOptions opts;
    opts.max_sweeps = sweep.refine_iters;
    opts.initial_step = 0.5 * kPi / static_cast<double>(sweep.resolution);

    Optimum hi = coordinate_ascent(singles, grid_maximize(singles, axes).x, opts);
    auto negated = [&](std::span<const double> x) {
        return -singles(x);
    };
    Optimum lo = coordinate_ascent(negated, grid_maximize(negated, axes).x, opts);
    return {hi.value, -lo.value};
}

}  // namespace

RateTable entangle::rates_from_amplitudes(const Vec4 &out) {
    RateTable t{};
    for (size_t i = 0; i < 2; i++) {
        for (size_t j = 0; j < 2; j++) {
            t.coincidences[i][j] = std::norm(out[2 * i + j]);
        }
    }
    for (size_t k = 0; k < 2; k++) {
        t.singles_1[k] = t.coincidences[k][0] + t.coincidences[k][1];
        t.singles_2[k] = t.coincidences[0][k] + t.coincidences[1][k];
    }
    return t;
}

RateTable entangle::rates(const TwoQubitState &s, const ParamUnitaryPair &u) {
    return rates_from_amplitudes(tensor2x2(u.first(), u.second()) * s.amplitudes());
}

double entangle::coincidence_covariance(const RateTable &t) {
    return t.coincidences[0][0] - t.singles_1[0] * t.singles_2[0];
}

double entangle::corrected_coincidence(const RateTable &t) {
    return coincidence_covariance(t) + kCoincidenceOffset;
}

TwoQubitState entangle::schmidt_source(const TwoQubitState &s) {
    SchmidtForm sf = schmidt(s);
    return make_state({sf.kappa1, 0, 0, sf.kappa2}, true);
}

VisibilityReport entangle::two_particle_visibility(const TwoQubitState &s, const SweepSpec &sweep) {
    require_resolution(sweep);
    SchmidtForm sf = schmidt(s);
    auto corrected = [&](const ParamUnitaryPair &pair) {
        return corrected_coincidence(rates_from_amplitudes(transformed_amplitudes(sf.kappa1, sf.kappa2, pair).beta));
    };
    BranchOptimum hi = maximize_constrained(corrected, sweep);
    BranchOptimum lo = maximize_constrained(
        [&](const ParamUnitaryPair &pair) {
            return -corrected(pair);
        },
        sweep);

    double cmax = hi.optimum.value;
    double cmin = -lo.optimum.value;
    auto [h1, l1] = singles_range(s, Subsystem::First, sweep);
    auto [h2, l2] = singles_range(s, Subsystem::Second, sweep);
    return VisibilityReport{
        cmax,
        cmin,
        (cmax - cmin) / (cmax + cmin),
        (h1 - l1) / (h1 + l1),
        (h2 - l2) / (h2 + l2),
        kCoincidenceOffset,
        constrained_pair(hi.optimum.x, hi.branch),
        constrained_pair(lo.optimum.x, lo.branch),
    };
}

double entangle::one_particle_visibility(const TwoQubitState &s, Subsystem) {
    SchmidtForm sf = schmidt(s);
    return sf.kappa1 * sf.kappa1 - sf.kappa2 * sf.kappa2;
}

double entangle::one_particle_visibility_sweep(const TwoQubitState &s, Subsystem which, const SweepSpec &sweep) {
    require_resolution(sweep);
    auto [hi, lo] = singles_range(s, which, sweep);
    return (hi - lo) / (hi + lo);
}

OffsetProbe entangle::max_offset_quantity(const TwoQubitState &s, const SweepSpec &sweep) {
    require_resolution(sweep);
    SchmidtForm sf = schmidt(s);
    auto quantity = [&](const ParamUnitaryPair &pair) {
        Vec4 a = transformed_amplitudes(sf.kappa1, sf.kappa2, pair).beta;
        return std::abs(0.5 * (a[0] * a[3] + a[1] * a[2]));
    };
    BranchOptimum best = maximize_constrained(quantity, sweep);
    ParamUnitaryPair pair = constrained_pair(best.optimum.x, best.branch);
    return OffsetProbe{best.optimum.value, transformed_amplitudes(sf.kappa1, sf.kappa2, pair).beta};
}

RateTable CountTable::frequencies() const {
    RateTable t{};
    double n = static_cast<double>(total);
    for (size_t i = 0; i < 2; i++) {
        for (size_t j = 0; j < 2; j++) {
            t.coincidences[i][j] = static_cast<double>(coincidences[i][j]) / n;
        }
        t.singles_1[i] = static_cast<double>(singles_1[i]) / n;
        t.singles_2[i] = static_cast<double>(singles_2[i]) / n;
    }
    return t;
}

CountTable entangle::sample_counts(const RateTable &t, uint64_t total, uint64_t seed) {
    if (total == 0) {
        throw std::invalid_argument("sample_counts: total must be >= 1");
    }
    std::mt19937_64 rng(seed);
    std::array<double, 4> probs{
        t.coincidences[0][0], t.coincidences[0][1], t.coincidences[1][0], t.coincidences[1][1]};
    std::array<uint64_t, 4> cells{};

    // Sequential conditional binomials; the last cell takes the remainder.
    uint64_t remaining = total;
    double mass_left = 1.0;
    for (size_t k = 0; k < 3 && remaining > 0; k++) {
        double q = mass_left > 0 ? std::clamp(probs[k] / mass_left, 0.0, 1.0) : 0.0;
        std::binomial_distribution<uint64_t> draw(remaining, q);
        cells[k] = draw(rng);
        remaining -= cells[k];
        mass_left -= probs[k];
    }
    cells[3] = remaining;

    CountTable c{};
    c.total = total;
    c.coincidences = {{{cells[0], cells[1]}, {cells[2], cells[3]}}};
    for (size_t k = 0; k < 2; k++) {
        c.singles_1[k] = c.coincidences[k][0] + c.coincidences[k][1];
        c.singles_2[k] = c.coincidences[0][k] + c.coincidences[1][k];
    }
    return c;
}

double entangle::empirical_visibility(
    const TwoQubitState &s, const VisibilityReport &report, uint64_t total, uint64_t seed) {
    TwoQubitState source = schmidt_source(s);
    double hi = corrected_coincidence(sample_counts(rates(source, report.setting_max), total, seed).frequencies());
    double lo = corrected_coincidence(sample_counts(rates(source, report.setting_min), total, seed + 1).frequencies());
    return (hi - lo) / (hi + lo);
}

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

#include "entangle/measures.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "entangle/decomposition.h"
#include "entangle/optimize.h"

using namespace entangle;

namespace {

using Correlations = std::array<std::array<double, 3>, 3>;

void require_unit(const BlochVector &n) {
    double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    if (std::abs(len - 1) > 1e-9) {
        throw std::invalid_argument("correlation: measurement direction is not a unit vector");
    }
}

double expectation(const Mat4 &op, const Vec4 &psi) {
    return inner(psi, op * psi).real();
}

// T(i, j) = <sigma_i (x) sigma_j>.
Correlations correlation_tensor(const Vec4 &psi) {
    const std::array<Mat2, 3> paulis{Mat2::pauli_x(), Mat2::pauli_y(), Mat2::pauli_z()};
    Correlations t{};
    for (size_t i = 0; i < 3; i++) {
        for (size_t j = 0; j < 3; j++) {
            t[i][j] = expectation(tensor2x2(paulis[i], paulis[j]), psi);
        }
    }
    return t;
}

double bilinear(const Correlations &t, const BlochVector &c, const BlochVector &d) {
    double total = 0;
    for (size_t i = 0; i < 3; i++) {
        for (size_t j = 0; j < 3; j++) {
            total += c[i] * t[i][j] * d[j];
        }
    }
    return total;
}

BlochVector direction(double polar, double azimuth) {
    return {std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth), std::cos(polar)};
}

// Bloch vector of frame * (n . sigma) * frame^dagger.
BlochVector rotate(const Mat2 &frame, const BlochVector &n) {
    BlochVector r = bloch_components(frame * spin_operator(n) * frame.adjoint());
    double len = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
    return {r[0] / len, r[1] / len, r[2] / len};
}

double chsh_sum(const Correlations &t, const MeasurementSetting &m) {
    return bilinear(t, m.c, m.d) + bilinear(t, m.c_prime, m.d) + bilinear(t, m.c, m.d_prime) -
           bilinear(t, m.c_prime, m.d_prime);
}

// Angles are (polar, azimuth) for c, c', d, d' in that order.
MeasurementSetting setting_from_angles(std::span<const double> x) {
    return {direction(x[0], x[1]), direction(x[2], x[3]), direction(x[4], x[5]), direction(x[6], x[7])};
}

double uniform01(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Vec4 product_from_params(std::span<const double> x) {
    Vec2 first{std::cos(x[0]), std::polar(std::sin(x[0]), x[1])};
    Vec2 second{std::cos(x[2]), std::polar(std::sin(x[2]), x[3])};
    return std::polar(1.0, x[4]) * kron(first, second);
}

}  // namespace

double entangle::correlation(const TwoQubitState &s, const BlochVector &c, const BlochVector &d) {
    require_unit(c);
    require_unit(d);
    return expectation(tensor2x2(spin_operator(c), spin_operator(d)), s.amplitudes());
}

double entangle::chsh_f(const TwoQubitState &s, const MeasurementSetting &m) {
    return std::abs(
        correlation(s, m.c, m.d) + correlation(s, m.c_prime, m.d) + correlation(s, m.c, m.d_prime) -
        correlation(s, m.c_prime, m.d_prime));
}

double entangle::chsh_closed_form(double pe) {
    return 2 * std::sqrt(1 + pe * pe);
}

ChshResult entangle::chsh_max(const TwoQubitState &s, size_t grid_steps, size_t refine_iters) {
    if (grid_steps < 8) {
        throw std::invalid_argument("chsh_max: grid_steps must be >= 8");
    }
    SchmidtForm sf = schmidt(s);
    Vec4 canonical{sf.kappa1, 0, 0, sf.kappa2};
    Correlations t = correlation_tensor(canonical);

    // Planar stage. The second-party directions are written as a mean angle
    // and a half-opening (d at mean + half, d' at mean - half), which keeps
    // the coordinates nearly independent for the line searches.
    const double two_pi = 2 * std::numbers::pi;
    auto planar = [&](std::span<const double> x) {
        MeasurementSetting m{
            direction(x[0], 0), direction(x[1], 0), direction(x[2] + x[3], 0), direction(x[2] - x[3], 0)};
        return std::abs(chsh_sum(t, m));
    };
    // The half-opening only matters modulo pi (shifting it by pi flips the
    // sign of the sum). Its axis is offset by half a cell so it never samples
    // d = +-d', plateaus on which c' has no effect on the objective.
    const double half_cell = 0.5 * std::numbers::pi / static_cast<double>(grid_steps);
    std::array<GridAxis, 4> axes;
    axes.fill(GridAxis{0, two_pi, grid_steps, true});
    axes[3] = GridAxis{half_cell, std::numbers::pi + half_cell, grid_steps, true};
    Optimum coarse = grid_maximize(planar, axes);
    CoordinateAscentOptions planar_opts;
    planar_opts.max_sweeps = refine_iters;
    planar_opts.initial_step = std::numbers::pi / static_cast<double>(grid_steps);
    coarse = coordinate_ascent(planar, coarse.x, planar_opts);

    std::vector<double> start{
        coarse.x[0], 0, coarse.x[1], 0, coarse.x[2] + coarse.x[3], 0, coarse.x[2] - coarse.x[3], 0};
    auto full = [&](std::span<const double> x) {
        return std::abs(chsh_sum(t, setting_from_angles(x)));
    };
    CoordinateAscentOptions opts;
    opts.max_sweeps = refine_iters;
    opts.initial_step = std::numbers::pi / static_cast<double>(grid_steps);
    Optimum refined = coordinate_ascent(full, start, opts);

    MeasurementSetting frame_setting = setting_from_angles(refined.x);
    Mat2 xs = Mat2::from_columns(sf.basis_a[0], sf.basis_a[1]);
    Mat2 ys = Mat2::from_columns(sf.basis_b[0], sf.basis_b[1]);
    MeasurementSetting lab{
        rotate(xs, frame_setting.c),
        rotate(xs, frame_setting.c_prime),
        rotate(ys, frame_setting.d),
        rotate(ys, frame_setting.d_prime),
    };
    return ChshResult{chsh_f(s, lab), lab, chsh_closed_form(degree_of_entanglement(s))};
}

double entangle::concurrence(const TwoQubitState &s) {
    MagicCoordinates m = to_magic(s);
    Complex total = 0;
    for (const auto &b : m.beta) {
        total += b * b;
    }
    return std::min(1.0, std::abs(total));
}

double entangle::shimony_measure(const TwoQubitState &s) {
    return 1 - schmidt(s).kappa1;
}

double entangle::shimony_bruteforce(const TwoQubitState &s, size_t samples, uint64_t seed) {
    if (samples < 1000) {
        throw std::invalid_argument("shimony_bruteforce: samples must be >= 1000");
    }
    const Vec4 &psi = s.amplitudes();
    auto closeness = [&](std::span<const double> x) {
        Vec4 diff = psi - product_from_params(x);
        double n = norm(diff);
        return -0.5 * n * n;
    };

    const double two_pi = 2 * std::numbers::pi;
    std::mt19937_64 rng(seed);
    std::vector<Optimum> candidates;
    candidates.reserve(samples);
    for (size_t k = 0; k < samples; k++) {
        std::vector<double> x{
            0.5 * std::numbers::pi * uniform01(rng),
            two_pi * uniform01(rng),
            0.5 * std::numbers::pi * uniform01(rng),
            two_pi * uniform01(rng),
            two_pi * uniform01(rng),
        };
        double value = closeness(x);
        candidates.push_back(Optimum{std::move(x), value});
    }
    size_t keep = std::min(kShimonyRestarts, candidates.size());
    std::partial_sort(
        candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(keep), candidates.end(),
        [](const Optimum &a, const Optimum &b) {
            return a.value > b.value;
        });

    CoordinateAscentOptions opts;
    opts.initial_step = 0.25;
    opts.min_step = 1e-8;
    opts.line_iterations = 40;
    double best = -std::numeric_limits<double>::infinity();
    for (size_t k = 0; k < keep; k++) {
        best = std::max(best, coordinate_ascent(closeness, candidates[k].x, opts).value);
    }
    return -best;
}

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

#include "entangle/optimize.h"

#include <cmath>
#include <limits>
#include <stdexcept>

using namespace entangle;

double GridAxis::at(size_t k) const {
    if (periodic) {
        return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(steps);
    }
    if (steps <= 1) {
        return lo;
    }
    return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(steps - 1);
}

Optimum entangle::grid_maximize(const Objective &f, std::span<const GridAxis> axes) {
    for (const auto &axis : axes) {
        if (axis.steps == 0) {
            throw std::invalid_argument("grid_maximize: axis with zero steps");
        }
    }
    std::vector<size_t> index(axes.size(), 0);
    std::vector<double> x(axes.size());
    Optimum best{{}, -std::numeric_limits<double>::infinity()};
    while (true) {
        for (size_t d = 0; d < axes.size(); d++) {
            x[d] = axes[d].at(index[d]);
        }
        double value = f(x);
        if (value > best.value) {
            best.value = value;
            best.x = x;
        }
        size_t d = axes.size();
        while (d > 0) {
            d--;
            if (++index[d] < axes[d].steps) {
                break;
            }
            index[d] = 0;
            if (d == 0) {
                return best;
            }
        }
        if (axes.empty()) {
            return best;
        }
    }
}

double entangle::golden_section_argmax(
    const std::function<double(double)> &g, double lo, double hi, size_t iterations) {
    const double inv_phi = (std::sqrt(5.0) - 1) / 2;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double g1 = g(x1);
    double g2 = g(x2);
    for (size_t k = 0; k < iterations; k++) {
        if (g1 >= g2) {
            hi = x2;
            x2 = x1;
            g2 = g1;
            x1 = hi - inv_phi * (hi - lo);
            g1 = g(x1);
        } else {
            lo = x1;
            x1 = x2;
            g1 = g2;
            x2 = lo + inv_phi * (hi - lo);
            g2 = g(x2);
        }
    }
    return g1 >= g2 ? x1 : x2;
}

Optimum entangle::coordinate_ascent(
    const Objective &f, std::vector<double> start, const CoordinateAscentOptions &options) {
    Optimum current{std::move(start), 0};
    current.value = f(current.x);
    double step = options.initial_step;
    std::vector<double> probe = current.x;

    for (size_t sweep = 0; sweep < options.max_sweeps && step >= options.min_step; sweep++) {
        double sweep_start = current.value;
        for (size_t i = 0; i < current.x.size(); i++) {
            probe = current.x;
            auto line = [&](double t) {
                probe[i] = t;
                return f(probe);
            };
            double xi = current.x[i];
            double t = golden_section_argmax(line, xi - step, xi + step, options.line_iterations);
            probe[i] = t;
            double value = f(probe);
            if (value > current.value) {
                current.value = value;
                current.x[i] = t;
            }
        }
        if (!(current.value > sweep_start + 1e-15)) {
            step *= 0.5;
        }
    }
    return current;
}

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

#ifndef ENTANGLE_OPTIMIZE_H
#define ENTANGLE_OPTIMIZE_H

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

/// Derivative-free maximization used by the CHSH, Shimony and visibility searches.
namespace entangle {

using Objective = std::function<double(std::span<const double>)>;

struct GridAxis {
    double lo;
    double hi;
    size_t steps;
    /// Periodic axes sample [lo, hi) so the endpoint is not visited twice.
    bool periodic;

    double at(size_t k) const;
};

struct Optimum {
    std::vector<double> x;
    double value;
};

/// Exhaustive scan over the product grid in odometer order (last axis fastest).
/// Ties keep the first point encountered.
Optimum grid_maximize(const Objective &f, std::span<const GridAxis> axes);

/// Golden-section search for the maximum of a unimodal g on [lo, hi].
double golden_section_argmax(const std::function<double(double)> &g, double lo, double hi, size_t iterations);

struct CoordinateAscentOptions {
    size_t max_sweeps = 200;
    double initial_step = 0.5;
    double min_step = 1e-9;
    size_t line_iterations = 60;
};

/// Cyclic coordinate ascent. Each coordinate is line-searched on
/// [x_i - step, x_i + step]; the step halves after a sweep without progress.
/// Moves are only accepted if they strictly improve the objective, so the
/// returned value is never below f(start).
Optimum coordinate_ascent(const Objective &f, std::vector<double> start, const CoordinateAscentOptions &options);

}  // namespace entangle

#endif

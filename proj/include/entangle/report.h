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

#ifndef ENTANGLE_REPORT_H
#define ENTANGLE_REPORT_H

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "entangle/decomposition.h"
#include "entangle/measures.h"
#include "json.hpp"

namespace entangle {

/// Bad user input (malformed JSON, wrong shape, unnormalizable amplitudes).
/// The CLI maps this to exit status 2.
class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// {"label": str?, "normalize": bool?, "amplitudes": [[re, im] x 4]}
struct StateDocument {
    Vec4 amplitudes{};
    std::optional<std::string> label;
    bool normalize = true;
};

/// Parses one document; errors name the offending field.
StateDocument parse_state_document(std::string_view text);
nlohmann::json to_json(const StateDocument &doc);

/// Converts to a validated state (InputError on zero / non-unit amplitudes).
TwoQubitState to_state(const StateDocument &doc);

/// Parses angles such as "0", "1.25", "pi", "-pi/2", "3pi/4", "2*pi/3".
/// Throws InputError on anything else.
double parse_angle(std::string_view text);

struct AnalysisOptions {
    size_t samples = 8;
    size_t grid_steps = kDefaultChshGridSteps;
    size_t refine_iters = kDefaultChshRefineIters;
    size_t sweep_resolution = 8;
    uint64_t seed = kDefaultSeed;
    /// When nonzero, V12 is also estimated from this many sampled events.
    uint64_t counts = 0;
};

/// Pass/fail thresholds applied by analyze().
struct Tolerances {
    static constexpr double kDecomposition = 1e-10;
    static constexpr double kPSpread = 1e-12;
    static constexpr double kConcurrence = 1e-10;
    static constexpr double kChsh = 1e-3;
    static constexpr double kVisibility = 1e-2;
    static constexpr double kCountedVisibility = 2e-2;
};

struct DecompositionEntry {
    double theta;
    std::string variant;
    double p;
    double phi;
    Vec4 psi_e;
    Vec4 psi_f;
    bool entangled_weight_zero;
    bool factorizable_weight_zero;

    bool operator==(const DecompositionEntry &) const = default;
};

DecompositionEntry make_entry(const EFDecomposition &d);

/// Worst case over the decomposition family, plus the cross-measure gaps.
struct ReportResiduals {
    double orthogonality = 0;
    double maximally_entangled = 0;
    double factorizable = 0;
    double reconstruction = 0;
    double identity_a3 = 0;
    double p_spread = 0;
    double concurrence_gap = 0;
    double chsh_gap = 0;
    double visibility_gap = 0;
    double one_particle_gap = 0;
    std::optional<double> counted_visibility_gap;

    bool operator==(const ReportResiduals &) const = default;
};

struct AnalysisReport {
    std::string label;
    Vec4 amplitudes{};
    double kappa1 = 0;
    double kappa2 = 0;
    double p = 0;
    double degree_of_entanglement = 0;
    double concurrence = 0;
    double shimony = 0;
    double f_max_closed_form = 0;
    double f_max_search = 0;
    double v12 = 0;
    double v1 = 0;
    std::optional<double> v12_counts;
    std::vector<DecompositionEntry> decompositions;
    ReportResiduals residuals;
    /// One message per residual above its tolerance; empty means PASS.
    std::vector<std::string> failures;

    bool failed() const {
        return !failures.empty();
    }
    bool operator==(const AnalysisReport &) const = default;
};

AnalysisReport analyze(const StateDocument &doc, const AnalysisOptions &options);

nlohmann::json to_json(const AnalysisReport &report);
/// Inverse of to_json; throws InputError on a malformed report.
AnalysisReport report_from_json(const nlohmann::json &j);

nlohmann::json amplitudes_to_json(const Vec4 &v);
Vec4 amplitudes_from_json(const nlohmann::json &j, std::string_view field);

}  // namespace entangle

#endif

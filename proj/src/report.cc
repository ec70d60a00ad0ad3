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

#include "entangle/report.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "entangle/interferometer.h"

using namespace entangle;
using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) {
        return {};
    }
    size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::optional<double> parse_number(std::string_view s) {
    if (s.empty()) {
        return std::nullopt;
    }
    if (s.front() == '+') {
        s.remove_prefix(1);
    }
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
        return std::nullopt;
    }
    return v;
}

std::string format_number(double v) {
    std::ostringstream out;
    out.precision(17);
    out << v;
    return out.str();
}

void check(std::vector<std::string> &failures, const char *name, double value, double tol) {
    if (!(value <= tol)) {
        failures.push_back(std::string(name) + " " + format_number(value) + " exceeds " + format_number(tol));
    }
}

template <typename T>
T required(const json &j, const char *key) {
    if (!j.contains(key)) {
        throw InputError(std::string("report: missing field '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception &e) {
        throw InputError(std::string("report: field '") + key + "': " + e.what());
    }
}

}  // namespace

json entangle::amplitudes_to_json(const Vec4 &v) {
    json out = json::array();
    for (const auto &z : v) {
        out.push_back(json::array({z.real(), z.imag()}));
    }
    return out;
}

Vec4 entangle::amplitudes_from_json(const json &j, std::string_view field) {
    std::string name(field);
    if (!j.is_array()) {
        throw InputError("field '" + name + "': expected an array of 4 [re, im] pairs");
    }
    if (j.size() != 4) {
        throw InputError("field '" + name + "': expected 4 amplitudes, got " + std::to_string(j.size()));
    }
    Vec4 v{};
    for (size_t k = 0; k < 4; k++) {
        const json &pair = j[k];
        std::string where = name + "[" + std::to_string(k) + "]";
        if (!pair.is_array() || pair.size() != 2) {
            throw InputError("field '" + where + "': expected a [re, im] pair");
        }
        if (!pair[0].is_number() || !pair[1].is_number()) {
            throw InputError("field '" + where + "': components must be numbers");
        }
        v[k] = Complex(pair[0].get<double>(), pair[1].get<double>());
    }
    return v;
}

StateDocument entangle::parse_state_document(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw InputError("document: expected a JSON object");
    }
    StateDocument doc;
    if (!j.contains("amplitudes")) {
        throw InputError("field 'amplitudes': missing");
    }
    doc.amplitudes = amplitudes_from_json(j["amplitudes"], "amplitudes");
    if (j.contains("label")) {
        if (!j["label"].is_string()) {
            throw InputError("field 'label': expected a string");
        }
        doc.label = j["label"].get<std::string>();
    }
    if (j.contains("normalize")) {
        if (!j["normalize"].is_boolean()) {
            throw InputError("field 'normalize': expected true or false");
        }
        doc.normalize = j["normalize"].get<bool>();
    }
    return doc;
}

json entangle::to_json(const StateDocument &doc) {
    json j;
    j["amplitudes"] = amplitudes_to_json(doc.amplitudes);
    if (doc.label) {
        j["label"] = *doc.label;
    }
    j["normalize"] = doc.normalize;
    return j;
}

TwoQubitState entangle::to_state(const StateDocument &doc) {
    try {
        return make_state(doc.amplitudes, doc.normalize);
    } catch (const std::invalid_argument &e) {
        throw InputError(std::string("field 'amplitudes': ") + e.what());
    }
}

double entangle::parse_angle(std::string_view raw) {
    std::string text = trim(raw);
    std::string compact;
    for (char c : text) {
        if (c != ' ') {
            compact.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        }
    }
    std::string_view s = compact;
    auto fail = [&]() -> InputError {
        return InputError("cannot parse angle '" + std::string(raw) + "'");
    };

    double sign = 1;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        sign = s.front() == '-' ? -1 : 1;
        s.remove_prefix(1);
    }

    size_t pi_at = s.find("pi");
    double numerator;
    std::string_view rest;
    double scale = 1;
    if (pi_at == std::string_view::npos) {
        size_t slash = s.find('/');
        auto head = parse_number(s.substr(0, slash));
        if (!head) {
            throw fail();
        }
        numerator = *head;
        rest = slash == std::string_view::npos ? std::string_view{} : s.substr(slash);
    } else {
        std::string_view head = s.substr(0, pi_at);
        if (!head.empty() && head.back() == '*') {
            head.remove_suffix(1);
        }
        if (head.empty()) {
            numerator = 1;
        } else {
            auto n = parse_number(head);
            if (!n) {
                throw fail();
            }
            numerator = *n;
        }
        scale = std::numbers::pi;
        rest = s.substr(pi_at + 2);
    }

    double denominator = 1;
    if (!rest.empty()) {
        if (rest.front() != '/') {
            throw fail();
        }
        auto d = parse_number(rest.substr(1));
        if (!d || *d == 0) {
            throw fail();
        }
        denominator = *d;
    }
    return sign * (numerator / denominator) * scale;
}

DecompositionEntry entangle::make_entry(const EFDecomposition &d) {
    return DecompositionEntry{
        d.theta,
        std::string(variant_name(d.variant)),
        d.p,
        d.phi,
        d.psi_e.amplitudes(),
        d.psi_f.amplitudes(),
        d.entangled_weight_zero,
        d.factorizable_weight_zero,
    };
}

AnalysisReport entangle::analyze(const StateDocument &doc, const AnalysisOptions &options) {
    TwoQubitState s = to_state(doc);
    AnalysisReport r;
    r.label = doc.label.value_or("");
    r.amplitudes = s.amplitudes();

    SchmidtForm sf = schmidt(s);
    r.kappa1 = sf.kappa1;
    r.kappa2 = sf.kappa2;
    r.degree_of_entanglement = degree_of_entanglement(s);
    r.p = std::sqrt(r.degree_of_entanglement);
    r.concurrence = concurrence(s);
    r.shimony = shimony_measure(s);

    ChshResult chsh = chsh_max(s, options.grid_steps, options.refine_iters);
    r.f_max_closed_form = chsh.f_max_closed_form;
    r.f_max_search = chsh.f_value;

    SweepSpec sweep;
    sweep.resolution = options.sweep_resolution;
    VisibilityReport vis = two_particle_visibility(s, sweep);
    r.v12 = vis.v12;
    r.v1 = vis.v1;
    if (options.counts > 0) {
        r.v12_counts = empirical_visibility(s, vis, options.counts, options.seed);
    }

    ReportResiduals &res = r.residuals;
    double p_lo = 1;
    double p_hi = 0;
    for (const auto &d : decomposition_family(s, options.samples)) {
        DecompositionResiduals dr = residuals(d, s);
        res.orthogonality = std::max(res.orthogonality, dr.orthogonality);
        res.maximally_entangled = std::max(res.maximally_entangled, dr.maximally_entangled);
        res.factorizable = std::max(res.factorizable, dr.factorizable);
        res.reconstruction = std::max(res.reconstruction, dr.reconstruction);
        res.identity_a3 = std::max(res.identity_a3, dr.identity_a3);
        p_lo = std::min(p_lo, d.p);
        p_hi = std::max(p_hi, d.p);
        r.decompositions.push_back(make_entry(d));
    }
    res.p_spread = p_hi - p_lo;
    res.concurrence_gap = std::abs(r.concurrence - r.degree_of_entanglement);
    res.chsh_gap = std::abs(r.f_max_search - r.f_max_closed_form);
    res.visibility_gap = std::abs(r.v12 - r.degree_of_entanglement);
    res.one_particle_gap = std::abs(r.v1 - one_particle_visibility(s, Subsystem::First));
    if (r.v12_counts) {
        res.counted_visibility_gap = std::abs(*r.v12_counts - r.v12);
    }

    check(r.failures, "orthogonality", res.orthogonality, Tolerances::kDecomposition);
    check(r.failures, "maximally_entangled", res.maximally_entangled, Tolerances::kDecomposition);
    check(r.failures, "factorizable", res.factorizable, Tolerances::kDecomposition);
    check(r.failures, "reconstruction", res.reconstruction, Tolerances::kDecomposition);
    check(r.failures, "identity_a3", res.identity_a3, Tolerances::kDecomposition);
    check(r.failures, "p_spread", res.p_spread, Tolerances::kPSpread);
    check(r.failures, "concurrence_gap", res.concurrence_gap, Tolerances::kConcurrence);
    check(r.failures, "chsh_gap", res.chsh_gap, Tolerances::kChsh);
    check(r.failures, "visibility_gap", res.visibility_gap, Tolerances::kVisibility);
    check(r.failures, "one_particle_gap", res.one_particle_gap, Tolerances::kVisibility);
    if (res.counted_visibility_gap) {
        check(r.failures, "counted_visibility_gap", *res.counted_visibility_gap, Tolerances::kCountedVisibility);
    }
    return r;
}

json entangle::to_json(const AnalysisReport &r) {
    json j;
    j["label"] = r.label;
    j["amplitudes"] = amplitudes_to_json(r.amplitudes);
    j["schmidt"] = {{"kappa1", r.kappa1}, {"kappa2", r.kappa2}};
    j["p"] = r.p;
    j["P_E"] = r.degree_of_entanglement;
    j["concurrence"] = r.concurrence;
    j["shimony"] = r.shimony;
    j["f_max_closed_form"] = r.f_max_closed_form;
    j["f_max_search"] = r.f_max_search;
    j["v12"] = r.v12;
    j["v1"] = r.v1;
    j["v12_counts"] = r.v12_counts ? json(*r.v12_counts) : json(nullptr);

    json decs = json::array();
    for (const auto &d : r.decompositions) {
        decs.push_back({
            {"theta", d.theta},
            {"variant", d.variant},
            {"p", d.p},
            {"phi", d.phi},
            {"psi_e", amplitudes_to_json(d.psi_e)},
            {"psi_f", amplitudes_to_json(d.psi_f)},
            {"entangled_weight_zero", d.entangled_weight_zero},
            {"factorizable_weight_zero", d.factorizable_weight_zero},
        });
    }
    j["decompositions"] = decs;

    const ReportResiduals &res = r.residuals;
    j["residuals"] = {
        {"orthogonality", res.orthogonality},
        {"maximally_entangled", res.maximally_entangled},
        {"factorizable", res.factorizable},
        {"reconstruction", res.reconstruction},
        {"identity_a3", res.identity_a3},
        {"p_spread", res.p_spread},
        {"concurrence_gap", res.concurrence_gap},
        {"chsh_gap", res.chsh_gap},
        {"visibility_gap", res.visibility_gap},
        {"one_particle_gap", res.one_particle_gap},
        {"counted_visibility_gap", res.counted_visibility_gap ? json(*res.counted_visibility_gap) : json(nullptr)},
    };
    j["failures"] = r.failures;
    j["status"] = r.failed() ? "FAILED" : "PASS";
    return j;
}

namespace {

AnalysisReport parse_report(const json &j) {
    if (!j.is_object()) {
        throw InputError("report: expected a JSON object");
    }
    auto optional_number = [](const json &parent, const char *key) -> std::optional<double> {
        if (!parent.contains(key) || parent[key].is_null()) {
            return std::nullopt;
        }
        return parent[key].get<double>();
    };

    AnalysisReport r;
    r.label = required<std::string>(j, "label");
    r.amplitudes = amplitudes_from_json(j.at("amplitudes"), "amplitudes");
    const json &sf = j.at("schmidt");
    r.kappa1 = required<double>(sf, "kappa1");
    r.kappa2 = required<double>(sf, "kappa2");
    r.p = required<double>(j, "p");
    r.degree_of_entanglement = required<double>(j, "P_E");
    r.concurrence = required<double>(j, "concurrence");
    r.shimony = required<double>(j, "shimony");
    r.f_max_closed_form = required<double>(j, "f_max_closed_form");
    r.f_max_search = required<double>(j, "f_max_search");
    r.v12 = required<double>(j, "v12");
    r.v1 = required<double>(j, "v1");
    r.v12_counts = optional_number(j, "v12_counts");

    for (const auto &d : j.at("decompositions")) {
        r.decompositions.push_back(DecompositionEntry{
            required<double>(d, "theta"),
            required<std::string>(d, "variant"),
            required<double>(d, "p"),
            required<double>(d, "phi"),
            amplitudes_from_json(d.at("psi_e"), "psi_e"),
            amplitudes_from_json(d.at("psi_f"), "psi_f"),
            required<bool>(d, "entangled_weight_zero"),
            required<bool>(d, "factorizable_weight_zero"),
        });
    }

    const json &res = j.at("residuals");
    r.residuals.orthogonality = required<double>(res, "orthogonality");
    r.residuals.maximally_entangled = required<double>(res, "maximally_entangled");
    r.residuals.factorizable = required<double>(res, "factorizable");
    r.residuals.reconstruction = required<double>(res, "reconstruction");
    r.residuals.identity_a3 = required<double>(res, "identity_a3");
    r.residuals.p_spread = required<double>(res, "p_spread");
    r.residuals.concurrence_gap = required<double>(res, "concurrence_gap");
    r.residuals.chsh_gap = required<double>(res, "chsh_gap");
    r.residuals.visibility_gap = required<double>(res, "visibility_gap");
    r.residuals.one_particle_gap = required<double>(res, "one_particle_gap");
    r.residuals.counted_visibility_gap = optional_number(res, "counted_visibility_gap");
    r.failures = required<std::vector<std::string>>(j, "failures");
    return r;
}

}  // namespace

AnalysisReport entangle::report_from_json(const json &j) {
    try {
        return parse_report(j);
    } catch (const json::exception &e) {
        throw InputError(std::string("report: ") + e.what());
    }
}

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

#include "entangle/cli.h"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "entangle/report.h"

using namespace entangle;
using nlohmann::json;

namespace {

struct CliOptions {
    std::string input = "-";
    AnalysisOptions analysis;
    std::string theta;
    std::string variant = "beta3zero";
    bool json = false;
    bool tolerance_report = false;
};

std::string read_all(const std::string &path, std::istream &in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file) {
        throw InputError("cannot open input file '" + path + "'");
    }
    buf << file.rdbuf();
    return buf.str();
}

std::string num(double v, int digits = 10) {
    std::ostringstream out;
    out << std::setprecision(digits) << v;
    return out.str();
}

std::string complex_text(Complex z) {
    std::ostringstream out;
    out << std::showpos << std::setprecision(10) << z.real() << z.imag() << "i";
    return out.str();
}

void print_amplitudes(std::ostream &out, const Vec4 &v) {
    static const char *kets[] = {"|00>", "|01>", "|10>", "|11>"};
    for (size_t k = 0; k < 4; k++) {
        out << (k ? "  " : "") << kets[k] << " " << complex_text(v[k]);
    }
    out << "\n";
}

void print_entry(std::ostream &out, const DecompositionEntry &d) {
    out << "theta = " << num(d.theta) << "  variant = " << d.variant << "  p = " << num(d.p, 17)
        << "  phi = " << num(d.phi) << "\n";
    out << "  psi_e: ";
    print_amplitudes(out, d.psi_e);
    out << "  psi_f: ";
    print_amplitudes(out, d.psi_f);
    if (d.entangled_weight_zero) {
        out << "  zero-weight psi_e (product state; psi_e is a placeholder)\n";
    }
    if (d.factorizable_weight_zero) {
        out << "  zero-weight psi_f (maximally entangled; psi_f is a placeholder)\n";
    }
}

void print_tolerances(std::ostream &out, const ReportResiduals &res) {
    auto row = [&](const char *name, double value, double tol) {
        out << "  " << std::left << std::setw(24) << name << std::setw(26) << num(value, 6) << "<= "
            << std::setw(10) << num(tol, 3) << (value <= tol ? "ok" : "FAIL") << "\n";
    };
    out << "tolerance report:\n";
    row("orthogonality", res.orthogonality, Tolerances::kDecomposition);
    row("maximally_entangled", res.maximally_entangled, Tolerances::kDecomposition);
    row("factorizable", res.factorizable, Tolerances::kDecomposition);
    row("reconstruction", res.reconstruction, Tolerances::kDecomposition);
    row("identity_a3", res.identity_a3, Tolerances::kDecomposition);
    row("p_spread", res.p_spread, Tolerances::kPSpread);
    row("concurrence_gap", res.concurrence_gap, Tolerances::kConcurrence);
    row("chsh_gap", res.chsh_gap, Tolerances::kChsh);
    row("visibility_gap", res.visibility_gap, Tolerances::kVisibility);
    row("one_particle_gap", res.one_particle_gap, Tolerances::kVisibility);
    if (res.counted_visibility_gap) {
        row("counted_visibility_gap", *res.counted_visibility_gap, Tolerances::kCountedVisibility);
    }
}

void print_report(std::ostream &out, const AnalysisReport &r, bool tolerance_report) {
    out << "state: " << (r.label.empty() ? "(unlabeled)" : r.label) << "\n";
    out << "amplitudes: ";
    print_amplitudes(out, r.amplitudes);
    out << "schmidt: kappa1 = " << num(r.kappa1) << "  kappa2 = " << num(r.kappa2) << "\n";
    out << "p = " << num(r.p) << "  P_E = " << num(r.degree_of_entanglement) << "\n";
    out << "concurrence = " << num(r.concurrence) << "\n";
    out << "shimony = " << num(r.shimony) << "\n";
    out << "chsh f_max: closed form = " << num(r.f_max_closed_form) << "  search = " << num(r.f_max_search)
        << "\n";
    out << "visibility: v12 = " << num(r.v12) << "  v1 = " << num(r.v1);
    if (r.v12_counts) {
        out << "  v12 (counts) = " << num(*r.v12_counts);
    }
    out << "\n";
    out << "decompositions: " << r.decompositions.size() << "\n";
    if (tolerance_report) {
        print_tolerances(out, r.residuals);
    }
    for (const auto &f : r.failures) {
        out << "failed: " << f << "\n";
    }
    out << "status: " << (r.failed() ? "FAILED" : "PASS") << "\n";
}

int cmd_analyze(const CliOptions &o, std::istream &in, std::ostream &out) {
    StateDocument doc = parse_state_document(read_all(o.input, in));
    AnalysisReport r = analyze(doc, o.analysis);
    if (o.json) {
        out << to_json(r).dump(2) << "\n";
    } else {
        print_report(out, r, o.tolerance_report);
    }
    return r.failed() ? kExitVerificationFailed : kExitOk;
}

int cmd_decompose(const CliOptions &o, std::istream &in, std::ostream &out) {
    StateDocument doc = parse_state_document(read_all(o.input, in));
    TwoQubitState s = to_state(doc);
    auto variant = parse_variant(o.variant);
    if (!variant) {
        throw InputError("--variant must be beta3zero or beta2zero");
    }
    std::vector<EFDecomposition> decs;
    if (!o.theta.empty()) {
        decs.push_back(decompose(s, parse_angle(o.theta), *variant));
    } else {
        decs = decomposition_family(s, o.analysis.samples);
    }

    bool failed = false;
    json entries = json::array();
    for (const auto &d : decs) {
        DecompositionResiduals res = residuals(d, s);
        failed = failed || !(res.worst() <= Tolerances::kDecomposition);
        DecompositionEntry e = make_entry(d);
        if (o.json) {
            entries.push_back({
                {"theta", e.theta},
                {"variant", e.variant},
                {"p", e.p},
                {"phi", e.phi},
                {"a", d.a},
                {"b", d.b},
                {"psi_e", amplitudes_to_json(e.psi_e)},
                {"psi_f", amplitudes_to_json(e.psi_f)},
                {"entangled_weight_zero", e.entangled_weight_zero},
                {"factorizable_weight_zero", e.factorizable_weight_zero},
                {"max_residual", res.worst()},
            });
        } else {
            print_entry(out, e);
            out << "  a = " << num(d.a, 17) << "  b = " << num(d.b, 17) << "  max residual = " << num(res.worst(), 3)
                << "\n";
        }
    }
    if (o.json) {
        out << json{{"label", doc.label.value_or("")}, {"decompositions", entries}}.dump(2) << "\n";
    }
    return failed ? kExitVerificationFailed : kExitOk;
}

int cmd_batch(const CliOptions &o, std::istream &in, std::ostream &out) {
    std::istringstream lines(read_all(o.input, in));
    std::string line;
    size_t line_no = 0;
    size_t count = 0;
    size_t failures = 0;
    ReportResiduals worst;
    while (std::getline(lines, line)) {
        line_no++;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        count++;
        try {
            AnalysisReport r = analyze(parse_state_document(line), o.analysis);
            const ReportResiduals &res = r.residuals;
            worst.orthogonality = std::max(worst.orthogonality, res.orthogonality);
            worst.maximally_entangled = std::max(worst.maximally_entangled, res.maximally_entangled);
            worst.factorizable = std::max(worst.factorizable, res.factorizable);
            worst.reconstruction = std::max(worst.reconstruction, res.reconstruction);
            worst.identity_a3 = std::max(worst.identity_a3, res.identity_a3);
            worst.p_spread = std::max(worst.p_spread, res.p_spread);
            worst.concurrence_gap = std::max(worst.concurrence_gap, res.concurrence_gap);
            worst.chsh_gap = std::max(worst.chsh_gap, res.chsh_gap);
            worst.visibility_gap = std::max(worst.visibility_gap, res.visibility_gap);
            worst.one_particle_gap = std::max(worst.one_particle_gap, res.one_particle_gap);
            failures += r.failed() ? 1 : 0;
            if (o.json) {
                out << json{{"line", line_no}, {"status", r.failed() ? "FAIL" : "PASS"}, {"report", to_json(r)}}.dump()
                    << "\n";
            } else {
                out << (r.failed() ? "FAIL" : "PASS") << " line " << line_no << " "
                    << (r.label.empty() ? "(unlabeled)" : r.label) << "  P_E = " << num(r.degree_of_entanglement)
                    << "  f_max = " << num(r.f_max_search) << "  v12 = " << num(r.v12) << "\n";
            }
        } catch (const InputError &e) {
            failures++;
            if (o.json) {
                out << json{{"line", line_no}, {"status", "FAIL"}, {"error", e.what()}}.dump() << "\n";
            } else {
                out << "FAIL line " << line_no << " " << e.what() << "\n";
            }
        }
    }

    if (o.json) {
        out << json{
                   {"summary",
                    {{"states", count},
                     {"passed", count - failures},
                     {"failed", failures},
                     {"max_reconstruction", worst.reconstruction},
                     {"max_orthogonality", worst.orthogonality},
                     {"max_identity_a3", worst.identity_a3},
                     {"max_chsh_gap", worst.chsh_gap},
                     {"max_visibility_gap", worst.visibility_gap}}}}
                   .dump()
            << "\n";
    } else {
        out << "summary: states = " << count << "  passed = " << count - failures << "  failed = " << failures
            << "\n";
        out << "max residuals: orthogonality = " << num(worst.orthogonality, 3)
            << "  maximally_entangled = " << num(worst.maximally_entangled, 3)
            << "  factorizable = " << num(worst.factorizable, 3) << "  reconstruction = " << num(worst.reconstruction, 3)
            << "  identity_a3 = " << num(worst.identity_a3, 3) << "  chsh_gap = " << num(worst.chsh_gap, 3)
            << "  visibility_gap = " << num(worst.visibility_gap, 3) << "\n";
    }
    return failures ? kExitVerificationFailed : kExitOk;
}

void add_common(CLI::App *cmd, CliOptions &o) {
    cmd->add_option("input", o.input, "JSON state document ('-' for stdin)")->capture_default_str();
    cmd->add_option("--samples", o.analysis.samples, "theta samples per variant for the decomposition family")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o.analysis.seed, "seed for stochastic steps")->capture_default_str();
    cmd->add_flag("--json", o.json, "machine-readable output");
}

void add_analysis(CLI::App *cmd, CliOptions &o) {
    cmd->add_option("--grid-steps", o.analysis.grid_steps, "CHSH grid angles per direction (>= 8)")
        ->capture_default_str()
        ->check(CLI::Range(size_t{8}, size_t{64}));
    cmd->add_option("--refine-iters", o.analysis.refine_iters, "CHSH coordinate-ascent sweeps")->capture_default_str();
    cmd->add_option("--sweep-resolution", o.analysis.sweep_resolution, "visibility grid points per parameter (>= 8)")
        ->capture_default_str()
        ->check(CLI::Range(size_t{8}, size_t{64}));
    cmd->add_option("--counts", o.analysis.counts, "also estimate V12 from this many sampled events (0 = off)")
        ->capture_default_str();
    cmd->add_flag("--tolerance-report", o.tolerance_report, "print every residual against its tolerance");
}

}  // namespace

int entangle::run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    CLI::App app{"Pure two-qubit entanglement analysis", "entangle"};
    app.require_subcommand(1);
    CliOptions o;

    CLI::App *analyze_cmd = app.add_subcommand("analyze", "full report for one state");
    add_common(analyze_cmd, o);
    add_analysis(analyze_cmd, o);

    CLI::App *decompose_cmd = app.add_subcommand("decompose", "entangled + product decompositions of one state");
    add_common(decompose_cmd, o);
    decompose_cmd->add_option("--theta", o.theta, "single decomposition at this phase (e.g. 0, pi, pi/2)");
    decompose_cmd->add_option("--variant", o.variant, "beta3zero or beta2zero (with --theta)")->capture_default_str();

    CLI::App *batch_cmd = app.add_subcommand("batch", "one JSON state document per line");
    add_common(batch_cmd, o);
    add_analysis(batch_cmd, o);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (analyze_cmd->parsed()) {
            return cmd_analyze(o, in, out);
        }
        if (decompose_cmd->parsed()) {
            return cmd_decompose(o, in, out);
        }
        return cmd_batch(o, in, out);
    } catch (const InputError &e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

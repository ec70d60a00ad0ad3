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

#include "entangle/decomposition.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace entangle;

namespace {

constexpr double kZeroWeight = 1e-12;

double max_deviation_from_half_identity(const Mat2 &rho) {
    return max_abs_diff(rho, 0.5 * Mat2::identity());
}

}  // namespace

ParamUnitaryPair ParamUnitaryPair::from_recipe(double a, double b, double theta) {
    ParamUnitaryPair r;
    r.mix1 = std::atan2(b, a);
    r.theta1 = 0;
    r.theta2 = theta;
    r.mix2 = std::atan2(a, b);
    r.phi1 = 0;
    r.phi2 = -theta;
    return r;
}

Complex ParamUnitaryPair::a1() const {
    return std::polar(std::cos(mix1), theta1);
}

Complex ParamUnitaryPair::a2() const {
    return std::polar(std::sin(mix1), theta2);
}

Complex ParamUnitaryPair::b1() const {
    return std::polar(std::cos(mix2), phi1);
}

Complex ParamUnitaryPair::b2() const {
    return std::polar(std::sin(mix2), phi2);
}

Mat2 ParamUnitaryPair::first() const {
    Complex x = a1();
    Complex y = a2();
    return Mat2{{x, -y, std::conj(y), std::conj(x)}};
}

Mat2 ParamUnitaryPair::second() const {
    Complex x = b1();
    Complex y = b2();
    return Mat2{{x, -y, std::conj(y), std::conj(x)}};
}

double ParamUnitaryPair::phase_sum() const {
    return theta1 + theta2 + phi1 + phi2;
}

TransformedAmplitudes entangle::transformed_amplitudes(double k1, double k2, const ParamUnitaryPair &pair) {
    Complex a1 = pair.a1();
    Complex a2 = pair.a2();
    Complex b1 = pair.b1();
    Complex b2 = pair.b2();
    return TransformedAmplitudes{{
        k1 * a1 * b1 + k2 * a2 * b2,
        k1 * a1 * std::conj(b2) - k2 * a2 * std::conj(b1),
        k1 * std::conj(a2) * b1 - k2 * std::conj(a1) * b2,
        k1 * std::conj(a2) * std::conj(b2) + k2 * std::conj(a1) * std::conj(b1),
    }};
}

std::string_view entangle::variant_name(Variant v) {
    return v == Variant::Beta3Zero ? "beta3zero" : "beta2zero";
}

std::optional<Variant> entangle::parse_variant(std::string_view text) {
    if (text == "beta3zero") {
        return Variant::Beta3Zero;
    }
    if (text == "beta2zero") {
        return Variant::Beta2Zero;
    }
    return std::nullopt;
}

Vec4 EFDecomposition::reconstruct() const {
    return Complex(p) * psi_e.amplitudes() + std::polar(factorizable_weight, phi) * psi_f.amplitudes();
}

EFDecomposition entangle::decompose(const TwoQubitState &s, double theta, Variant variant) {
    SchmidtForm sf = schmidt(s);
    double k1 = sf.kappa1;
    double k2 = sf.kappa2;
    double a = std::sqrt(k1 / (k1 + k2));
    double b = std::sqrt(k2 / (k1 + k2));
    if (variant == Variant::Beta2Zero) {
        std::swap(a, b);
    }
    ParamUnitaryPair pair = ParamUnitaryPair::from_recipe(a, b, theta);
    TransformedAmplitudes beta = transformed_amplitudes(k1, k2, pair);

    // x_j = sum_i U1(i, j) u_i, so [u1 u2] = [x1 x2] U1^dagger.
    Mat2 us = Mat2::from_columns(sf.basis_a[0], sf.basis_a[1]) * pair.first().adjoint();
    Mat2 vs = Mat2::from_columns(sf.basis_b[0], sf.basis_b[1]) * pair.second().adjoint();
    Vec2 u1 = us.column(0);
    Vec2 u2 = us.column(1);
    Vec2 v1 = vs.column(0);
    Vec2 v2 = vs.column(1);
    Complex frame_phase = std::polar(1.0, sf.global_phase);

    Complex diag = 0.5 * (beta.beta[0] + beta.beta[3]);
    double p = std::min(1.0, std::sqrt(2.0) * std::abs(diag));
    Complex entangled_phase = frame_phase * (std::abs(diag) > 0 ? diag / std::abs(diag) : Complex(1));

    Vec4 psi_e = (entangled_phase / std::sqrt(2.0)) * (kron(u1, v1) + kron(u2, v2));

    Complex coef;
    Vec4 product_part;
    double phi;
    if (variant == Variant::Beta3Zero) {
        coef = frame_phase * beta.beta[1];
        product_part = kron(u1, v2);
        phi = theta;
    } else {
        coef = frame_phase * beta.beta[2];
        product_part = kron(u2, v1);
        phi = -theta;
    }

    bool entangled_zero = p <= kZeroWeight;
    bool factorizable_zero = std::abs(coef) <= kZeroWeight;
    double weight = std::abs(coef);
    if (entangled_zero) {
        p = 0;
        weight = 1;
    }
    if (factorizable_zero) {
        p = 1;
        weight = 0;
        phi = 0;
    } else {
        // Whatever phase coef carries beyond phi (rounding, or the whole
        // phase when p vanishes) is folded into psi_f.
        if (entangled_zero) {
            phi = 0;
        }
        Complex residual = coef / std::abs(coef) * std::polar(1.0, -phi);
        product_part = residual * product_part;
    }

    return EFDecomposition{
        p,
        weight,
        phi,
        make_state(psi_e, true),
        make_state(product_part, true),
        variant,
        a,
        b,
        theta,
        pair,
        beta,
        entangled_zero,
        factorizable_zero,
    };
}

std::vector<EFDecomposition> entangle::decomposition_family(const TwoQubitState &s, size_t theta_samples) {
    if (theta_samples == 0) {
        throw std::invalid_argument("decomposition_family: theta_samples must be >= 1");
    }
    std::vector<EFDecomposition> out;
    out.reserve(2 * theta_samples);
    for (Variant v : {Variant::Beta3Zero, Variant::Beta2Zero}) {
        for (size_t k = 0; k < theta_samples; k++) {
            double theta = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(theta_samples);
            out.push_back(decompose(s, theta, v));
        }
    }
    return out;
}

double entangle::degree_of_entanglement(const TwoQubitState &s) {
    return std::min(1.0, 2 * std::abs(s[0] * s[3] - s[1] * s[2]));
}

double entangle::degree_of_entanglement_schmidt(const TwoQubitState &s) {
    SchmidtForm sf = schmidt(s);
    return std::min(1.0, 2 * sf.kappa1 * sf.kappa2);
}

bool entangle::is_maximally_entangled(const TwoQubitState &s, double tol) {
    return max_deviation_from_half_identity(reduced_density(s, Subsystem::First)) <= tol &&
           max_deviation_from_half_identity(reduced_density(s, Subsystem::Second)) <= tol;
}

bool entangle::is_factorizable(const TwoQubitState &s, double tol) {
    return std::abs(coefficient_matrix(s).det()) <= tol;
}

std::optional<std::pair<Vec2, Vec2>> entangle::factorize(const TwoQubitState &s, double tol) {
    if (!is_factorizable(s, tol)) {
        return std::nullopt;
    }
    SchmidtForm sf = schmidt(s);
    return std::make_pair(sf.basis_a[0], sf.basis_b[0]);
}

double entangle::verify_identity_a3(const EFDecomposition &d, const TwoQubitState &source) {
    const TwoQubitState &e = d.psi_e;
    Complex diag_product = e[0] * e[3];
    Complex off_product = -e[1] * e[2];
    Complex pick = std::abs(diag_product) >= std::abs(off_product) ? diag_product : off_product;
    Complex two_gamma = std::abs(pick) > 0 ? pick / std::abs(pick) : Complex(1);
    Complex lhs = source[0] * source[3] - source[1] * source[2];
    return std::abs(lhs - 0.5 * d.p * d.p * two_gamma);
}

double DecompositionResiduals::worst() const {
    return std::max({orthogonality, maximally_entangled, factorizable, reconstruction, identity_a3});
}

DecompositionResiduals entangle::residuals(const EFDecomposition &d, const TwoQubitState &source) {
    return DecompositionResiduals{
        std::abs(inner(d.psi_e.amplitudes(), d.psi_f.amplitudes())),
        std::max(
            max_deviation_from_half_identity(reduced_density(d.psi_e, Subsystem::First)),
            max_deviation_from_half_identity(reduced_density(d.psi_e, Subsystem::Second))),
        std::abs(coefficient_matrix(d.psi_f).det()),
        max_abs_diff(d.reconstruct(), source.amplitudes()),
        verify_identity_a3(d, source),
    };
}

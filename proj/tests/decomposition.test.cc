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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "support/random_states.h"

using namespace entangle;
using namespace entangle::testing;

namespace {

const double kPi = std::numbers::pi;
const double kR2 = 1 / std::sqrt(2.0);

Complex det_of(const Vec4 &a) {
    return a[0] * a[3] - a[1] * a[2];
}

/// Largest entry of |rho - I/2| over both subsystems, from explicit partial traces.
double distance_from_maximally_mixed(const Vec4 &a) {
    double worst = 0;
    for (size_t i = 0; i < 2; i++) {
        for (size_t j = 0; j < 2; j++) {
            Complex first = a[2 * i] * std::conj(a[2 * j]) + a[2 * i + 1] * std::conj(a[2 * j + 1]);
            Complex second = a[i] * std::conj(a[j]) + a[2 + i] * std::conj(a[2 + j]);
            double target = i == j ? 0.5 : 0.0;
            worst = std::max(worst, std::abs(first - target));
            worst = std::max(worst, std::abs(second - target));
        }
    }
    return worst;
}

/// Checks the four defining properties with oracles that only use raw amplitudes.
void expect_valid(const EFDecomposition &d, const TwoQubitState &s, double tol) {
    const Vec4 &e = d.psi_e.amplitudes();
    const Vec4 &f = d.psi_f.amplitudes();
    EXPECT_LE(std::abs(inner(e, f)), tol);
    EXPECT_LE(distance_from_maximally_mixed(e), tol);
    EXPECT_LE(std::abs(det_of(f)), tol);
    Vec4 rebuilt = Complex(d.p) * e + std::polar(d.factorizable_weight, d.phi) * f;
    EXPECT_LE(max_abs_diff(rebuilt, s.amplitudes()), tol);
    EXPECT_NEAR(d.p * d.p, 2 * std::abs(det_of(s.amplitudes())), 1e-12);
    EXPECT_NEAR(d.p * d.p + d.factorizable_weight * d.factorizable_weight, 1, 1e-12);
}

}  // namespace

TEST(decomposition, recipe_unitaries) {
    double a = 0.6;
    double b = 0.8;
    double t = 1.2;
    ParamUnitaryPair pair = ParamUnitaryPair::from_recipe(a, b, t);
    Mat2 u1{{a, -b * std::polar(1.0, t), b * std::polar(1.0, -t), a}};
    Mat2 u2{{b, -a * std::polar(1.0, -t), a * std::polar(1.0, t), b}};
    EXPECT_LE(max_abs_diff(pair.first(), u1), 1e-15);
    EXPECT_LE(max_abs_diff(pair.second(), u2), 1e-15);
    EXPECT_TRUE(is_unitary(pair.first(), 1e-12));
    EXPECT_TRUE(is_unitary(pair.second(), 1e-12));
}

TEST(decomposition, general_pair_is_unitary) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 500; trial++) {
        ParamUnitaryPair p = random_pair(rng);
        EXPECT_TRUE(is_unitary(p.first(), 1e-12));
        EXPECT_TRUE(is_unitary(p.second(), 1e-12));
        EXPECT_NEAR(std::norm(p.a1()) + std::norm(p.a2()), 1, 1e-12);
        EXPECT_NEAR(std::norm(p.b1()) + std::norm(p.b2()), 1, 1e-12);
        EXPECT_NEAR(p.phase_sum(), p.theta1 + p.theta2 + p.phi1 + p.phi2, 1e-15);
    }
}

TEST(decomposition, transformed_amplitudes_match_matrix_action) {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 500; trial++) {
        TwoQubitState s = random_state(rng);
        SchmidtForm f = schmidt(s);
        ParamUnitaryPair p = random_pair(rng);
        // Express the state in the rotated product basis |u_i, v_j> where
        // [u1 u2] = X U1^dagger and [v1 v2] = Y U2^dagger.
        Mat2 x = Mat2::from_columns(f.basis_a[0], f.basis_a[1]);
        Mat2 y = Mat2::from_columns(f.basis_b[0], f.basis_b[1]);
        Mat2 u = x * p.first().adjoint();
        Mat2 v = y * p.second().adjoint();
        Vec4 beta = transformed_amplitudes(f.kappa1, f.kappa2, p).beta;
        Vec4 rebuilt{};
        for (size_t i = 0; i < 2; i++) {
            for (size_t j = 0; j < 2; j++) {
                rebuilt = rebuilt + beta[2 * i + j] * kron(u.column(i), v.column(j));
            }
        }
        EXPECT_LE(max_abs_diff(rebuilt, s.amplitudes()), 1e-12);
        EXPECT_NEAR(norm(beta), 1, 1e-12);
    }
}

TEST(decomposition, worked_example_theta_zero) {
    TwoQubitState s = three_term_state();
    EFDecomposition d = decompose(s, 0, Variant::Beta3Zero);
    EXPECT_NEAR(d.p * d.p, 2.0 / 3, 1e-12);
    EXPECT_LE(distance_up_to_phase(d.psi_e.amplitudes(), Vec4{kR2, 0, 0, kR2}), 1e-10);
    EXPECT_LE(distance_up_to_phase(d.psi_f.amplitudes(), Vec4{0, 1, 0, 0}), 1e-10);
    EXPECT_NEAR(d.a, std::sqrt((5 + std::sqrt(5.0)) / 10), 1e-12);
    EXPECT_NEAR(d.b, std::sqrt((5 - std::sqrt(5.0)) / 10), 1e-12);
    expect_valid(d, s, 1e-12);
}

TEST(decomposition, worked_example_theta_pi) {
    TwoQubitState s = three_term_state();
    EFDecomposition d = decompose(s, kPi, Variant::Beta3Zero);
    EXPECT_NEAR(d.p * d.p, 2.0 / 3, 1e-12);
    double c = std::sqrt(2.0) / 10;
    EXPECT_LE(distance_up_to_phase(d.psi_e.amplitudes(), Vec4{3 * c, 4 * c, -4 * c, 3 * c}), 1e-10);
    EXPECT_LE(distance_up_to_phase(d.psi_f.amplitudes(), Vec4{0.4, 0.2, 0.8, 0.4}), 1e-10);
    EXPECT_NEAR(d.a, std::sqrt((5 + std::sqrt(5.0)) / 10), 1e-12);
    EXPECT_NEAR(d.b, std::sqrt((5 - std::sqrt(5.0)) / 10), 1e-12);
    expect_valid(d, s, 1e-12);
}

TEST(decomposition, bell_state_has_zero_factorizable_weight) {
    for (double theta : {0.0, 1.0, kPi}) {
        for (Variant v : {Variant::Beta3Zero, Variant::Beta2Zero}) {
            EFDecomposition d = decompose(TwoQubitState::bell(), theta, v);
            EXPECT_NEAR(d.p, 1, 1e-12);
            EXPECT_TRUE(d.factorizable_weight_zero);
            EXPECT_FALSE(d.entangled_weight_zero);
            EXPECT_EQ(d.phi, 0);
            expect_valid(d, TwoQubitState::bell(), 1e-12);
        }
    }
}

TEST(decomposition, product_state_has_zero_entangled_weight) {
    for (size_t k = 0; k < 4; k++) {
        TwoQubitState s = TwoQubitState::basis(k);
        for (Variant v : {Variant::Beta3Zero, Variant::Beta2Zero}) {
            EFDecomposition d = decompose(s, 0.3, v);
            EXPECT_EQ(d.p, 0);
            EXPECT_TRUE(d.entangled_weight_zero);
            EXPECT_EQ(d.phi, 0);
            EXPECT_LE(distance_up_to_phase(d.psi_f.amplitudes(), s.amplitudes()), 1e-12);
            expect_valid(d, s, 1e-12);
        }
    }
}

TEST(decomposition, variant_shapes) {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 200; trial++) {
        TwoQubitState s = random_state(rng);
        double theta = 2 * kPi * trial / 200.0;

        EFDecomposition d3 = decompose(s, theta, Variant::Beta3Zero);
        const Vec4 &b3 = d3.beta.beta;
        EXPECT_LE(std::abs(b3[2]), 1e-12);
        EXPECT_LE(std::abs(b3[0] - b3[3]), 1e-12);
        EXPECT_NEAR(std::abs(b3[1]), d3.factorizable_weight, 1e-12);

        EFDecomposition d2 = decompose(s, theta, Variant::Beta2Zero);
        const Vec4 &b2 = d2.beta.beta;
        EXPECT_LE(std::abs(b2[1]), 1e-12);
        EXPECT_LE(std::abs(b2[0] - b2[3]), 1e-12);
        EXPECT_NEAR(std::abs(b2[2]), d2.factorizable_weight, 1e-12);
        EXPECT_GT(std::abs(b2[2]), 0);
    }
}

TEST(decomposition, family_of_worked_example) {
    TwoQubitState s = three_term_state();
    auto family = decomposition_family(s, 64);
    ASSERT_EQ(family.size(), 128u);
    for (size_t k = 0; k < family.size(); k++) {
        EXPECT_NEAR(family[k].p * family[k].p, 2.0 / 3, 1e-12);
        EXPECT_EQ(family[k].variant, k < 64 ? Variant::Beta3Zero : Variant::Beta2Zero);
        EXPECT_NEAR(family[k].theta, 2 * kPi * (k % 64) / 64, 1e-15);
        expect_valid(family[k], s, 1e-10);
    }
}

TEST(decomposition, family_of_product_state) {
    for (const auto &d : decomposition_family(TwoQubitState::basis(1), 16)) {
        EXPECT_EQ(d.p, 0);
    }
    EXPECT_THROW(decomposition_family(TwoQubitState::basis(1), 0), std::invalid_argument);
}

TEST(decomposition, family_random_properties) {
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 100; trial++) {
        TwoQubitState s = random_state(rng);
        double expected_p = std::sqrt(2 * std::abs(det_of(s.amplitudes())));
        auto family = decomposition_family(s, 32);
        double lo = family[0].p;
        double hi = family[0].p;
        for (const auto &d : family) {
            lo = std::min(lo, d.p);
            hi = std::max(hi, d.p);
            EXPECT_NEAR(d.p, expected_p, 1e-12);
            expect_valid(d, s, 1e-10);
            EXPECT_LE(residuals(d, s).worst(), 1e-10);
        }
        EXPECT_LE(hi - lo, 1e-12);
    }
}

TEST(decomposition, distinct_theta_gives_distinct_pairs) {
    TwoQubitState s = three_term_state();
    EFDecomposition a = decompose(s, 0, Variant::Beta3Zero);
    EFDecomposition b = decompose(s, kPi / 2, Variant::Beta3Zero);
    EXPECT_GT(distance_up_to_phase(a.psi_e.amplitudes(), b.psi_e.amplitudes()), 0.1);
}

TEST(decomposition, degree_of_entanglement_examples) {
    EXPECT_NEAR(degree_of_entanglement(three_term_state()), 2.0 / 3, 1e-15);
    EXPECT_NEAR(degree_of_entanglement(TwoQubitState::bell()), 1, 1e-15);
    EXPECT_EQ(degree_of_entanglement(TwoQubitState::basis(2)), 0);
    EXPECT_NEAR(degree_of_entanglement_schmidt(three_term_state()), 2.0 / 3, 1e-12);
}

TEST(decomposition, degree_of_entanglement_closed_forms_agree) {
    std::mt19937_64 rng(35);
    for (int trial = 0; trial < 5000; trial++) {
        TwoQubitState s = random_state(rng);
        double pe = degree_of_entanglement(s);
        EXPECT_GE(pe, 0);
        EXPECT_LE(pe, 1);
        EXPECT_NEAR(pe, degree_of_entanglement_schmidt(s), 1e-12);
    }
}

TEST(decomposition, local_unitary_invariance) {
    std::mt19937_64 rng(36);
    for (int trial = 0; trial < 2000; trial++) {
        TwoQubitState s = random_state(rng);
        TwoQubitState t = apply_local(random_unitary(rng), random_unitary(rng), s);
        EXPECT_NEAR(degree_of_entanglement(t), degree_of_entanglement(s), 1e-10);
    }
}

TEST(decomposition, is_maximally_entangled_examples) {
    EXPECT_TRUE(is_maximally_entangled(TwoQubitState::bell(), 1e-12));
    double c = std::sqrt(2.0) / 10;
    EXPECT_TRUE(is_maximally_entangled(make_state({3 * c, 4 * c, -4 * c, 3 * c}), 1e-12));
    EXPECT_FALSE(is_maximally_entangled(three_term_state(), 1e-6));
}

TEST(decomposition, is_factorizable_examples) {
    EXPECT_TRUE(is_factorizable(TwoQubitState::basis(1), 1e-12));
    TwoQubitState f = make_state({0.4, 0.2, 0.8, 0.4});
    EXPECT_TRUE(is_factorizable(f, 1e-12));
    EXPECT_FALSE(is_factorizable(TwoQubitState::bell(), 1e-6));

    auto factors = factorize(f, 1e-12);
    ASSERT_TRUE(factors.has_value());
    EXPECT_LE(distance_up_to_phase(kron(factors->first, factors->second), f.amplitudes()), 1e-12);
    EXPECT_FALSE(factorize(TwoQubitState::bell(), 1e-6).has_value());
}

TEST(decomposition, factorize_random_products) {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 500; trial++) {
        Vec2 x{random_complex(rng), random_complex(rng)};
        Vec2 y{random_complex(rng), random_complex(rng)};
        TwoQubitState s = TwoQubitState::product(x, y);
        auto factors = factorize(s, 1e-10);
        ASSERT_TRUE(factors.has_value());
        EXPECT_LE(max_abs_diff(kron(factors->first, factors->second), s.amplitudes()), 1e-12);
    }
}

TEST(decomposition, identity_a3_examples) {
    TwoQubitState s = three_term_state();
    EXPECT_LE(verify_identity_a3(decompose(s, 0, Variant::Beta3Zero), s), 1e-12);

    TwoQubitState bell = TwoQubitState::bell();
    EFDecomposition d = decompose(bell, 0, Variant::Beta3Zero);
    EXPECT_LE(verify_identity_a3(d, bell), 1e-12);
    EXPECT_NEAR(std::abs(det_of(bell.amplitudes())), 0.5, 1e-15);
}

TEST(decomposition, identity_a3_random) {
    std::mt19937_64 rng(38);
    std::uniform_real_distribution<double> angle(0, 2 * kPi);
    for (int trial = 0; trial < 10000; trial++) {
        TwoQubitState s = random_state(rng);
        Variant v = trial % 2 ? Variant::Beta2Zero : Variant::Beta3Zero;
        EFDecomposition d = decompose(s, angle(rng), v);
        double residual = verify_identity_a3(d, s);
        EXPECT_LE(residual, 1e-10);
        // The determinant of the source equals p^2 times that of psi_e once
        // the cross terms cancel by orthogonality.
        Complex oracle = det_of(s.amplitudes()) - d.p * d.p * det_of(d.psi_e.amplitudes());
        EXPECT_LE(std::abs(oracle), 1e-10);
    }
}

TEST(decomposition, variant_names_round_trip) {
    for (Variant v : {Variant::Beta3Zero, Variant::Beta2Zero}) {
        EXPECT_EQ(parse_variant(variant_name(v)), v);
    }
    EXPECT_FALSE(parse_variant("beta1zero").has_value());
}

TEST(decomposition, deterministic) {
    TwoQubitState s = three_term_state();
    EFDecomposition a = decompose(s, 0.77, Variant::Beta2Zero);
    EFDecomposition b = decompose(s, 0.77, Variant::Beta2Zero);
    EXPECT_EQ(a.psi_e.amplitudes(), b.psi_e.amplitudes());
    EXPECT_EQ(a.psi_f.amplitudes(), b.psi_f.amplitudes());
    EXPECT_EQ(a.phi, b.phi);
}

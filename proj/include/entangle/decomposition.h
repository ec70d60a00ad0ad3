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

#ifndef ENTANGLE_DECOMPOSITION_H
#define ENTANGLE_DECOMPOSITION_H

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "entangle/numerics.h"
#include "entangle/qstate.h"

/// Splitting a two-qubit pure state into a maximally entangled part and an
/// orthogonal product part,
///
///     |psi> = p |psi_e> + sqrt(1 - p^2) e^{i phi} |psi_f>,
///
/// and the weight P_E = p^2 that is the same for every such split.
namespace entangle {

/// A pair of SU(2) matrices
///
///     U1 = [[a1, -a2], [conj(a2), conj(a1)]],   a1 = cos(mix1) e^{i theta1}, a2 = sin(mix1) e^{i theta2}
///     U2 = [[b1, -b2], [conj(b2), conj(b1)]],   b1 = cos(mix2) e^{i phi1},   b2 = sin(mix2) e^{i phi2}
///
/// Column j of U1 gives the old basis vector x_j in the new basis {u1, u2}
/// (and likewise U2 for y_j in {v1, v2}), so amplitudes transform as
/// (U1 (x) U2) alpha.
struct ParamUnitaryPair {
    double mix1 = 0;
    double mix2 = 0;
    double theta1 = 0;
    double theta2 = 0;
    double phi1 = 0;
    double phi2 = 0;

    /// The one-phase family U1 = [[a, -b e^{it}], [b e^{-it}, a]],
    /// U2 = [[b, -a e^{-it}], [a e^{it}, b]] with a, b >= 0, a^2 + b^2 = 1.
    static ParamUnitaryPair from_recipe(double a, double b, double theta);

    Complex a1() const;
    Complex a2() const;
    Complex b1() const;
    Complex b2() const;
    Mat2 first() const;
    Mat2 second() const;
    /// theta1 + theta2 + phi1 + phi2.
    double phase_sum() const;
};

/// Amplitudes of a Schmidt-form state over the rotated product basis |u_i, v_j>.
struct TransformedAmplitudes {
    Vec4 beta;
};

/// beta = (U1 (x) U2) applied to kappa1 |00> + kappa2 |11>, written out term by term.
TransformedAmplitudes transformed_amplitudes(double kappa1, double kappa2, const ParamUnitaryPair &pair);

enum class Variant {
    /// beta3 = 0: product part on |u1, v2>.
    Beta3Zero,
    /// beta2 = 0: product part on |u2, v1>.
    Beta2Zero,
};

std::string_view variant_name(Variant v);
std::optional<Variant> parse_variant(std::string_view text);

struct EFDecomposition {
    double p;
    /// sqrt(1 - p^2), read off the transformed amplitude rather than from p so
    /// it stays accurate when p is close to 1.
    double factorizable_weight;
    double phi;
    TwoQubitState psi_e;
    TwoQubitState psi_f;
    Variant variant;

    /// Recipe parameters. a = sqrt(k1 / (k1 + k2)), b = sqrt(k2 / (k1 + k2)) for
    /// Beta3Zero and swapped for Beta2Zero.
    double a;
    double b;
    double theta;
    ParamUnitaryPair generator;
    TransformedAmplitudes beta;

    /// p below 1e-12: psi_e is a placeholder and phi is 0 by convention.
    bool entangled_weight_zero;
    /// sqrt(1 - p^2) below 1e-12: psi_f is a placeholder and phi is 0 by convention.
    bool factorizable_weight_zero;

    Vec4 reconstruct() const;
};

/// Builds the decomposition generated by the recipe unitary pair with free phase theta.
EFDecomposition decompose(const TwoQubitState &s, double theta, Variant variant);

/// theta_k = 2 pi k / theta_samples for k < theta_samples, first all Beta3Zero
/// then all Beta2Zero. Throws std::invalid_argument if theta_samples == 0.
std::vector<EFDecomposition> decomposition_family(const TwoQubitState &s, size_t theta_samples);

/// P_E = 2 |a1 a4 - a2 a3|.
double degree_of_entanglement(const TwoQubitState &s);
/// P_E = 2 kappa1 kappa2, via the Schmidt coefficients.
double degree_of_entanglement_schmidt(const TwoQubitState &s);

/// Both reduced density matrices within tol of I/2 (entrywise).
bool is_maximally_entangled(const TwoQubitState &s, double tol);
/// |det(coefficient_matrix)| <= tol.
bool is_factorizable(const TwoQubitState &s, double tol);
/// Closest product factors (psi1, psi2), both unit vectors, from the leading
/// singular pair. Returns nullopt when the state is not factorizable at tol.
std::optional<std::pair<Vec2, Vec2>> factorize(const TwoQubitState &s, double tol);

/// |(a1 a4 - a2 a3) - p^2 e^{2 i gamma} / 2|, with gamma the global phase of
/// psi_e in the form e^{i gamma}(c1|00> + c2|01> - conj(c2)|10> + conj(c1)|11>).
double verify_identity_a3(const EFDecomposition &d, const TwoQubitState &source);

struct DecompositionResiduals {
    double orthogonality;        // |<psi_e|psi_f>|
    double maximally_entangled;  // max entry of |rho_k(psi_e) - I/2| over both subsystems
    double factorizable;         // |det| of psi_f's coefficient matrix
    double reconstruction;       // max amplitude error of p psi_e + ... against source
    double identity_a3;

    double worst() const;
};

DecompositionResiduals residuals(const EFDecomposition &d, const TwoQubitState &source);

}  // namespace entangle

#endif

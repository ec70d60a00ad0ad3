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

#include "entangle/qstate.h"

#include <cmath>
#include <stdexcept>
#include <string>

using namespace entangle;

namespace {

constexpr double kNormTolerance = 1e-9;

}  // namespace

TwoQubitState entangle::make_state(const Vec4 &raw, bool normalize) {
    if (!all_finite(raw)) {
        throw std::invalid_argument("make_state: non-finite amplitude");
    }
    double n = norm(raw);
    if (n == 0) {
        throw std::invalid_argument("make_state: zero vector is not a state");
    }
    if (!normalize && std::abs(n - 1) > kNormTolerance) {
        throw std::invalid_argument("make_state: norm " + std::to_string(n) + " is not 1 (pass normalize=true)");
    }
    return TwoQubitState((1 / n) * raw);
}

TwoQubitState TwoQubitState::basis(size_t index) {
    if (index >= 4) {
        throw std::out_of_range("TwoQubitState::basis: index must be < 4");
    }
    Vec4 v{};
    v[index] = 1;
    return TwoQubitState(v);
}

TwoQubitState TwoQubitState::bell() {
    return make_state({1, 0, 0, 1}, true);
}

TwoQubitState TwoQubitState::product(const Vec2 &first, const Vec2 &second) {
    return make_state(kron(first, second), true);
}

Mat2 entangle::coefficient_matrix(const TwoQubitState &s) {
    return Mat2{{s[0], s[1], s[2], s[3]}};
}

TwoQubitState entangle::apply_local(const Mat2 &first, const Mat2 &second, const TwoQubitState &s) {
    return make_state(tensor2x2(first, second) * s.amplitudes(), true);
}

Vec4 SchmidtForm::reconstruct() const {
    Vec4 v = Complex(kappa1) * kron(basis_a[0], basis_b[0]) + Complex(kappa2) * kron(basis_a[1], basis_b[1]);
    return std::polar(1.0, global_phase) * v;
}

SchmidtForm entangle::schmidt(const TwoQubitState &s) {
    // M = U diag(k) V^dagger  =>  psi = sum_k kappa_k |u_k> (x) |conj(v_k)>.
    Svd2 d = svd2(coefficient_matrix(s));
    Mat2 y = d.v.conj();
    return SchmidtForm{
        d.sigma1,
        d.sigma2,
        {d.u.column(0), d.u.column(1)},
        {y.column(0), y.column(1)},
        0.0,
    };
}

Mat2 entangle::reduced_density(const TwoQubitState &s, Subsystem which) {
    Mat2 m = coefficient_matrix(s);
    if (which == Subsystem::First) {
        return m * m.adjoint();
    }
    return m.transpose() * m.conj();
}

MagicCoordinates entangle::to_magic(const TwoQubitState &s) {
    const double r = 1 / std::sqrt(2.0);
    return MagicCoordinates{{
        r * (s[0] + s[3]),
        -kI * r * (s[0] - s[3]),
        -kI * r * (s[1] + s[2]),
        r * (s[1] - s[2]),
    }};
}

Vec4 entangle::from_magic(const MagicCoordinates &m) {
    const double r = 1 / std::sqrt(2.0);
    const Vec4 &b = m.beta;
    Complex e1 = r * b[0];
    Complex e2 = kI * r * b[1];
    Complex e3 = kI * r * b[2];
    Complex e4 = r * b[3];
    return {e1 + e2, e3 + e4, e3 - e4, e1 - e2};
}

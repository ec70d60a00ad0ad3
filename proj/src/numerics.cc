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

#include "entangle/numerics.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

using namespace entangle;

namespace {

constexpr double kDegenerateSigma = 1e-12;

// Rotates v so that its first nonzero entry is real and non-negative.
Vec2 fix_phase(Vec2 v) {
    size_t k = std::abs(v[0]) > 0 ? 0 : 1;
    double mag = std::abs(v[k]);
    if (mag == 0) {
        return v;
    }
    Complex rot = std::conj(v[k]) / mag;
    return {v[0] * rot, v[1] * rot};
}

Vec2 orthogonal_complement(const Vec2 &v) {
    return {-std::conj(v[1]), std::conj(v[0])};
}

Vec2 normalized(const Vec2 &v) {
    double n = norm(v);
    return {v[0] / n, v[1] / n};
}

}  // namespace

bool entangle::is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

bool entangle::all_finite(std::span<const Complex> values) {
    return std::all_of(values.begin(), values.end(), [](Complex z) {
        return is_finite(z);
    });
}

Complex entangle::inner(const Vec2 &a, const Vec2 &b) {
    return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

Complex entangle::inner(const Vec4 &a, const Vec4 &b) {
    Complex total = 0;
    for (size_t k = 0; k < 4; k++) {
        total += std::conj(a[k]) * b[k];
    }
    return total;
}

double entangle::norm(const Vec2 &a) {
    return std::sqrt(std::norm(a[0]) + std::norm(a[1]));
}

double entangle::norm(const Vec4 &a) {
    double total = 0;
    for (const auto &z : a) {
        total += std::norm(z);
    }
    return std::sqrt(total);
}

Vec4 entangle::kron(const Vec2 &a, const Vec2 &b) {
    return {a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]};
}

Vec4 entangle::operator+(const Vec4 &a, const Vec4 &b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

Vec4 entangle::operator-(const Vec4 &a, const Vec4 &b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

Vec4 entangle::operator*(Complex scale, const Vec4 &a) {
    return {scale * a[0], scale * a[1], scale * a[2], scale * a[3]};
}

Vec2 entangle::operator*(Complex scale, const Vec2 &a) {
    return {scale * a[0], scale * a[1]};
}

double entangle::max_abs_diff(const Vec4 &a, const Vec4 &b) {
    double worst = 0;
    for (size_t k = 0; k < 4; k++) {
        worst = std::max(worst, std::abs(a[k] - b[k]));
    }
    return worst;
}

Mat2 Mat2::identity() {
    return diag(1, 1);
}

Mat2 Mat2::diag(Complex d0, Complex d1) {
    Mat2 r;
    r(0, 0) = d0;
    r(1, 1) = d1;
    return r;
}

Mat2 Mat2::from_columns(const Vec2 &c0, const Vec2 &c1) {
    Mat2 r;
    r(0, 0) = c0[0];
    r(1, 0) = c0[1];
    r(0, 1) = c1[0];
    r(1, 1) = c1[1];
    return r;
}

Mat2 Mat2::pauli_x() {
    return Mat2{{0, 1, 1, 0}};
}

Mat2 Mat2::pauli_y() {
    return Mat2{{0, -kI, kI, 0}};
}

Mat2 Mat2::pauli_z() {
    return diag(1, -1);
}

Vec2 Mat2::column(size_t col) const {
    return {(*this)(0, col), (*this)(1, col)};
}

Mat2 Mat2::adjoint() const {
    return Mat2{{std::conj(e[0]), std::conj(e[2]), std::conj(e[1]), std::conj(e[3])}};
}

Mat2 Mat2::transpose() const {
    return Mat2{{e[0], e[2], e[1], e[3]}};
}

Mat2 Mat2::conj() const {
    return Mat2{{std::conj(e[0]), std::conj(e[1]), std::conj(e[2]), std::conj(e[3])}};
}

Complex Mat2::trace() const {
    return e[0] + e[3];
}

Complex Mat2::det() const {
    return e[0] * e[3] - e[1] * e[2];
}

Mat2 Mat2::operator*(const Mat2 &o) const {
    Mat2 r;
    for (size_t i = 0; i < 2; i++) {
        for (size_t j = 0; j < 2; j++) {
            r(i, j) = (*this)(i, 0) * o(0, j) + (*this)(i, 1) * o(1, j);
        }
    }
    return r;
}

Mat2 Mat2::operator+(const Mat2 &o) const {
    Mat2 r;
    for (size_t k = 0; k < 4; k++) {
        r.e[k] = e[k] + o.e[k];
    }
    return r;
}

Mat2 Mat2::operator-(const Mat2 &o) const {
    Mat2 r;
    for (size_t k = 0; k < 4; k++) {
        r.e[k] = e[k] - o.e[k];
    }
    return r;
}

Vec2 Mat2::operator*(const Vec2 &v) const {
    return {e[0] * v[0] + e[1] * v[1], e[2] * v[0] + e[3] * v[1]};
}

Mat2 entangle::operator*(Complex scale, const Mat2 &m) {
    Mat2 r;
    for (size_t k = 0; k < 4; k++) {
        r.e[k] = scale * m.e[k];
    }
    return r;
}

double entangle::max_abs_diff(const Mat2 &a, const Mat2 &b) {
    double worst = 0;
    for (size_t k = 0; k < 4; k++) {
        worst = std::max(worst, std::abs(a.e[k] - b.e[k]));
    }
    return worst;
}

Mat4 Mat4::identity() {
    Mat4 r;
    for (size_t k = 0; k < 4; k++) {
        r(k, k) = 1;
    }
    return r;
}

Mat4 Mat4::adjoint() const {
    Mat4 r;
    for (size_t i = 0; i < 4; i++) {
        for (size_t j = 0; j < 4; j++) {
            r(i, j) = std::conj((*this)(j, i));
        }
    }
    return r;
}

Mat4 Mat4::operator*(const Mat4 &o) const {
    Mat4 r;
    for (size_t i = 0; i < 4; i++) {
        for (size_t j = 0; j < 4; j++) {
            Complex total = 0;
            for (size_t k = 0; k < 4; k++) {
                total += (*this)(i, k) * o(k, j);
            }
            r(i, j) = total;
        }
    }
    return r;
}

Vec4 Mat4::operator*(const Vec4 &v) const {
    Vec4 r{};
    for (size_t i = 0; i < 4; i++) {
        for (size_t k = 0; k < 4; k++) {
            r[i] += (*this)(i, k) * v[k];
        }
    }
    return r;
}

double entangle::max_abs_diff(const Mat4 &a, const Mat4 &b) {
    double worst = 0;
    for (size_t k = 0; k < 16; k++) {
        worst = std::max(worst, std::abs(a.e[k] - b.e[k]));
    }
    return worst;
}

Mat4 entangle::tensor2x2(const Mat2 &a, const Mat2 &b) {
    Mat4 r;
    for (size_t i1 = 0; i1 < 2; i1++) {
        for (size_t j1 = 0; j1 < 2; j1++) {
            for (size_t i2 = 0; i2 < 2; i2++) {
                for (size_t j2 = 0; j2 < 2; j2++) {
                    r(2 * i1 + i2, 2 * j1 + j2) = a(i1, j1) * b(i2, j2);
                }
            }
        }
    }
    return r;
}

bool entangle::is_unitary(const Mat2 &m, double tol) {
    return max_abs_diff(m.adjoint() * m, Mat2::identity()) <= tol;
}

Mat2 Svd2::reconstruct() const {
    return u * Mat2::diag(sigma1, sigma2) * v.adjoint();
}

std::array<double, 2> entangle::hermitian_eigenvalues(const Mat2 &h) {
    double a = h(0, 0).real();
    double d = h(1, 1).real();
    double mean = 0.5 * (a + d);
    double radius = std::hypot(0.5 * (a - d), std::abs(h(0, 1)));
    return {mean + radius, mean - radius};
}

Svd2 entangle::svd2(const Mat2 &m) {
    if (!all_finite(m.e)) {
        throw std::invalid_argument("svd2: non-finite matrix entry");
    }

    Mat2 h = m * m.adjoint();
    double total = h.trace().real();
    double abs_det = std::abs(m.det());
    double disc = std::max(0.0, total * total - 4 * abs_det * abs_det);
    double lambda1 = 0.5 * (total + std::sqrt(disc));
    double s1 = std::sqrt(lambda1);
    double s2 = s1 > 0 ? abs_det / s1 : 0.0;

    if (s1 == 0) {
        return Svd2{Mat2::identity(), 0, 0, Mat2::identity()};
    }

    Vec2 u1{1, 0};
    if (s1 - s2 > kDegenerateSigma) {
        // Two candidate eigenvectors of h for lambda1; take the better-conditioned one.
        Vec2 c0{h(0, 1), lambda1 - h(0, 0)};
        Vec2 c1{lambda1 - h(1, 1), std::conj(h(0, 1))};
        u1 = normalized(norm(c0) >= norm(c1) ? c0 : c1);
        u1 = fix_phase(u1);
    }
    Vec2 u2 = orthogonal_complement(u1);

    Vec2 w = m.adjoint() * u1;
    double sigma1 = norm(w);
    Vec2 v1{w[0] / sigma1, w[1] / sigma1};

    Vec2 v2 = orthogonal_complement(v1);
    Complex z = inner(u2, m * v2);
    double sigma2 = std::abs(z);
    if (sigma2 > 0) {
        v2 = (std::conj(z) / sigma2) * v2;
    }
    sigma2 = std::min(sigma2, sigma1);

    return Svd2{Mat2::from_columns(u1, u2), sigma1, sigma2, Mat2::from_columns(v1, v2)};
}

std::array<double, 3> entangle::bloch_components(const Mat2 &h) {
    return {
        0.5 * (h * Mat2::pauli_x()).trace().real(),
        0.5 * (h * Mat2::pauli_y()).trace().real(),
        0.5 * (h * Mat2::pauli_z()).trace().real(),
    };
}

Mat2 entangle::spin_operator(const std::array<double, 3> &n) {
    return Mat2{{n[2], Complex(n[0], -n[1]), Complex(n[0], n[1]), -n[2]}};
}

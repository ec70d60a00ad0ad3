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

#ifndef ENTANGLE_NUMERICS_H
#define ENTANGLE_NUMERICS_H

#include <array>
#include <complex>
#include <cstddef>
#include <span>

/// Fixed-dimension complex linear algebra for two-qubit problems.
///
/// Everything here is a small value type. Vectors are ordered over the
/// computational basis and 4-vectors use the Kronecker ordering
/// (|00>, |01>, |10>, |11>).
namespace entangle {

using Complex = std::complex<double>;
using Vec2 = std::array<Complex, 2>;
using Vec4 = std::array<Complex, 4>;

inline constexpr Complex kI{0.0, 1.0};

bool is_finite(Complex z);
bool all_finite(std::span<const Complex> values);

/// <a|b>, conjugate-linear in the first argument.
Complex inner(const Vec2 &a, const Vec2 &b);
Complex inner(const Vec4 &a, const Vec4 &b);
double norm(const Vec2 &a);
double norm(const Vec4 &a);
Vec4 kron(const Vec2 &a, const Vec2 &b);
Vec4 operator+(const Vec4 &a, const Vec4 &b);
Vec4 operator-(const Vec4 &a, const Vec4 &b);
Vec4 operator*(Complex scale, const Vec4 &a);
Vec2 operator*(Complex scale, const Vec2 &a);
double max_abs_diff(const Vec4 &a, const Vec4 &b);

struct Mat2 {
    std::array<Complex, 4> e{};  // row-major

    static Mat2 identity();
    static Mat2 diag(Complex d0, Complex d1);
    static Mat2 from_columns(const Vec2 &c0, const Vec2 &c1);
    static Mat2 pauli_x();
    static Mat2 pauli_y();
    static Mat2 pauli_z();

    Complex &operator()(size_t row, size_t col) {
        return e[2 * row + col];
    }
    const Complex &operator()(size_t row, size_t col) const {
        return e[2 * row + col];
    }
    Vec2 column(size_t col) const;

    Mat2 adjoint() const;
    Mat2 transpose() const;
    Mat2 conj() const;
    Complex trace() const;
    Complex det() const;

    Mat2 operator*(const Mat2 &other) const;
    Mat2 operator+(const Mat2 &other) const;
    Mat2 operator-(const Mat2 &other) const;
    Vec2 operator*(const Vec2 &v) const;
    bool operator==(const Mat2 &other) const = default;
};

Mat2 operator*(Complex scale, const Mat2 &m);
double max_abs_diff(const Mat2 &a, const Mat2 &b);

struct Mat4 {
    std::array<Complex, 16> e{};  // row-major

    static Mat4 identity();

    Complex &operator()(size_t row, size_t col) {
        return e[4 * row + col];
    }
    const Complex &operator()(size_t row, size_t col) const {
        return e[4 * row + col];
    }

    Mat4 adjoint() const;
    Mat4 operator*(const Mat4 &other) const;
    Vec4 operator*(const Vec4 &v) const;
    bool operator==(const Mat4 &other) const = default;
};

double max_abs_diff(const Mat4 &a, const Mat4 &b);

/// Kronecker product a (x) b, acting on the first and second qubit respectively.
Mat4 tensor2x2(const Mat2 &a, const Mat2 &b);

/// True iff max |m^dagger m - I| <= tol.
bool is_unitary(const Mat2 &m, double tol);

/// Singular value decomposition m = u * diag(sigma1, sigma2) * v^dagger.
struct Svd2 {
    Mat2 u;
    double sigma1;
    double sigma2;
    Mat2 v;

    Mat2 reconstruct() const;
};

/// Closed-form 2x2 SVD.
///
/// Conventions (so that results are reproducible bit for bit):
///   - sigma1 >= sigma2 >= 0.
///   - The first nonzero entry of u's first column is real and non-negative,
///     and u has unit determinant (second column is (-conj(u10), conj(u00))).
///   - When sigma1 and sigma2 agree within 1e-12, u is the identity.
///   - v's columns are v_k = m^dagger u_k / sigma_k; when sigma2 vanishes the
///     second column is the orthogonal complement of the first.
///
/// Throws std::invalid_argument on non-finite input.
Svd2 svd2(const Mat2 &m);

/// Hermitian 2x2 eigenvalues, descending.
std::array<double, 2> hermitian_eigenvalues(const Mat2 &h);

/// Bloch components (x, y, z) of a Hermitian 2x2 operator: n_i = tr(h sigma_i) / 2.
std::array<double, 3> bloch_components(const Mat2 &h);

/// n . sigma for a real 3-vector n.
Mat2 spin_operator(const std::array<double, 3> &n);

}  // namespace entangle

#endif

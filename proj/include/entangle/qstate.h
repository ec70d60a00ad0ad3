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

#ifndef ENTANGLE_QSTATE_H
#define ENTANGLE_QSTATE_H

#include <array>

#include "entangle/numerics.h"

namespace entangle {

/// A normalized pure state of two qubits, amplitudes over |00>, |01>, |10>, |11>.
///
/// Only constructible through make_state (or the factories below), which
/// enforce finiteness and unit norm.
class TwoQubitState {
   public:
    const Vec4 &amplitudes() const {
        return amps_;
    }
    const Complex &operator[](size_t k) const {
        return amps_[k];
    }

    static TwoQubitState basis(size_t index);
    /// (|00> + |11>) / sqrt(2).
    static TwoQubitState bell();
    static TwoQubitState product(const Vec2 &first, const Vec2 &second);

   private:
    friend TwoQubitState make_state(const Vec4 &raw, bool normalize);
    explicit TwoQubitState(const Vec4 &amps) : amps_(amps) {
    }
    Vec4 amps_;
};

/// Throws std::invalid_argument for non-finite input, the zero vector, or
/// (when normalize is false) a norm further than 1e-9 from 1. With
/// normalize = false the amplitudes are still rescaled by their norm so the
/// stored state is unit norm to rounding.
TwoQubitState make_state(const Vec4 &raw, bool normalize = false);

/// M(i, j) = amplitude of |i j>; det M = a1 a4 - a2 a3.
Mat2 coefficient_matrix(const TwoQubitState &s);

/// Applies first (x) second to the state.
TwoQubitState apply_local(const Mat2 &first, const Mat2 &second, const TwoQubitState &s);

/// kappa1 |x1, y1> + kappa2 |x2, y2>, times exp(i global_phase).
struct SchmidtForm {
    double kappa1;
    double kappa2;
    std::array<Vec2, 2> basis_a;  // x1, x2
    std::array<Vec2, 2> basis_b;  // y1, y2
    /// The local bases carry every phase of the source state, so this is 0
    /// for forms produced by schmidt(); it is kept in the reconstruction
    /// contract so hand-built forms can carry one.
    double global_phase;

    Vec4 reconstruct() const;
};

SchmidtForm schmidt(const TwoQubitState &s);

enum class Subsystem { First = 1, Second = 2 };

Mat2 reduced_density(const TwoQubitState &s, Subsystem which);

/// Coefficients beta_j = <e_j|psi> over the magic basis
///   e1 = (|00> + |11>)/sqrt2,   e2 = i(|00> - |11>)/sqrt2,
///   e3 = i(|01> + |10>)/sqrt2,  e4 = (|01> - |10>)/sqrt2.
struct MagicCoordinates {
    Vec4 beta;
};

MagicCoordinates to_magic(const TwoQubitState &s);
/// Inverse of to_magic, returning raw amplitudes (unit norm if beta is).
Vec4 from_magic(const MagicCoordinates &m);

}  // namespace entangle

#endif

// Copyright 2026 The qrgcorr Authors
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

#pragma once

#include <array>
#include <complex>

namespace qrg {

using cdouble = std::complex<double>;
using Matrix4c = std::array<std::array<cdouble, 4>, 4>;

inline constexpr double kStructuralTol = 1e-10;

/// Two-qubit density matrix with only diagonal and anti-diagonal entries,
/// in the real five-parameter form
///
///     | d1  0   0   a  |
///     | 0   d2  b   0  |
///     | 0   b   d3  0  |
///     | a   0   0   d4 |
///
/// Basis order is |00>, |01>, |10>, |11> with qubit A the most significant.
/// Instances are always valid: construction goes through `create`, which
/// checks normalization and positivity.
class XState {
   public:
    /// Throws Error(NotDensityMatrix) if the entries do not form a valid
    /// state within `tol`. Populations in [-tol, 0) are clamped to zero.
    static XState create(double d1, double d2, double d3, double d4, double a, double b,
                         double tol = kStructuralTol);

    double d1() const noexcept { return d_[0]; }
    double d2() const noexcept { return d_[1]; }
    double d3() const noexcept { return d_[2]; }
    double d4() const noexcept { return d_[3]; }
    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    const std::array<double, 4> &populations() const noexcept { return d_; }

    /// Dense 4x4 form.
    Matrix4c matrix() const noexcept;

   private:
    XState(std::array<double, 4> d, double a, double b) : d_(d), a_(a), b_(b) {}

    std::array<double, 4> d_;
    double a_;
    double b_;
};

/// Local z-Bloch components and diagonal correlation-matrix entries.
struct BlochX {
    double x = 0;   // <sigma_z (x) I>
    double y = 0;   // <I (x) sigma_z>
    double t1 = 0;  // <sigma_x (x) sigma_x>
    double t2 = 0;  // <sigma_y (x) sigma_y>
    double t3 = 0;  // <sigma_z (x) sigma_z>
};

/// Diagonal one-qubit reduced state.
struct QubitMarginal {
    double p0 = 0;
    double p1 = 0;
};

enum class Side { A, B };

/// Ingests a dense matrix. Rejects entries off the X pattern
/// (Error NotXStructured) and non-Hermitian, non-unit-trace or non-positive
/// input (Error NotDensityMatrix). A coherence with an imaginary part
/// beyond tol is replaced by its modulus, a local-unitary change of frame;
/// real coherences keep their sign.
XState xstate_from_matrix(const Matrix4c &m, double tol = kStructuralTol);

BlochX to_bloch(const XState &s) noexcept;
XState from_bloch(const BlochX &p, double tol = kStructuralTol);

/// Eigenvalues in descending order, clamped to be nonnegative.
std::array<double, 4> spectrum(const XState &s) noexcept;

QubitMarginal marginal_a(const XState &s) noexcept;
QubitMarginal marginal_b(const XState &s) noexcept;
QubitMarginal marginal(const XState &s, Side side) noexcept;

/// Tr(rho^2).
double purity(const XState &s) noexcept;

}  // namespace qrg

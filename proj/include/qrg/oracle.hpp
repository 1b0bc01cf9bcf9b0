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

// Brute-force reference computations. Nothing in here uses the closed forms
// from measures.hpp or the Bloch extraction in xstate.hpp; every routine
// works from dense matrices so it can serve as an independent check.

#pragma once

#include <array>
#include <vector>

#include "qrg/linalg.hpp"
#include "qrg/models.hpp"
#include "qrg/xstate.hpp"

namespace qrg::oracle {

struct EigenDecomposition {
    std::vector<double> values;  // ascending
    RealMatrix vectors;          // eigenvectors as columns
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops
/// below 1e-12 (relative to max(1, ||m||_F)). Throws Error(NotSymmetric)
/// if |m(i,j) - m(j,i)| > sym_tol anywhere.
EigenDecomposition diag_symmetric(const RealMatrix &m, double sym_tol = 1e-10);

/// Tr_2 |psi><psi| over the middle site; result indexed by (site 1, site 3).
Matrix4c partial_trace_mid(const BlockState8 &ket);

/// Projectors (I +- n.sigma)/2 with n = (sin t cos p, sin t sin p, cos t).
struct MeasurementDirection {
    double theta = 0;  // [0, pi]
    double phi = 0;    // [0, 2 pi)
};

struct SearchGrid {
    /// Polar samples on the coarse pass; azimuth gets twice as many.
    int coarse = 90;
    /// Local passes, each shrinking the window by 10.
    int refine_iters = 4;
};

struct DiscordSearch {
    double value;
    /// Minimized average conditional entropy.
    double conditional_entropy;
    MeasurementDirection direction;
};

/// Discord minimized over projective measurements on `side`.
DiscordSearch brute_force_discord(const XState &s, Side side, SearchGrid grid = {});

struct ChshSearch {
    double value;
    /// a, a', b, b' of the optimal Bell operator.
    std::array<MeasurementDirection, 4> settings;
};

/// Maximal CHSH expectation over four measurement directions. The two
/// settings on B are chosen optimally for each candidate pair on A; the
/// reported value is Tr(rho B_CHSH) of the explicitly assembled operator.
ChshSearch brute_force_chsh(const XState &s, SearchGrid grid = {12, 4});

/// Correlation tensor T_ij = Tr(rho sigma_i (x) sigma_j) from the dense
/// matrix.
std::array<std::array<double, 3>, 3> correlation_tensor(const Matrix4c &rho);

/// Von Neumann entropy in bits of a real symmetric density matrix.
double entropy_bits(const RealMatrix &rho);

}  // namespace qrg::oracle

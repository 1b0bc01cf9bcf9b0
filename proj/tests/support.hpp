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


// Shared helpers for the test binaries: seeded generators and small
// numeric utilities.

#pragma once

#include <array>
#include <cmath>
#include <random>

#include "qrg/linalg.hpp"
#include "qrg/models.hpp"
#include "qrg/verify.hpp"
#include "qrg/xstate.hpp"

namespace qrg::testing {

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64 &rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Random real symmetric matrix with entries uniform in [-1, 1].
inline RealMatrix random_symmetric(std::mt19937_64 &rng, std::size_t n) {
    RealMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            m(i, j) = m(j, i) = uniform(rng, -1, 1);
        }
    }
    return m;
}

inline XState maximally_mixed() { return XState::create(0.25, 0.25, 0.25, 0.25, 0, 0); }
inline XState bell_phi_plus() { return XState::create(0.5, 0, 0, 0.5, 0.5, 0); }

/// |p><p| (x) |r><r| for diagonal qubit states p = (p0, 1 - p0), r = (r0, 1 - r0).
inline XState product_diagonal(double p0, double r0) {
    return XState::create(p0 * r0, p0 * (1 - r0), (1 - p0) * r0, (1 - p0) * (1 - r0), 0, 0);
}

inline double max_abs_diff(const Matrix4c &x, const Matrix4c &y) {
    double worst = 0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            worst = std::max(worst, std::abs(x[i][j] - y[i][j]));
        }
    }
    return worst;
}

/// Base-2 binary entropy, written out independently of the library.
inline double h2(double p) {
    double out = 0;
    for (double v : {p, 1 - p}) {
        if (v > 0) {
            out -= v * std::log2(v);
        }
    }
    return out;
}

}  // namespace qrg::testing

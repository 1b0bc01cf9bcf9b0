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

#include "qrg/xstate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "qrg/errors.hpp"

namespace qrg {

XState XState::create(double d1, double d2, double d3, double d4, double a, double b, double tol) {
    std::array<double, 4> d{d1, d2, d3, d4};
    for (double v : d) {
        if (!std::isfinite(v) || v < -tol) {
            std::ostringstream msg;
            msg << "negative or non-finite population " << v;
            throw Error(ErrorKind::NotDensityMatrix, msg.str());
        }
    }
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw Error(ErrorKind::NotDensityMatrix, "non-finite coherence");
    }
    double trace = d1 + d2 + d3 + d4;
    if (std::abs(trace - 1.0) > tol) {
        std::ostringstream msg;
        msg << "trace " << trace << " differs from 1";
        throw Error(ErrorKind::NotDensityMatrix, msg.str());
    }
    for (double &v : d) {
        v = std::max(v, 0.0);
    }
    if (std::abs(a) > std::sqrt(d[0] * d[3]) + tol || std::abs(b) > std::sqrt(d[1] * d[2]) + tol) {
        throw Error(ErrorKind::NotDensityMatrix, "coherence exceeds positivity bound");
    }
    return XState(d, a, b);
}

Matrix4c XState::matrix() const noexcept {
    Matrix4c m{};
    for (int i = 0; i < 4; ++i) {
        m[i][i] = d_[i];
    }
    m[0][3] = m[3][0] = a_;
    m[1][2] = m[2][1] = b_;
    return m;
}

namespace {

// Real coherences keep their sign; complex ones are rotated onto the
// positive real axis.
double real_frame(cdouble c, double tol) { return std::abs(c.imag()) <= tol ? c.real() : std::abs(c); }

}  // namespace

XState xstate_from_matrix(const Matrix4c &m, double tol) {
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            bool on_pattern = (i == j) || (i + j == 3);
            if (!on_pattern && std::abs(m[i][j]) > tol) {
                std::ostringstream msg;
                msg << "entry (" << i << "," << j << ") = " << std::abs(m[i][j]);
                throw Error(ErrorKind::NotXStructured, msg.str());
            }
        }
    }
    for (int i = 0; i < 4; ++i) {
        if (std::abs(m[i][i].imag()) > tol) {
            throw Error(ErrorKind::NotDensityMatrix, "complex diagonal entry");
        }
    }
    if (std::abs(m[0][3] - std::conj(m[3][0])) > tol || std::abs(m[1][2] - std::conj(m[2][1])) > tol) {
        throw Error(ErrorKind::NotDensityMatrix, "matrix is not Hermitian");
    }
    // The average of the two mirror entries absorbs sub-tolerance asymmetry.
    double a = real_frame(0.5 * (m[0][3] + std::conj(m[3][0])), tol);
    double b = real_frame(0.5 * (m[1][2] + std::conj(m[2][1])), tol);
    return XState::create(m[0][0].real(), m[1][1].real(), m[2][2].real(), m[3][3].real(), a, b, tol);
}

BlochX to_bloch(const XState &s) noexcept {
    return BlochX{
        s.d1() + s.d2() - s.d3() - s.d4(),
        s.d1() - s.d2() + s.d3() - s.d4(),
        2 * s.a() + 2 * s.b(),
        -2 * s.a() + 2 * s.b(),
        s.d1() - s.d2() - s.d3() + s.d4(),
    };
}

XState from_bloch(const BlochX &p, double tol) {
    return XState::create((1 + p.x + p.y + p.t3) / 4, (1 + p.x - p.y - p.t3) / 4, (1 - p.x + p.y - p.t3) / 4,
                          (1 - p.x - p.y + p.t3) / 4, (p.t1 - p.t2) / 4, (p.t1 + p.t2) / 4, tol);
}

std::array<double, 4> spectrum(const XState &s) noexcept {
    auto block = [](double p, double q, double c) {
        double mean = 0.5 * (p + q);
        double radius = std::hypot(0.5 * (p - q), c);
        return std::array<double, 2>{mean + radius, std::max(mean - radius, 0.0)};
    };
    auto outer = block(s.d1(), s.d4(), s.a());
    auto inner = block(s.d2(), s.d3(), s.b());
    std::array<double, 4> ev{outer[0], outer[1], inner[0], inner[1]};
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

QubitMarginal marginal_a(const XState &s) noexcept { return {s.d1() + s.d2(), s.d3() + s.d4()}; }

QubitMarginal marginal_b(const XState &s) noexcept { return {s.d1() + s.d3(), s.d2() + s.d4()}; }

QubitMarginal marginal(const XState &s, Side side) noexcept {
    return side == Side::A ? marginal_a(s) : marginal_b(s);
}

double purity(const XState &s) noexcept {
    double sum = 0;
    for (double e : spectrum(s)) {
        sum += e * e;
    }
    return sum;
}

}  // namespace qrg

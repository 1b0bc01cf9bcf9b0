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

#include "qrg/models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qrg/errors.hpp"

namespace qrg {

namespace {

[[noreturn]] void domain_error(const std::string &what) { throw Error(ErrorKind::DomainError, what); }

RealMatrix pauli_x() {
    RealMatrix m(2);
    m(0, 1) = m(1, 0) = 1;
    return m;
}

RealMatrix pauli_z() {
    RealMatrix m(2);
    m(0, 0) = 1;
    m(1, 1) = -1;
    return m;
}

// sigma_y (x) sigma_y is real even though sigma_y is not.
RealMatrix pauli_yy() {
    RealMatrix m(4);
    m(0, 3) = m(3, 0) = -1;
    m(1, 2) = m(2, 1) = 1;
    return m;
}

RealMatrix bond_operator(const ModelParams &p) {
    RealMatrix xx = kron(pauli_x(), pauli_x());
    RealMatrix yy = pauli_yy();
    RealMatrix zz = kron(pauli_z(), pauli_z());
    RealMatrix bond(4);
    if (p.model == Model::Xxz) {
        bond += xx;
        bond += yy;
        zz *= p.anisotropy;
        bond += zz;
    } else {
        xx *= 1 + p.anisotropy;
        yy *= 1 - p.anisotropy;
        bond += xx;
        bond += yy;
    }
    return bond;
}

BlockState8 ket(std::array<double, 8> amp, double norm) {
    for (double &v : amp) {
        v /= norm;
    }
    return BlockState8(amp);
}

}  // namespace

std::string_view to_string(Model m) noexcept { return m == Model::Xxz ? "xxz" : "xy"; }

Model parse_model(std::string_view name) {
    if (name == "xxz") {
        return Model::Xxz;
    }
    if (name == "xy") {
        return Model::Xy;
    }
    domain_error("unknown model '" + std::string(name) + "'");
}

void validate(const ModelParams &p) {
    if (std::isnan(p.anisotropy) || !std::isfinite(p.j)) {
        domain_error("non-finite coupling");
    }
    if (p.model == Model::Xxz) {
        if (p.j < 0) {
            domain_error("XXZ exchange constant must be nonnegative");
        }
        if (p.anisotropy < 0) {
            domain_error("XXZ anisotropy must be nonnegative");
        }
    } else if (std::abs(p.anisotropy) > 1) {
        domain_error("XY anisotropy must satisfy |gamma| <= 1");
    }
}

BlockState8::BlockState8(const std::array<double, 8> &amplitudes) : amp_(amplitudes) {
    double norm2 = 0;
    for (double v : amp_) {
        norm2 += v * v;
    }
    if (std::abs(norm2 - 1.0) > 1e-12) {
        std::ostringstream msg;
        msg << "block ket has squared norm " << norm2;
        domain_error(msg.str());
    }
}

double q_of_delta(double delta) {
    if (std::isnan(delta) || delta < 0) {
        domain_error("q(delta) requires delta >= 0");
    }
    if (delta > 1e100) {
        return -0.5 * delta * (1 + std::sqrt(1 + 8 / delta / delta));
    }
    // delta = 1 must give q = -2 exactly; sqrt(1 + 8) is exact where hypot is not.
    return -0.5 * (delta + std::sqrt(delta * delta + 8));
}

XXZParams xxz_rg_step(const XXZParams &p) {
    validate({Model::Xxz, p.j, p.delta});
    double q = q_of_delta(p.delta);
    // 2q / (2 + q^2) written to stay finite as q -> -inf.
    double ratio = 2 / (q + 2 / q);
    return {p.j * ratio * ratio, p.delta * q * q / 4};
}

std::pair<BlockState8, BlockState8> xxz_ground_states(double delta) {
    double q = q_of_delta(delta);
    double norm = std::sqrt(2 + q * q);
    std::array<double, 8> up{};
    up[1] = 1;  // |up up down>
    up[2] = q;  // |up down up>
    up[4] = 1;  // |down up up>
    std::array<double, 8> down{};
    down[3] = 1;  // |up down down>
    down[5] = q;  // |down up down>
    down[6] = 1;  // |down down up>
    return {ket(up, norm), ket(down, norm)};
}

XState xxz_rho13(double delta) {
    double q = q_of_delta(delta);
    double u = 1 / (q * q);
    double den = 1 + 2 * u;
    return XState::create(1 / den, u / den, u / den, 0, 0, u / den);
}

XYParams xy_rg_step(const XYParams &p) {
    validate({Model::Xy, p.j, p.gamma});
    double g = p.gamma;
    double g2 = g * g;
    double next = (g2 * g + 3 * g) / (3 * g2 + 1);
    return {p.j * (3 * g2 + 1) / (2 * (1 + g2)), std::clamp(next, -1.0, 1.0)};
}

std::pair<BlockState8, BlockState8> xy_ground_states(double gamma) {
    validate({Model::Xy, 1.0, gamma});
    double s = std::sqrt(1 + gamma * gamma);
    double r2 = std::numbers::sqrt2;
    std::array<double, 8> odd{};
    odd[1] = -s;          // |up up down>
    odd[2] = r2;          // |up down up>
    odd[4] = -s;          // |down up up>
    odd[7] = r2 * gamma;  // |down down down>
    // Global spin flip of the first ket.
    std::array<double, 8> even{};
    even[0] = -r2 * gamma;  // |up up up>
    even[3] = s;            // |up down down>
    even[5] = -r2;          // |down up down>
    even[6] = s;            // |down down up>
    return {ket(odd, 2 * s), ket(even, 2 * s)};
}

XState xy_rho13(double gamma) {
    validate({Model::Xy, 1.0, gamma});
    double g2 = gamma * gamma;
    double den = 4 * (g2 + 1);
    return XState::create(2 / den, 0.25, 0.25, 2 * g2 / den, 2 * gamma / den, 0.25);
}

double g_of_gamma(double gamma) {
    if (gamma == 1) {
        domain_error("g(gamma) has a pole at gamma = 1");
    }
    return (1 + gamma) / (1 - gamma);
}

double gamma_of_g(double g) {
    if (g == -1) {
        domain_error("gamma(g) has a pole at g = -1");
    }
    return (g - 1) / (g + 1);
}

ModelParams rg_step(const ModelParams &p) {
    if (p.model == Model::Xxz) {
        auto next = xxz_rg_step({p.j, p.anisotropy});
        return {Model::Xxz, next.j, next.delta};
    }
    auto next = xy_rg_step({p.j, p.anisotropy});
    return {Model::Xy, next.j, next.gamma};
}

XState rho13(Model model, double anisotropy) {
    return model == Model::Xxz ? xxz_rho13(anisotropy) : xy_rho13(anisotropy);
}

std::string_view to_string(Stability s) noexcept {
    switch (s) {
        case Stability::Stable:
            return "stable";
        case Stability::Unstable:
            return "unstable";
        case Stability::Marginal:
            return "marginal";
    }
    return "unknown";
}

double anisotropy_map_derivative(Model model, double x) {
    if (model == Model::Xxz) {
        double q = q_of_delta(x);
        double dq = -0.5 * (1 + x / std::sqrt(x * x + 8));
        return q * q / 4 + x * q * dq / 2;
    }
    double x2 = x * x;
    double den = 3 * x2 + 1;
    return 3 * (1 - x2) * (1 - x2) / (den * den);
}

std::vector<FixedPoint> fixed_points(Model model) {
    // Roots of map(x) = x:
    //   XXZ: delta (q^2 / 4 - 1) = 0   ->  delta = 0 or q = -2, i.e. delta = 1
    //   XY:  2 gamma (gamma^2 - 1) = 0 ->  gamma in {-1, 0, 1}
    std::vector<double> roots = model == Model::Xxz ? std::vector<double>{0.0, 1.0} : std::vector<double>{-1.0, 0.0, 1.0};
    std::vector<FixedPoint> out;
    for (double r : roots) {
        double m = std::abs(anisotropy_map_derivative(model, r));
        Stability st = m < 1 ? Stability::Stable : (m > 1 ? Stability::Unstable : Stability::Marginal);
        out.push_back({r, st, m});
    }
    return out;
}

RealMatrix block_hamiltonian(const ModelParams &p) {
    validate(p);
    if (!std::isfinite(p.anisotropy)) {
        domain_error("block Hamiltonian needs a finite anisotropy");
    }
    RealMatrix bond = bond_operator(p);
    RealMatrix id2 = RealMatrix::identity(2);
    RealMatrix h = kron(bond, id2);
    h += kron(id2, bond);
    h *= p.j / 4;
    return h;
}

}  // namespace qrg

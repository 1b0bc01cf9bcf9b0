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

#include "qrg/measures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "qrg/errors.hpp"
#include "qrg/oracle.hpp"

namespace qrg {

namespace {

double xlog2x(double p) { return p > 0 ? p * std::log2(p) : 0.0; }

// Entropy of already-validated weights; tiny negatives from rounding count as 0.
double entropy_of(std::span<const double> p) {
    double s = 0;
    for (double v : p) {
        s -= xlog2x(std::clamp(v, 0.0, 1.0));
    }
    return s;
}

double binary_entropy(double p) { return entropy_of(std::array<double, 2>{p, 1 - p}); }

double marginal_entropy(const XState &s, Side side) {
    QubitMarginal m = marginal(s, side);
    return entropy_of(std::array<double, 2>{m.p0, m.p1});
}

// Local z component of the side that is *not* measured.
double other_side_z(const BlochX &p, Side measured) { return measured == Side::A ? p.y : p.x; }

double own_side_z(const BlochX &p, Side side) { return side == Side::A ? p.x : p.y; }

// sum_k p_k S(rho_k) for a sigma_z measurement on `side`. Outcome k selects
// the populations that share the measured qubit's value.
double conditional_entropy_z(const XState &s, Side side) {
    std::array<std::array<double, 2>, 2> groups =
        side == Side::A ? std::array<std::array<double, 2>, 2>{{{s.d1(), s.d2()}, {s.d3(), s.d4()}}}
                        : std::array<std::array<double, 2>, 2>{{{s.d1(), s.d3()}, {s.d2(), s.d4()}}};
    double total = 0;
    for (const auto &g : groups) {
        double pk = g[0] + g[1];
        if (pk > 0) {
            total += pk * binary_entropy(g[0] / pk);
        }
    }
    return total;
}

double conditional_entropy_xy(const BlochX &p, Axis axis, Side side) {
    double w = other_side_z(p, side);
    double t = axis == Axis::X ? p.t1 : p.t2;
    return binary_mix_entropy(std::min(w * w + t * t, 1.0));
}

}  // namespace

double shannon_entropy(std::span<const double> p, double tol) {
    double sum = 0;
    for (double v : p) {
        if (!(v >= -tol && v <= 1 + tol)) {
            std::ostringstream msg;
            msg << "probability " << v << " outside [0, 1]";
            throw Error(ErrorKind::InvalidDistribution, msg.str());
        }
        sum += v;
    }
    if (std::abs(sum - 1) > tol) {
        std::ostringstream msg;
        msg << "probabilities sum to " << sum;
        throw Error(ErrorKind::InvalidDistribution, msg.str());
    }
    return entropy_of(p);
}

double binary_mix_entropy(double z, double tol) {
    if (!(z >= -tol && z <= 1 + tol)) {
        std::ostringstream msg;
        msg << "binary_mix_entropy argument " << z << " outside [0, 1]";
        throw Error(ErrorKind::DomainError, msg.str());
    }
    double r = std::sqrt(std::clamp(z, 0.0, 1.0));
    return binary_entropy((1 + r) / 2);
}

double von_neumann_entropy(const XState &s) { return entropy_of(spectrum(s)); }

double concurrence(const XState &s) {
    double outer = std::abs(s.a()) - std::sqrt(s.d2() * s.d3());
    double inner = std::abs(s.b()) - std::sqrt(s.d1() * s.d4());
    return 2 * std::max({0.0, outer, inner});
}

double discord_sigma_z(const XState &s, Side side) {
    double d = marginal_entropy(s, side) - von_neumann_entropy(s) + conditional_entropy_z(s, side);
    return std::max(d, 0.0);
}

double discord_sigma_xy(const XState &s, Axis axis, Side side) {
    double d = marginal_entropy(s, side) - von_neumann_entropy(s) + conditional_entropy_xy(to_bloch(s), axis, side);
    return std::max(d, 0.0);
}

std::string_view to_string(Basis b) noexcept {
    switch (b) {
        case Basis::X:
            return "x";
        case Basis::Y:
            return "y";
        case Basis::Z:
            return "z";
        case Basis::BruteForce:
            return "brute-force";
    }
    return "unknown";
}

bool pauli_optimality_guard(const XState &s) {
    double lhs = std::abs(std::sqrt(s.d1() * s.d4()) - std::sqrt(s.d2() * s.d3()));
    // Model states sit exactly on the boundary; allow rounding slack.
    return lhs <= std::abs(s.a()) + std::abs(s.b()) + 1e-12;
}

std::pair<double, DiscordBreakdown> discord_optimal(const XState &s, Side side) {
    BlochX p = to_bloch(s);
    DiscordBreakdown br;
    br.s_a = marginal_entropy(s, side);
    br.s_ab = von_neumann_entropy(s);
    br.cond_x = conditional_entropy_xy(p, Axis::X, side);
    br.cond_y = conditional_entropy_xy(p, Axis::Y, side);
    br.cond_z = conditional_entropy_z(s, side);
    auto gap = [](QubitMarginal m) { return std::abs(m.p0 - m.p1); };
    br.degenerate_marginals =
        gap(marginal_a(s)) < kDegenerateMarginalGap || gap(marginal_b(s)) < kDegenerateMarginalGap;

    if (!pauli_optimality_guard(s)) {
        auto search = oracle::brute_force_discord(s, side);
        br.optimal_basis = Basis::BruteForce;
        return {std::max(search.value, 0.0), br};
    }
    double cond = br.cond_x;
    br.optimal_basis = Basis::X;
    if (p.t2 * p.t2 > p.t1 * p.t1) {
        cond = br.cond_y;
        br.optimal_basis = Basis::Y;
    }
    if (br.cond_z < cond) {
        cond = br.cond_z;
        br.optimal_basis = Basis::Z;
    }
    return {std::max(br.s_a - br.s_ab + cond, 0.0), br};
}

double mid(const XState &s) {
    // Both marginals are diagonal, so the product of their eigenbases is the
    // sigma_z (x) sigma_z basis and the dephased state is diag(d1..d4).
    double d = entropy_of(s.populations()) - von_neumann_entropy(s);
    return std::max(d, 0.0);
}

double geometric_discord(const XState &s, Side side) {
    BlochX p = to_bloch(s);
    double w = own_side_z(p, side);
    double t1 = p.t1 * p.t1;
    double t2 = p.t2 * p.t2;
    double t3 = p.t3 * p.t3 + w * w;
    return std::max(0.25 * (t1 + t2 + t3 - std::max({t1, t2, t3})), 0.0);
}

double min_nonlocality(const XState &s, Side side) {
    BlochX p = to_bloch(s);
    double t1 = p.t1 * p.t1;
    double t2 = p.t2 * p.t2;
    if (std::abs(own_side_z(p, side)) > kMinBranchTol) {
        return 0.25 * (t1 + t2);
    }
    double t3 = p.t3 * p.t3;
    return 0.25 * (t1 + t2 + t3 - std::min({t1, t2, t3}));
}

double chsh_max(const XState &s) {
    BlochX p = to_bloch(s);
    double t1 = p.t1 * p.t1;
    double t2 = p.t2 * p.t2;
    double t3 = p.t3 * p.t3;
    return 2 * std::sqrt(std::max(t1 + t2 + t3 - std::min({t1, t2, t3}), 0.0));
}

double mutual_information(const XState &s) {
    double i = marginal_entropy(s, Side::A) + marginal_entropy(s, Side::B) - von_neumann_entropy(s);
    return std::max(i, 0.0);
}

std::string_view to_string(Measure m) noexcept {
    switch (m) {
        case Measure::Concurrence:
            return "concurrence";
        case Measure::QdOptimal:
            return "qd_optimal";
        case Measure::QdSigmaX:
            return "qd_sigma_x";
        case Measure::QdSigmaY:
            return "qd_sigma_y";
        case Measure::QdSigmaZ:
            return "qd_sigma_z";
        case Measure::Mid:
            return "mid";
        case Measure::Gd:
            return "gd";
        case Measure::MinNl:
            return "min";
        case Measure::ChshMax:
            return "chsh_max";
    }
    return "unknown";
}

Measure parse_measure(std::string_view name) {
    for (Measure m : kAllMeasures) {
        if (to_string(m) == name) {
            return m;
        }
    }
    if (name == "min_nl") {
        return Measure::MinNl;
    }
    throw Error(ErrorKind::DomainError, "unknown measure '" + std::string(name) + "'");
}

double MeasureSet::get(Measure m) const noexcept {
    switch (m) {
        case Measure::Concurrence:
            return concurrence;
        case Measure::QdOptimal:
            return qd_optimal;
        case Measure::QdSigmaX:
            return qd_sigma_x;
        case Measure::QdSigmaY:
            return qd_sigma_y;
        case Measure::QdSigmaZ:
            return qd_sigma_z;
        case Measure::Mid:
            return mid;
        case Measure::Gd:
            return gd;
        case Measure::MinNl:
            return min_nl;
        case Measure::ChshMax:
            return chsh_max;
    }
    return 0;
}

void MeasureSet::set(Measure m, double v) noexcept {
    switch (m) {
        case Measure::Concurrence:
            concurrence = v;
            break;
        case Measure::QdOptimal:
            qd_optimal = v;
            break;
        case Measure::QdSigmaX:
            qd_sigma_x = v;
            break;
        case Measure::QdSigmaY:
            qd_sigma_y = v;
            break;
        case Measure::QdSigmaZ:
            qd_sigma_z = v;
            break;
        case Measure::Mid:
            mid = v;
            break;
        case Measure::Gd:
            gd = v;
            break;
        case Measure::MinNl:
            min_nl = v;
            break;
        case Measure::ChshMax:
            chsh_max = v;
            break;
    }
}

double evaluate(Measure m, const XState &s) {
    switch (m) {
        case Measure::Concurrence:
            return concurrence(s);
        case Measure::QdOptimal:
            return discord_optimal(s).first;
        case Measure::QdSigmaX:
            return discord_sigma_xy(s, Axis::X);
        case Measure::QdSigmaY:
            return discord_sigma_xy(s, Axis::Y);
        case Measure::QdSigmaZ:
            return discord_sigma_z(s);
        case Measure::Mid:
            return mid(s);
        case Measure::Gd:
            return geometric_discord(s);
        case Measure::MinNl:
            return min_nonlocality(s);
        case Measure::ChshMax:
            return chsh_max(s);
    }
    return 0;
}

MeasureSet measure_all(const XState &s) {
    MeasureSet out;
    for (Measure m : kAllMeasures) {
        out.set(m, evaluate(m, s));
    }
    return out;
}

}  // namespace qrg

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


#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "qrg/errors.hpp"
#include "qrg/measures.hpp"
#include "qrg/oracle.hpp"
#include "support.hpp"

using namespace qrg;
using namespace qrg::testing;

namespace {

constexpr double kPi = std::numbers::pi;

double q_of(double delta) { return -(delta + std::sqrt(delta * delta + 8)) / 2; }

XState xxz_state(double delta) {
    double q2 = q_of(delta) * q_of(delta);
    double den = 2 + q2;
    return XState::create(q2 / den, 1 / den, 1 / den, 0, 0, 1 / den);
}

XState xy_state(double g) {
    double den = 4 * (g * g + 1);
    return XState::create(2 / den, (g * g + 1) / den, (g * g + 1) / den, 2 * g * g / den, 2 * g / den, 0.25);
}

double f_of(double z) { return h2((1 + std::sqrt(z)) / 2); }

// Eigenvalues of a 2x2 Hermitian matrix [[p, c], [conj c, r]].
std::array<double, 2> eig2(double p, cdouble c, double r) {
    double mean = (p + r) / 2;
    double rad = std::sqrt((p - r) * (p - r) / 4 + std::norm(c));
    return {mean + rad, mean - rad};
}

double entropy_of(std::initializer_list<double> ps) {
    double out = 0;
    for (double p : ps) {
        if (p > 1e-300) {
            out -= p * std::log2(p);
        }
    }
    return out;
}

// Discord for one projective measurement along (theta, phi) on qubit A,
// computed directly from the dense matrix.
double discord_along(const XState &s, double theta, double phi) {
    Matrix4c rho = s.matrix();
    std::array<cdouble, 2> up{std::cos(theta / 2), std::polar(std::sin(theta / 2), phi)};
    std::array<cdouble, 2> down{-std::conj(up[1]), std::conj(up[0])};
    double cond = 0;
    for (const auto &v : {up, down}) {
        // <v|_A rho |v>_A, a 2x2 operator on B.
        std::array<std::array<cdouble, 2>, 2> m{};
        for (int bi = 0; bi < 2; ++bi) {
            for (int bj = 0; bj < 2; ++bj) {
                for (int ai = 0; ai < 2; ++ai) {
                    for (int aj = 0; aj < 2; ++aj) {
                        m[bi][bj] += std::conj(v[ai]) * rho[2 * ai + bi][2 * aj + bj] * v[aj];
                    }
                }
            }
        }
        double p = (m[0][0] + m[1][1]).real();
        if (p < 1e-15) {
            continue;
        }
        auto ev = eig2(m[0][0].real() / p, m[0][1] / p, m[1][1].real() / p);
        cond += p * entropy_of({std::max(ev[0], 0.0), std::max(ev[1], 0.0)});
    }
    auto sp = spectrum(s);
    double s_ab = entropy_of({sp[0], sp[1], sp[2], sp[3]});
    double s_a = entropy_of({s.d1() + s.d2(), s.d3() + s.d4()});
    return s_a - s_ab + cond;
}

XState swap_sides(const XState &s) { return XState::create(s.d1(), s.d3(), s.d2(), s.d4(), s.a(), s.b()); }

}  // namespace

TEST_CASE("shannon_entropy") {
    CHECK(shannon_entropy(std::vector{0.5, 0.5}) == doctest::Approx(1.0));
    CHECK(shannon_entropy(std::vector{1.0, 0.0}) == 0.0);
    CHECK(shannon_entropy(std::vector{0.25, 0.25, 0.25, 0.25}) == doctest::Approx(2.0));
    CHECK(shannon_entropy(std::vector{1.0 + 5e-13, -5e-13}) == doctest::Approx(0.0));
    CHECK_THROWS_AS(shannon_entropy(std::vector{0.7, 0.7}), Error);
    CHECK_THROWS_AS(shannon_entropy(std::vector{1.2, -0.2}), Error);
}

TEST_CASE("binary_mix_entropy") {
    CHECK(binary_mix_entropy(0) == doctest::Approx(1.0));
    CHECK(binary_mix_entropy(1) == doctest::Approx(0.0));
    CHECK(std::abs(binary_mix_entropy(0.5) - 0.600876) < 5e-7);
    CHECK(std::abs(binary_mix_entropy(0.5) - f_of(0.5)) < 1e-15);
    CHECK(binary_mix_entropy(1 + 5e-13) == doctest::Approx(0.0));
    try {
        binary_mix_entropy(1.5);
        FAIL("expected DomainError");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::DomainError);
    }
}

TEST_CASE("measures on XXZ reduced states") {
    for (double delta : {0.0, 0.3, 1.0, 2.0, 5.0}) {
        CAPTURE(delta);
        double q2 = q_of(delta) * q_of(delta);
        XState s = xxz_state(delta);
        double c = 2 / (2 + q2);
        CHECK(std::abs(concurrence(s) - c) < 1e-12);
        CHECK(std::abs(discord_sigma_z(s, Side::A) - c) < 1e-12);
        CHECK(std::abs(mid(s) - c) < 1e-12);
        double sx = -(1 + q2) / (2 + q2) * std::log2((1 + q2) / (2 + q2)) - 1 / (2 + q2) * std::log2(1 / (2 + q2)) +
                    2 / (2 + q2) * std::log2(2 / (2 + q2)) + q2 / (2 + q2) * std::log2(q2 / (2 + q2)) +
                    f_of((4 + q2 * q2) / ((2 + q2) * (2 + q2)));
        CHECK(std::abs(discord_sigma_xy(s, Axis::X, Side::A) - sx) < 1e-12);
        CHECK(std::abs(discord_optimal(s).first - sx) < 1e-12);
        CHECK(discord_optimal(s).first < discord_sigma_z(s));
        CHECK(std::abs(geometric_discord(s) - 2 / ((2 + q2) * (2 + q2))) < 1e-12);
        CHECK(std::abs(min_nonlocality(s) - 2 / ((2 + q2) * (2 + q2))) < 1e-12);
        CHECK(std::abs(geometric_discord(s) - c * c / 2) < 1e-12);
        double bell = 2 * std::sqrt(std::max(8.0, (q2 - 2) * (q2 - 2) + 4) / ((2 + q2) * (2 + q2)));
        CHECK(std::abs(chsh_max(s) - bell) < 1e-12);
    }
    CHECK(std::abs(discord_optimal(xxz_state(0)).first - 0.412154) < 5e-7);
}

TEST_CASE("measures on XY reduced states") {
    for (double g : {-1.0, -0.6, -0.2, 0.0, 0.25, 0.5, 0.9, 1.0}) {
        CAPTURE(g);
        XState s = xy_state(g);
        double c = 0.5 - std::abs(g) / (1 + g * g);
        CHECK(std::abs(concurrence(s) - c) < 1e-12);
        double u = 1 / (2 * (g * g + 1));
        CHECK(std::abs(discord_sigma_z(s) - entropy_of({u, g * g * u})) < 1e-12);
        double sa = entropy_of({(g * g + 3) / (4 * (g * g + 1)), (3 * g * g + 1) / (4 * (g * g + 1))});
        double d = sa - 1 + f_of((std::abs(g) + 1) * (std::abs(g) + 1) / (2 * (g * g + 1)));
        CHECK(std::abs(discord_optimal(s).first - d) < 1e-12);
        // The closed form above is the sigma_x value for gamma >= 0 and sigma_y below.
        CHECK(std::abs(discord_sigma_xy(s, g >= 0 ? Axis::X : Axis::Y) - d) < 1e-12);
        CHECK(std::abs(geometric_discord(s) - c / 4) < 1e-12);
        CHECK(std::abs(min_nonlocality(s) - (g * g * g * g + 6 * g * g + 1) / (8 * (g * g + 1) * (g * g + 1))) < 1e-12);
        double bell = std::sqrt(2 * g * g * g * g + 12 * g * g + 2) / (g * g + 1);
        CHECK(std::abs(chsh_max(s) - bell) < 1e-12);
        CHECK(std::abs(chsh_max(s) - 4 * std::sqrt(min_nonlocality(s))) < 1e-12);
    }
    CHECK(std::abs(discord_optimal(xy_state(0)).first - 0.412154) < 5e-7);
    CHECK(discord_optimal(xy_state(1)).first == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(std::abs(oracle::brute_force_discord(xy_state(1), Side::A).value) < 1e-6);
    CHECK(std::abs(mid(xy_state(1)) - 1) < 1e-12);
    CHECK(std::abs(mid(xy_state(-1)) - 1) < 1e-12);
    CHECK(discord_optimal(xy_state(1)).second.degenerate_marginals);
}

TEST_CASE("measures on Bell, mixed and product states") {
    XState bell = bell_phi_plus();
    CHECK(concurrence(bell) == doctest::Approx(1.0));
    CHECK(discord_sigma_z(bell) == doctest::Approx(1.0));
    CHECK(discord_sigma_xy(bell, Axis::X) == doctest::Approx(1.0));
    CHECK(geometric_discord(bell) == doctest::Approx(0.5));
    CHECK(min_nonlocality(bell) == doctest::Approx(0.5));
    CHECK(chsh_max(bell) == doctest::Approx(2 * std::sqrt(2.0)));
    CHECK(mutual_information(bell) == doctest::Approx(2.0));
    MeasureSet mb = measure_all(bell);
    CHECK(mb.concurrence == doctest::Approx(1.0));
    CHECK(mb.qd_optimal == doctest::Approx(1.0));
    CHECK(mb.mid == doctest::Approx(1.0));
    CHECK(mb.gd == doctest::Approx(0.5));
    CHECK(mb.min_nl == doctest::Approx(0.5));
    CHECK(mb.chsh_max == doctest::Approx(2 * std::sqrt(2.0)));

    MeasureSet mixed = measure_all(maximally_mixed());
    for (Measure m : kAllMeasures) {
        CHECK(std::abs(mixed.get(m)) < 1e-15);
    }
    CHECK(mutual_information(maximally_mixed()) == doctest::Approx(0.0));

    // Product diagonal states carry no quantum correlation. The CHSH value
    // is the classical 2 |<z><z>| instead of zero.
    auto rng = make_rng(5);
    for (int i = 0; i < 200; ++i) {
        double p = uniform(rng, 0, 1);
        double r = uniform(rng, 0, 1);
        MeasureSet ms = measure_all(product_diagonal(p, r));
        for (Measure m : kAllMeasures) {
            if (m != Measure::ChshMax) {
                CHECK(std::abs(ms.get(m)) < 1e-10);
            }
        }
        CHECK(std::abs(ms.chsh_max - 2 * std::abs((2 * p - 1) * (2 * r - 1))) < 1e-12);
        CHECK(mutual_information(product_diagonal(p, r)) == doctest::Approx(0.0).epsilon(1e-10));
    }
}

TEST_CASE("mutual information of the XXZ state at delta 0") {
    CHECK(std::abs(mutual_information(xxz_state(0)) - 0.622556) < 5e-7);
    CHECK(std::abs(mutual_information(xxz_state(0)) - (2 * h2(0.25) - 1)) < 1e-12);
}

TEST_CASE("measure_all at the XXZ critical point") {
    MeasureSet m = measure_all(xxz_state(1));
    CHECK(std::abs(m.concurrence - 1.0 / 3) < 1e-12);
    CHECK(std::abs(m.gd - 1.0 / 18) < 1e-12);
    CHECK(std::abs(m.min_nl - 1.0 / 18) < 1e-12);
    CHECK(std::abs(m.chsh_max - 2 * std::sqrt(2.0) / 3) < 1e-12);
}

TEST_CASE("fixed-basis discord matches an explicit measurement") {
    auto rng = make_rng(77);
    for (int i = 0; i < 300; ++i) {
        XState s = sample_xstate(rng);
        CHECK(std::abs(discord_sigma_z(s, Side::A) - discord_along(s, 0, 0)) < 1e-10);
        CHECK(std::abs(discord_sigma_xy(s, Axis::X, Side::A) - discord_along(s, kPi / 2, 0)) < 1e-10);
        CHECK(std::abs(discord_sigma_xy(s, Axis::Y, Side::A) - discord_along(s, kPi / 2, kPi / 2)) < 1e-10);
        XState t = swap_sides(s);
        CHECK(std::abs(discord_sigma_z(s, Side::B) - discord_along(t, 0, 0)) < 1e-10);
        CHECK(std::abs(discord_sigma_xy(s, Axis::X, Side::B) - discord_along(t, kPi / 2, 0)) < 1e-10);
        CHECK(std::abs(discord_sigma_xy(s, Axis::Y, Side::B) - discord_along(t, kPi / 2, kPi / 2)) < 1e-10);
    }
}

TEST_CASE("property: measure ranges and orderings on random states") {
    auto rng = make_rng(1234);
    for (int i = 0; i < 3000; ++i) {
        XState s = sample_xstate(rng);
        MeasureSet m = measure_all(s);
        for (Measure k : kAllMeasures) {
            CHECK(m.get(k) >= -1e-12);
        }
        CHECK(m.concurrence <= 1 + 1e-12);
        CHECK(m.chsh_max <= 2 * std::sqrt(2.0) + 1e-12);
        CHECK(m.qd_optimal <= m.qd_sigma_x + 1e-12);
        CHECK(m.qd_optimal <= m.qd_sigma_y + 1e-12);
        CHECK(m.qd_optimal <= m.qd_sigma_z + 1e-12);
        if (pauli_optimality_guard(s)) {
            CHECK(std::abs(m.qd_optimal - std::min({m.qd_sigma_x, m.qd_sigma_y, m.qd_sigma_z})) < 1e-12);
        }
        auto [d, br] = discord_optimal(s);
        for (double c : {br.cond_x, br.cond_y, br.cond_z}) {
            CHECK(c >= -1e-12);
            CHECK(c <= 1 + 1e-12);
        }
        CHECK(d >= -1e-12);
        BlochX p = to_bloch(s);
        if (std::abs(p.t3) < 1e-15 && std::abs(p.x) > 1e-9) {
            CHECK(std::abs(m.chsh_max - 4 * std::sqrt(m.min_nl)) < 1e-12);
        }
    }
}

TEST_CASE("property: t3 = 0 states obey chsh = 4 sqrt(MIN)") {
    auto rng = make_rng(99);
    for (int i = 0; i < 500; ++i) {
        // d1 + d4 = d2 + d3 forces t3 = 0.
        double u = uniform(rng, 0.02, 0.48);
        double v = uniform(rng, 0.02, 0.48);
        double d1 = u;
        double d4 = 0.5 - u;
        double d2 = v;
        double d3 = 0.5 - v;
        if (std::abs(d1 + d2 - d3 - d4) <= 1e-9) {
            continue;
        }
        XState s = XState::create(d1, d2, d3, d4, uniform(rng, -1, 1) * std::sqrt(d1 * d4),
                                  uniform(rng, -1, 1) * std::sqrt(d2 * d3));
        CHECK(std::abs(chsh_max(s) - 4 * std::sqrt(min_nonlocality(s))) < 1e-12);
    }
}

TEST_CASE("property: sign flips of the coherences") {
    auto rng = make_rng(4321);
    for (int i = 0; i < 1000; ++i) {
        XState s = sample_xstate(rng);
        XState both = XState::create(s.d1(), s.d2(), s.d3(), s.d4(), -s.a(), -s.b());
        MeasureSet m0 = measure_all(s);
        MeasureSet m1 = measure_all(both);
        for (Measure k : kAllMeasures) {
            CHECK(std::abs(m0.get(k) - m1.get(k)) < 1e-10);
        }
        // Flipping one coherence alone is a rotation by pi/2 about z on one
        // qubit: it exchanges the x and y measurement bases.
        XState one = XState::create(s.d1(), s.d2(), s.d3(), s.d4(), -s.a(), s.b());
        MeasureSet m2 = measure_all(one);
        CHECK(std::abs(m2.qd_sigma_x - m0.qd_sigma_y) < 1e-10);
        CHECK(std::abs(m2.qd_sigma_y - m0.qd_sigma_x) < 1e-10);
        for (Measure k : {Measure::Concurrence, Measure::QdOptimal, Measure::QdSigmaZ, Measure::Mid, Measure::Gd,
                          Measure::MinNl, Measure::ChshMax}) {
            CHECK(std::abs(m0.get(k) - m2.get(k)) < 1e-10);
        }
    }
}

TEST_CASE("property: MID equals sigma_z discord on both sides") {
    auto rng = make_rng(2024);
    double worst = 0;
    for (int i = 0; i < 10000; ++i) {
        XState s = sample_xstate(rng);
        double m = mid(s);
        worst = std::max({worst, std::abs(m - discord_sigma_z(s, Side::A)), std::abs(m - discord_sigma_z(s, Side::B))});
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("guard failure falls back to the search") {
    // Large population asymmetry with tiny coherences violates the guard.
    XState s = XState::create(0.6, 0.05, 0.3, 0.05, 0.01, 0.01);
    REQUIRE_FALSE(pauli_optimality_guard(s));
    auto [value, br] = discord_optimal(s);
    CHECK(br.optimal_basis == Basis::BruteForce);
    CHECK(std::abs(value - oracle::brute_force_discord(s, Side::A).value) < 1e-12);
    CHECK(value <= discord_sigma_z(s) + 1e-12);
}

TEST_CASE("measure names round-trip") {
    for (Measure m : kAllMeasures) {
        CHECK(parse_measure(to_string(m)) == m);
    }
    CHECK(parse_measure("min_nl") == Measure::MinNl);
    CHECK(to_string(Measure::MinNl) == "min");
    CHECK_THROWS_AS(parse_measure("entropy"), Error);
    MeasureSet ms;
    ms.set(Measure::Gd, 0.25);
    CHECK(ms.get(Measure::Gd) == 0.25);
    CHECK(evaluate(Measure::Gd, bell_phi_plus()) == doctest::Approx(0.5));
}

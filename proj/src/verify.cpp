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

#include "qrg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <tuple>

#include "qrg/errors.hpp"
#include "qrg/flow.hpp"
#include "qrg/measures.hpp"
#include "qrg/models.hpp"
#include "qrg/oracle.hpp"

namespace qrg {

XState sample_xstate(std::mt19937_64 &rng) {
    std::exponential_distribution<double> expo(1.0);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::array<double, 4> d{};
    double sum = 0;
    for (double &v : d) {
        v = expo(rng);
        sum += v;
    }
    for (double &v : d) {
        v /= sum;
    }
    double a = unit(rng) * std::sqrt(d[0] * d[3]);
    double b = unit(rng) * std::sqrt(d[1] * d[2]);
    return XState::create(d[0], d[1], d[2], d[3], a, b);
}

XState sample_guarded_xstate(std::mt19937_64 &rng) {
    for (;;) {
        XState s = sample_xstate(rng);
        if (pauli_optimality_guard(s)) {
            return s;
        }
    }
}

namespace {

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(3);
    out << std::scientific << v;
    return out.str();
}

CheckResult bound_check(std::string name, double worst, double tol) {
    bool ok = worst < tol;
    return {std::move(name), ok, "max deviation " + fmt(worst) + " (tolerance " + fmt(tol) + ")"};
}

// Returns the largest |H psi - e0 psi| over both kets, the degeneracy
// splitting e1 - e0 and the gap e2 - e1.
struct GroundCheck {
    double residual = 0;
    double splitting = 0;
    double gap = 0;
    double trace_error = 0;
};

GroundCheck check_ground(Model model, double anisotropy) {
    ModelParams p{model, 1.0, anisotropy};
    auto eig = oracle::diag_symmetric(block_hamiltonian(p));
    auto kets = model == Model::Xxz ? xxz_ground_states(anisotropy) : xy_ground_states(anisotropy);
    RealMatrix h = block_hamiltonian(p);
    GroundCheck out;
    out.splitting = eig.values[1] - eig.values[0];
    out.gap = eig.values[2] - eig.values[1];
    for (const BlockState8 *k : {&kets.first, &kets.second}) {
        auto hv = h.apply(k->amplitudes());
        for (int i = 0; i < 8; ++i) {
            out.residual = std::max(out.residual, std::abs(hv[i] - eig.values[0] * (*k)[i]));
        }
    }
    Matrix4c traced = oracle::partial_trace_mid(kets.first);
    Matrix4c analytic = rho13(model, anisotropy).matrix();
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            out.trace_error = std::max(out.trace_error, std::abs(traced[i][j] - analytic[i][j]));
        }
    }
    return out;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyConfig &cfg) {
    std::vector<CheckResult> results;
    std::mt19937_64 rng(cfg.seed);

    {
        auto xxz = fixed_points(Model::Xxz);
        auto xy = fixed_points(Model::Xy);
        bool ok = xxz.size() == 2 && xxz[0].value == 0 && xxz[0].stability == Stability::Stable && xxz[1].value == 1 &&
                  xxz[1].stability == Stability::Unstable && xy.size() == 3 && xy[0].value == -1 &&
                  xy[0].stability == Stability::Stable && xy[1].value == 0 && xy[1].stability == Stability::Unstable &&
                  xy[2].value == 1 && xy[2].stability == Stability::Stable;
        for (Model m : {Model::Xxz, Model::Xy}) {
            for (const auto &fp : fixed_points(m)) {
                ok = ok && rg_step({m, 1.0, fp.value}).anisotropy == fp.value;
            }
        }
        results.push_back({"fixed-points", ok, "XXZ {0 stable, 1 unstable}; XY {-1 stable, 0 unstable, 1 stable}"});
    }

    std::vector<XState> states;
    states.reserve(cfg.random_states);
    for (int i = 0; i < cfg.random_states; ++i) {
        states.push_back(sample_xstate(rng));
    }

    {
        double worst = 0;
        for (std::size_t i = 0; i < states.size(); ++i) {
            double m = mid(states[i]);
            if (cfg.inject_fault && i == 0) {
                m += 1e-3;
            }
            worst = std::max({worst, std::abs(m - discord_sigma_z(states[i], Side::A)),
                              std::abs(m - discord_sigma_z(states[i], Side::B))});
        }
        results.push_back(bound_check("mid-equals-sigma-z-discord", worst, 1e-10));
    }

    {
        double worst = 0;
        for (const XState &s : states) {
            RealMatrix dense(4);
            Matrix4c m = s.matrix();
            for (int i = 0; i < 4; ++i) {
                for (int j = 0; j < 4; ++j) {
                    dense(i, j) = m[i][j].real();
                }
            }
            auto ev = oracle::diag_symmetric(dense).values;
            std::sort(ev.begin(), ev.end(), std::greater<>());
            auto closed = spectrum(s);
            for (int k = 0; k < 4; ++k) {
                worst = std::max(worst, std::abs(ev[k] - closed[k]));
            }
            BlochX p = to_bloch(s);
            XState back = from_bloch(p);
            worst = std::max({worst, std::abs(back.d1() - s.d1()), std::abs(back.a() - s.a()), std::abs(back.b() - s.b())});
        }
        results.push_back(bound_check("spectrum-and-bloch-vs-dense", worst, 1e-10));
    }

    {
        double discord_worst = 0;
        double chsh_worst = 0;
        double lower_violation = 0;
        for (int i = 0; i < cfg.oracle_states; ++i) {
            XState g = sample_guarded_xstate(rng);
            double analytic = discord_optimal(g).first;
            double brute = oracle::brute_force_discord(g, Side::A).value;
            discord_worst = std::max(discord_worst, std::abs(brute - analytic));
            lower_violation = std::max(lower_violation, analytic - brute);
            XState s = sample_xstate(rng);
            chsh_worst = std::max(chsh_worst, std::abs(oracle::brute_force_chsh(s).value - chsh_max(s)));
        }
        results.push_back(bound_check("discord-closed-form-vs-search", discord_worst, 1e-4));
        results.push_back(bound_check("discord-search-not-below-closed-form", lower_violation, 1e-6));
        results.push_back(bound_check("chsh-closed-form-vs-search", chsh_worst, 1e-4));
    }

    {
        double residual = 0;
        double trace_error = 0;
        double min_gap = 1e300;
        double max_split = 0;
        for (int k = 0; k < 50; ++k) {
            // Interior samples; gamma = +-1 and large delta are covered by unit tests.
            double delta = 0.05 + 2.5 * k / 49.0;
            double gamma = -0.98 + 1.96 * k / 49.0;
            for (auto [m, x] : {std::pair{Model::Xxz, delta}, std::pair{Model::Xy, gamma}}) {
                GroundCheck c = check_ground(m, x);
                residual = std::max(residual, c.residual);
                trace_error = std::max(trace_error, c.trace_error);
                min_gap = std::min(min_gap, c.gap);
                max_split = std::max(max_split, c.splitting);
            }
        }
        results.push_back(bound_check("ground-kets-are-eigenvectors", residual, 1e-10));
        results.push_back(bound_check("ground-level-degenerate", max_split, 1e-10));
        results.push_back({"ground-level-gap", min_gap > 1e-8, "smallest gap to third level " + fmt(min_gap)});
        results.push_back(bound_check("partial-trace-matches-reduced-state", trace_error, 1e-12));
    }

    {
        double worst = -1;
        std::vector<int> iters{0, 1, 2, 3, 4, 5, 6};
        for (auto [model, axis, hi] :
             {std::tuple{Model::Xxz, SweepAxis::Delta, 2.5}, std::tuple{Model::Xy, SweepAxis::G, 3.0}}) {
            SweepSpec spec{model, axis, 0.0, hi, 500, iters, {Measure::ChshMax}, 1.0};
            SweepTable t = sweep(spec);
            for (const auto &row : t.values) {
                for (const auto &ms : row) {
                    worst = std::max(worst, ms.chsh_max);
                }
            }
        }
        results.push_back({"chsh-never-exceeds-2", worst <= 2 + 1e-12, "largest CHSH value " + fmt(worst)});
    }

    {
        double worst = 0;
        for (int k = 0; k < 500; ++k) {
            double delta = 2.5 * k / 499.0;
            MeasureSet m = measure_all(xxz_rho13(delta));
            double c = m.concurrence;
            worst = std::max({worst, std::abs(m.gd - c * c / 2), std::abs(m.min_nl - m.gd),
                              std::abs(m.mid - m.qd_sigma_z), std::abs(m.mid - c)});
            double g = 3.0 * k / 499.0;
            MeasureSet y = measure_all(xy_rho13(gamma_of_g(g)));
            worst = std::max({worst, std::abs(y.gd - y.concurrence / 4), std::abs(y.chsh_max - 4 * std::sqrt(y.min_nl))});
        }
        results.push_back(bound_check("model-closed-form-identities", worst, 1e-12));
    }

    {
        MeasureSet a = measure_all(xy_rho13(0));
        MeasureSet b = measure_all(xxz_rho13(0));
        double worst = 0;
        for (Measure m : kAllMeasures) {
            worst = std::max(worst, std::abs(a.get(m) - b.get(m)));
        }
        results.push_back(bound_check("xy-and-xxz-coincide-at-zero", worst, 1e-12));
    }

    return results;
}

}  // namespace qrg

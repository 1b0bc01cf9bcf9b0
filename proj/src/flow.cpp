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

#include "qrg/flow.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "parallel.hpp"
#include "qrg/errors.hpp"

namespace qrg {

namespace {

[[noreturn]] void domain_error(const std::string &what) { throw Error(ErrorKind::DomainError, what); }

const std::vector<FixedPoint> &cached_fixed_points(Model model) {
    static const std::vector<FixedPoint> xxz = fixed_points(Model::Xxz);
    static const std::vector<FixedPoint> xy = fixed_points(Model::Xy);
    return model == Model::Xxz ? xxz : xy;
}

void check_iteration_count(int n, const FlowOptions &opts) {
    if (n < 0) {
        domain_error("iteration count must be nonnegative");
    }
    if (n > opts.max_iterations) {
        std::ostringstream msg;
        msg << "iteration " << n << " exceeds the cap of " << opts.max_iterations;
        domain_error(msg.str());
    }
}

}  // namespace

std::int64_t effective_size(int n) {
    if (n < 0) {
        domain_error("effective_size needs n >= 0");
    }
    std::int64_t size = 3;
    for (int k = 0; k < n; ++k) {
        if (size > std::numeric_limits<std::int64_t>::max() / 3) {
            throw Error(ErrorKind::Overflow, "3^(n+1) does not fit in 64 bits for n = " + std::to_string(n));
        }
        size *= 3;
    }
    return size;
}

ModelParams flow_step(const ModelParams &p, const FlowOptions &opts) {
    ModelParams next = rg_step(p);
    for (const FixedPoint &fp : cached_fixed_points(p.model)) {
        if (std::abs(next.anisotropy - fp.value) <= opts.fixed_point_snap) {
            next.anisotropy = fp.value;
        }
    }
    return next;
}

RGTrajectory iterate(const ModelParams &params0, int n_steps, const FlowOptions &opts) {
    validate(params0);
    check_iteration_count(n_steps, opts);
    RGTrajectory traj{params0.model, params0, {}};
    traj.steps.reserve(n_steps + 1);
    ModelParams p = params0;
    for (int n = 0; n <= n_steps; ++n) {
        if (n > 0) {
            const ModelParams &prev = traj.steps.back().params;
            p = flow_step(prev, opts);
            if (p.anisotropy == prev.anisotropy) {
                // Pinned at a fixed point: the reduced state is unchanged.
                traj.steps.push_back({n, p, effective_size(n), traj.steps.back().measures});
                continue;
            }
        }
        traj.steps.push_back({n, p, effective_size(n), measure_all(rho13(p.model, p.anisotropy))});
    }
    return traj;
}

std::string_view to_string(SweepAxis a) noexcept { return a == SweepAxis::Delta ? "delta" : "g"; }

SweepAxis parse_axis(std::string_view name) {
    if (name == "delta") {
        return SweepAxis::Delta;
    }
    if (name == "g") {
        return SweepAxis::G;
    }
    domain_error("unknown axis '" + std::string(name) + "'");
}

double anisotropy_from_axis(Model model, SweepAxis axis, double value) {
    if (model == Model::Xxz) {
        if (axis != SweepAxis::Delta) {
            domain_error("the XXZ model is swept along delta");
        }
        if (!(value >= 0)) {
            domain_error("delta must be nonnegative");
        }
        return value;
    }
    if (axis != SweepAxis::G) {
        domain_error("the XY model is swept along g");
    }
    if (!(value >= 0) || !std::isfinite(value)) {
        domain_error("g must be finite and nonnegative so that |gamma| <= 1");
    }
    return gamma_of_g(value);
}

std::vector<double> linear_grid(double lo, double hi, int points) {
    if (points < 2) {
        domain_error("a grid needs at least 2 points");
    }
    if (!(lo < hi)) {
        domain_error("grid requires lo < hi");
    }
    std::vector<double> grid(points);
    for (int k = 0; k < points; ++k) {
        grid[k] = k == points - 1 ? hi : lo + (hi - lo) * k / (points - 1);
    }
    return grid;
}

double flowed_measure(Model model, double anisotropy, int n, Measure m, const FlowOptions &opts) {
    check_iteration_count(n, opts);
    ModelParams p{model, 1.0, anisotropy};
    validate(p);
    for (int k = 0; k < n; ++k) {
        p = flow_step(p, opts);
    }
    return evaluate(m, rho13(model, p.anisotropy));
}

SweepTable sweep(const SweepSpec &spec, const FlowOptions &opts) {
    std::vector<double> grid = linear_grid(spec.lo, spec.hi, spec.points);
    if (spec.iterations.empty()) {
        domain_error("at least one iteration must be requested");
    }
    for (std::size_t i = 0; i < spec.iterations.size(); ++i) {
        check_iteration_count(spec.iterations[i], opts);
        if (i > 0 && spec.iterations[i] <= spec.iterations[i - 1]) {
            domain_error("iterations must be strictly increasing");
        }
    }
    if (spec.measures.empty()) {
        domain_error("at least one measure must be requested");
    }
    std::vector<double> start(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        start[k] = anisotropy_from_axis(spec.model, spec.axis, grid[k]);
    }

    SweepTable table{spec.model, spec.axis, grid, spec.iterations, spec.measures, {}};
    MeasureSet blank;
    for (Measure m : kAllMeasures) {
        blank.set(m, std::numeric_limits<double>::quiet_NaN());
    }
    table.values.assign(spec.iterations.size(), std::vector<MeasureSet>(grid.size(), blank));

    detail::parallel_for(grid.size(), [&](std::size_t k) {
        ModelParams p{spec.model, spec.j, start[k]};
        int n = 0;
        for (std::size_t i = 0; i < spec.iterations.size(); ++i) {
            for (; n < spec.iterations[i]; ++n) {
                p = flow_step(p, opts);
            }
            XState s = rho13(spec.model, p.anisotropy);
            for (Measure m : spec.measures) {
                table.values[i][k].set(m, evaluate(m, s));
            }
        }
    });
    return table;
}

}  // namespace qrg

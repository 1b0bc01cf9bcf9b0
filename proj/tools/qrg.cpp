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


// qrgcorr: sweeps, flows, scaling fits and self-checks for the quantum
// renormalization group correlation study.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "commands.hpp"
#include "qrg/errors.hpp"
#include "qrg/models.hpp"

namespace {

using namespace qrg;
using namespace qrg::cli;

struct RawOptions {
    std::string model = "xxz";
    std::string axis;
    std::string range;
    std::string iterations;
    std::string measures = "all";
    std::string out = ".";
    bool plot = true;
    int points = 500;
    double param = 0;
    double j = 1.0;
    int steps = 10;
    std::string measure = "chsh_max";
    std::string kind = "min";
    int refine = 3;
    double critical = 1.0;
    bool self_test = false;
    double lo = 0.5;
    double hi = 1.5;
    std::uint64_t seed = 42;
    int random_states = 10000;
    int oracle_states = 200;
    bool inject_fault = false;
};

void add_common(CLI::App *cmd, RawOptions &o) {
    cmd->add_option("--out", o.out, "Output directory")->capture_default_str();
    cmd->add_flag("--plot,!--no-plot", o.plot, "Write a plot script next to each CSV")->capture_default_str();
}

int dispatch(const CLI::App &app, const CLI::App *sweep, const CLI::App *flow, const CLI::App *scaling,
             const CLI::App *verify, const CLI::App *fixed, const RawOptions &o) {
    if (sweep->parsed()) {
        SweepCommand cmd;
        cmd.model = parse_model(o.model);
        if (!o.axis.empty()) {
            cmd.axis = parse_axis(o.axis);
        }
        if (!o.range.empty()) {
            cmd.range = parse_range(o.range);
        }
        cmd.points = o.points;
        if (!o.iterations.empty()) {
            cmd.iterations = parse_iterations(o.iterations);
        }
        cmd.measures = parse_measures(o.measures);
        cmd.out_dir = o.out;
        cmd.plot = o.plot;
        run_sweep(cmd, std::cout);
        return kExitOk;
    }
    if (flow->parsed()) {
        FlowCommand cmd;
        cmd.model = parse_model(o.model);
        cmd.param = o.param;
        cmd.j = o.j;
        cmd.steps = o.steps;
        cmd.measures = parse_measures(o.measures);
        cmd.out_dir = o.out;
        cmd.plot = o.plot;
        run_flow(cmd, std::cout);
        return kExitOk;
    }
    if (scaling->parsed()) {
        ScalingCommand cmd;
        cmd.self_test = o.self_test;
        cmd.spec.model = parse_model(o.model);
        cmd.spec.measure = parse_measure(o.measure);
        cmd.spec.kind = parse_extremum_kind(o.kind);
        if (!o.iterations.empty()) {
            cmd.spec.iterations = parse_iterations(o.iterations);
        }
        if (!o.range.empty()) {
            std::tie(cmd.spec.lo, cmd.spec.hi) = parse_range(o.range);
        }
        if (o.points < 3) {
            throw ConfigError("--points must be at least 3");
        }
        if (o.refine < 0) {
            throw ConfigError("--refine must be nonnegative");
        }
        cmd.spec.points = o.points;
        cmd.spec.refine_passes = o.refine;
        cmd.spec.critical = o.critical;
        cmd.out_dir = o.out;
        cmd.plot = o.plot;
        run_scaling(cmd, std::cout);
        return kExitOk;
    }
    if (verify->parsed()) {
        VerifyConfig cfg;
        cfg.seed = o.seed;
        cfg.random_states = o.random_states;
        cfg.oracle_states = o.oracle_states;
        cfg.inject_fault = o.inject_fault;
        return run_verify(cfg, std::cout);
    }
    if (fixed->parsed()) {
        std::vector<Model> models{Model::Xxz, Model::Xy};
        if (fixed->count("--model") > 0) {
            models = {parse_model(o.model)};
        }
        write_fixed_points(std::cout, models);
        return kExitOk;
    }
    std::cerr << app.help();
    return kExitConfig;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum correlations along renormalization group flows of XXZ and XY chains", "qrgcorr"};
    app.require_subcommand(1);
    RawOptions o;

    auto *sweep = app.add_subcommand("sweep", "Tabulate measures over a parameter grid and several iterations");
    sweep->add_option("--model", o.model, "xxz or xy")->capture_default_str();
    sweep->add_option("--axis", o.axis, "delta (xxz) or g (xy); defaults to the model's axis");
    sweep->add_option("--range", o.range, "lo:hi (default 0:2.5 for xxz, 0:3 for xy)");
    sweep->add_option("--points", o.points, "Grid points")->capture_default_str();
    sweep->add_option("--iterations", o.iterations, "a..b or a,b,c (default 0..6)");
    sweep->add_option("--measures", o.measures, "Comma-separated measure names or 'all'")->capture_default_str();
    add_common(sweep, o);

    auto *flow = app.add_subcommand("flow", "Follow one parameter value along the flow");
    flow->add_option("--model", o.model, "xxz or xy")->capture_default_str();
    flow->add_option("--param", o.param, "Initial delta (xxz) or gamma (xy)")->required();
    flow->add_option("--j", o.j, "Initial coupling")->capture_default_str();
    flow->add_option("--steps", o.steps, "Number of steps")->capture_default_str();
    flow->add_option("--measures", o.measures, "Comma-separated measure names or 'all'")->capture_default_str();
    add_common(flow, o);

    auto *scaling = app.add_subcommand("scaling", "Finite-size scaling of a measure's derivative extremum");
    o.model = "xy";
    scaling->add_option("--model", o.model, "xxz or xy");
    scaling->add_option("--measure", o.measure, "Measure to differentiate")->capture_default_str();
    scaling->add_option("--kind", o.kind, "min or max")->capture_default_str();
    scaling->add_option("--iterations", o.iterations, "a..b or a,b,c (default 2..7)");
    scaling->add_option("--range", o.range, "lo:hi of the initial grid (default 0.5:1.5)");
    scaling->add_option("--points", o.points, "Grid points per scan");
    scaling->add_option("--refine", o.refine, "Re-gridding passes around the extremum")->capture_default_str();
    scaling->add_option("--critical", o.critical, "Critical value for the position fit")->capture_default_str();
    scaling->add_flag("--self-test", o.self_test, "Fit a built-in power law instead");
    add_common(scaling, o);

    auto *verify = app.add_subcommand("verify", "Run the self-check suite");
    verify->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    verify->add_option("--random-states", o.random_states, "Random states for identity checks")->capture_default_str();
    verify->add_option("--oracle-states", o.oracle_states, "Random states compared against the search oracle")
        ->capture_default_str();
    verify->add_flag("--inject-fault", o.inject_fault)->group("");

    auto *fixed = app.add_subcommand("fixed-points", "List fixed points of the coupling maps");
    fixed->add_option("--model", o.model, "xxz or xy (default both)");

    // Subcommand-specific defaults that differ from the shared storage.
    sweep->preparse_callback([&](std::size_t) { o.model = "xxz"; });
    flow->preparse_callback([&](std::size_t) { o.model = "xxz"; });
    scaling->preparse_callback([&](std::size_t) {
        o.model = "xy";
        o.points = 2001;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        return dispatch(app, sweep, flow, scaling, verify, fixed, o);
    } catch (const ConfigError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const Error &e) {
        std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return e.kind() == ErrorKind::DomainError ? kExitConfig : kExitNumeric;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumeric;
    }
}

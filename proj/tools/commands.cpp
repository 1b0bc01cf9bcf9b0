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

#include "commands.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "qrg/errors.hpp"
#include "qrg/models.hpp"

namespace qrg::cli {

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string_view::npos ? std::string() : std::string(s.substr(b, e - b + 1));
}

int parse_int(std::string_view text) {
    std::string t = trim(text);
    int v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
        throw ConfigError("expected an integer, got '" + std::string(text) + "'");
    }
    return v;
}

double parse_double(std::string_view text) {
    std::string t = trim(text);
    // strtod honours the C locale, which is all this program ever uses.
    char *end = nullptr;
    double v = std::strtod(t.c_str(), &end);
    if (t.empty() || end != t.c_str() + t.size() || !std::isfinite(v)) {
        throw ConfigError("expected a number, got '" + std::string(text) + "'");
    }
    return v;
}

std::ofstream open_output(const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ConfigError("cannot open '" + path.string() + "' for writing");
    }
    return out;
}

void ensure_dir(const std::filesystem::path &dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) {
        throw ConfigError("cannot create output directory '" + dir.string() + "'");
    }
}

void write_file(const std::filesystem::path &path, const std::string &content) {
    auto out = open_output(path);
    out << content;
}

std::string iteration_list(const std::vector<int> &iters) {
    std::string s;
    for (std::size_t i = 0; i < iters.size(); ++i) {
        s += (i ? " " : "") + std::to_string(iters[i]);
    }
    return s;
}

std::string position_column(const ScalingSpec &spec) {
    return std::string(spec.model == Model::Xxz ? "delta" : "g") + "_m";
}

std::string magnitude_column(const ScalingSpec &spec) {
    return "deriv_" + std::string(to_string(spec.kind)) + "_abs";
}

}  // namespace

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::vector<int> parse_iterations(std::string_view text) {
    std::vector<int> out;
    if (auto dots = text.find(".."); dots != std::string_view::npos) {
        int lo = parse_int(text.substr(0, dots));
        int hi = parse_int(text.substr(dots + 2));
        if (hi < lo) {
            throw ConfigError("iteration range '" + std::string(text) + "' is empty");
        }
        for (int n = lo; n <= hi; ++n) {
            out.push_back(n);
        }
    } else {
        std::size_t start = 0;
        while (start <= text.size()) {
            auto comma = text.find(',', start);
            auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
            out.push_back(parse_int(piece));
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i] < 0) {
            throw ConfigError("iterations must be nonnegative");
        }
        if (i > 0 && out[i] <= out[i - 1]) {
            throw ConfigError("iterations must be strictly increasing");
        }
    }
    return out;
}

std::pair<double, double> parse_range(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw ConfigError("range must look like lo:hi, got '" + std::string(text) + "'");
    }
    double lo = parse_double(text.substr(0, colon));
    double hi = parse_double(text.substr(colon + 1));
    if (!(lo < hi)) {
        throw ConfigError("range needs lo < hi");
    }
    return {lo, hi};
}

std::vector<Measure> parse_measures(std::string_view text) {
    if (trim(text) == "all") {
        return {kAllMeasures.begin(), kAllMeasures.end()};
    }
    std::vector<bool> wanted(kAllMeasures.size(), false);
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto piece = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        try {
            wanted[static_cast<std::size_t>(parse_measure(piece))] = true;
        } catch (const Error &e) {
            throw ConfigError(e.what());
        }
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    // Canonical column order regardless of how the list was written.
    std::vector<Measure> out;
    for (Measure m : kAllMeasures) {
        if (wanted[static_cast<std::size_t>(m)]) {
            out.push_back(m);
        }
    }
    return out;
}

void write_sweep_csv(std::ostream &out, const SweepTable &table) {
    out << to_string(table.axis) << ",iteration,N";
    for (Measure m : table.measures) {
        out << ',' << to_string(m);
    }
    out << '\n';
    for (std::size_t k = 0; k < table.grid.size(); ++k) {
        for (std::size_t i = 0; i < table.iterations.size(); ++i) {
            out << format_number(table.grid[k]) << ',' << table.iterations[i] << ','
                << effective_size(table.iterations[i]);
            for (Measure m : table.measures) {
                out << ',' << format_number(table.values[i][k].get(m));
            }
            out << '\n';
        }
    }
}

void write_flow_csv(std::ostream &out, const RGTrajectory &traj, const std::vector<Measure> &measures) {
    out << "n,N,param,J";
    for (Measure m : measures) {
        out << ',' << to_string(m);
    }
    out << '\n';
    for (const auto &step : traj.steps) {
        out << step.n << ',' << step.size << ',' << format_number(step.params.anisotropy) << ','
            << format_number(step.params.j);
        for (Measure m : measures) {
            out << ',' << format_number(step.measures.get(m));
        }
        out << '\n';
    }
}

void write_scaling_csv(std::ostream &out, const ScalingReport &report, const ScalingSpec &spec) {
    out << "n,N," << position_column(spec) << ',' << magnitude_column(spec) << '\n';
    for (const auto &row : report.rows) {
        out << row.n << ',' << row.size << ',' << format_number(row.position) << ','
            << format_number(std::abs(row.derivative)) << '\n';
    }
}

void write_scaling_summary(std::ostream &out, const ScalingReport &report, const ScalingSpec &spec) {
    out << "# model=" << to_string(spec.model) << " measure=" << to_string(spec.measure)
        << " kind=" << to_string(spec.kind) << " iterations=" << iteration_list(spec.iterations)
        << " critical=" << format_number(spec.critical) << '\n';
    auto emit = [&](const char *name, const ScalingFit &fit) {
        out << name << "_exponent," << format_number(fit.exponent) << '\n';
        out << name << "_intercept," << format_number(fit.intercept) << '\n';
        out << name << "_r_squared," << format_number(fit.r_squared) << '\n';
    };
    emit("magnitude", report.magnitude);
    emit("position", report.position);
}

void write_fixed_points(std::ostream &out, const std::vector<Model> &models) {
    out << "model,parameter,value,stability,multiplier\n";
    for (Model m : models) {
        for (const auto &fp : fixed_points(m)) {
            out << to_string(m) << ',' << (m == Model::Xxz ? "delta" : "gamma") << ',' << format_number(fp.value)
                << ',' << to_string(fp.stability) << ',' << format_number(fp.multiplier) << '\n';
        }
    }
}

void write_verify_report(std::ostream &out, const std::vector<CheckResult> &results) {
    for (const auto &r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    }
}

std::string sweep_plot_script(const SweepTable &table, const std::string &csv_name) {
    std::ostringstream s;
    std::string axis(to_string(table.axis));
    s << "# Plot script for " << csv_name << " (gnuplot syntax).\n"
      << "set datafile separator ','\n"
      << "set xlabel '" << axis << "'\n"
      << "iterations = '" << iteration_list(table.iterations) << "'\n";
    int column = 4;
    for (Measure m : table.measures) {
        s << "\nset ylabel '" << to_string(m) << "'\n"
          << "plot for [n in iterations] '" << csv_name << "' using 1:($2 == n+0 ? $" << column
          << " : 1/0) every ::1 with lines title sprintf('n = %s', n)\n"
          << "pause -1\n";
        ++column;
    }
    return s.str();
}

std::string flow_plot_script(const RGTrajectory &traj, const std::vector<Measure> &measures,
                             const std::string &csv_name) {
    std::ostringstream s;
    s << "# Plot script for " << csv_name << " (gnuplot syntax).\n"
      << "set datafile separator ','\n"
      << "set key autotitle columnhead\n"
      << "set xlabel 'n'\n"
      << "set ylabel '" << (traj.model == Model::Xxz ? "delta" : "gamma") << "'\n"
      << "plot '" << csv_name << "' using 1:3 with linespoints\n"
      << "pause -1\n";
    int column = 5;
    for (Measure m : measures) {
        s << "set ylabel '" << to_string(m) << "'\n"
          << "plot '" << csv_name << "' using 1:" << column << " with linespoints\n"
          << "pause -1\n";
        ++column;
    }
    return s.str();
}

std::string scaling_plot_script(const ScalingSpec &spec, const std::string &csv_name) {
    std::ostringstream s;
    s << "# Log-log panels for " << csv_name << " (gnuplot syntax).\n"
      << "set datafile separator ','\n"
      << "set xlabel 'ln(N)'\n"
      << "f(x) = a*x + b\n"
      << "set ylabel 'ln(" << magnitude_column(spec) << ")'\n"
      << "fit f(x) '" << csv_name << "' every ::1 using (log($2)):(log($4)) via a, b\n"
      << "plot '" << csv_name << "' every ::1 using (log($2)):(log($4)) with points title 'data', f(x) title 'fit'\n"
      << "pause -1\n"
      << "set ylabel 'ln(|" << format_number(spec.critical) << " - " << position_column(spec) << "|)'\n"
      << "fit f(x) '" << csv_name << "' every ::1 using (log($2)):(log(abs(" << format_number(spec.critical)
      << " - $3))) via a, b\n"
      << "plot '" << csv_name << "' every ::1 using (log($2)):(log(abs(" << format_number(spec.critical)
      << " - $3))) with points title 'data', f(x) title 'fit'\n"
      << "pause -1\n";
    return s.str();
}

ScalingFit synthetic_power_law_fit() {
    std::vector<std::pair<double, double>> pts;
    for (int n = 2; n <= 7; ++n) {
        double size = static_cast<double>(effective_size(n));
        pts.emplace_back(size, 5 * size * size);
    }
    return loglog_fit(pts);
}

std::vector<std::filesystem::path> run_sweep(const SweepCommand &cmd, std::ostream &log) {
    SweepAxis axis = cmd.axis.value_or(cmd.model == Model::Xxz ? SweepAxis::Delta : SweepAxis::G);
    if ((cmd.model == Model::Xxz) != (axis == SweepAxis::Delta)) {
        throw ConfigError("axis '" + std::string(to_string(axis)) + "' does not apply to model '" +
                          std::string(to_string(cmd.model)) + "'");
    }
    auto [lo, hi] = cmd.range.value_or(cmd.model == Model::Xxz ? std::pair{0.0, 2.5} : std::pair{0.0, 3.0});
    if (cmd.points < 2) {
        throw ConfigError("--points must be at least 2");
    }
    if (cmd.iterations.empty() || cmd.measures.empty()) {
        throw ConfigError("need at least one iteration and one measure");
    }
    SweepSpec spec{cmd.model, axis, lo, hi, cmd.points, cmd.iterations, cmd.measures, 1.0};
    SweepTable table = sweep(spec);

    ensure_dir(cmd.out_dir);
    std::string stem = "sweep_" + std::string(to_string(cmd.model)) + "_" + std::string(to_string(axis));
    std::vector<std::filesystem::path> written{cmd.out_dir / (stem + ".csv")};
    {
        auto out = open_output(written[0]);
        write_sweep_csv(out, table);
    }
    if (cmd.plot) {
        written.push_back(cmd.out_dir / (stem + ".gp"));
        write_file(written[1], sweep_plot_script(table, stem + ".csv"));
    }
    for (const auto &p : written) {
        log << "wrote " << p.string() << '\n';
    }
    return written;
}

std::vector<std::filesystem::path> run_flow(const FlowCommand &cmd, std::ostream &log) {
    if (cmd.steps < 0) {
        throw ConfigError("--steps must be nonnegative");
    }
    if (cmd.measures.empty()) {
        throw ConfigError("need at least one measure");
    }
    RGTrajectory traj = iterate({cmd.model, cmd.j, cmd.param}, cmd.steps);

    ensure_dir(cmd.out_dir);
    std::string stem = "flow_" + std::string(to_string(cmd.model));
    std::vector<std::filesystem::path> written{cmd.out_dir / (stem + ".csv")};
    {
        auto out = open_output(written[0]);
        write_flow_csv(out, traj, cmd.measures);
    }
    if (cmd.plot) {
        written.push_back(cmd.out_dir / (stem + ".gp"));
        write_file(written[1], flow_plot_script(traj, cmd.measures, stem + ".csv"));
    }
    for (const auto &p : written) {
        log << "wrote " << p.string() << '\n';
    }
    return written;
}

std::vector<std::filesystem::path> run_scaling(const ScalingCommand &cmd, std::ostream &log) {
    if (cmd.self_test) {
        ScalingFit fit = synthetic_power_law_fit();
        log << "self_test_exponent," << format_number(fit.exponent) << '\n'
            << "self_test_r_squared," << format_number(fit.r_squared) << '\n';
        return {};
    }
    if (cmd.spec.iterations.size() < 3) {
        throw ConfigError("scaling needs at least 3 iterations");
    }
    ScalingReport report = scaling_report(cmd.spec);

    ensure_dir(cmd.out_dir);
    std::string stem = "scaling_" + std::string(to_string(cmd.spec.model)) + "_" + std::string(to_string(cmd.spec.measure));
    std::vector<std::filesystem::path> written{cmd.out_dir / (stem + ".csv"), cmd.out_dir / (stem + "_summary.txt")};
    {
        auto out = open_output(written[0]);
        write_scaling_csv(out, report, cmd.spec);
    }
    std::ostringstream summary;
    write_scaling_summary(summary, report, cmd.spec);
    write_file(written[1], summary.str());
    if (cmd.plot) {
        written.push_back(cmd.out_dir / (stem + ".gp"));
        write_file(written[2], scaling_plot_script(cmd.spec, stem + ".csv"));
    }
    log << summary.str();
    for (const auto &p : written) {
        log << "wrote " << p.string() << '\n';
    }
    return written;
}

int run_verify(const VerifyConfig &cfg, std::ostream &log) {
    if (cfg.random_states < 1 || cfg.oracle_states < 0) {
        throw ConfigError("--random-states must be positive and --oracle-states nonnegative");
    }
    auto results = run_verification(cfg);
    write_verify_report(log, results);
    std::size_t failed = 0;
    for (const auto &r : results) {
        failed += r.passed ? 0 : 1;
    }
    log << (failed == 0 ? "all " + std::to_string(results.size()) + " checks passed"
                        : std::to_string(failed) + " of " + std::to_string(results.size()) + " checks failed")
        << '\n';
    return failed == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace qrg::cli

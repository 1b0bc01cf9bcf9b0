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

// Table writers and argument parsing shared by the qrgcorr executable and
// its tests.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qrg/flow.hpp"
#include "qrg/measures.hpp"
#include "qrg/scaling.hpp"
#include "qrg/verify.hpp"

namespace qrg::cli {

/// Invalid command-line input. Maps to exit code 2.
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumeric = 3;

/// 12 significant digits, shortest of fixed/scientific, lowercase 'e'.
std::string format_number(double v);

/// "a..b" (inclusive), "a,b,c" or a single integer.
std::vector<int> parse_iterations(std::string_view text);
/// "lo:hi".
std::pair<double, double> parse_range(std::string_view text);
/// Comma-separated measure names, or "all".
std::vector<Measure> parse_measures(std::string_view text);

void write_sweep_csv(std::ostream &out, const SweepTable &table);
void write_flow_csv(std::ostream &out, const RGTrajectory &traj, const std::vector<Measure> &measures);
void write_scaling_csv(std::ostream &out, const ScalingReport &report, const ScalingSpec &spec);
void write_scaling_summary(std::ostream &out, const ScalingReport &report, const ScalingSpec &spec);
void write_fixed_points(std::ostream &out, const std::vector<Model> &models);
/// One line per check: "PASS name: detail" or "FAIL name: detail".
void write_verify_report(std::ostream &out, const std::vector<CheckResult> &results);

std::string sweep_plot_script(const SweepTable &table, const std::string &csv_name);
std::string flow_plot_script(const RGTrajectory &traj, const std::vector<Measure> &measures,
                             const std::string &csv_name);
std::string scaling_plot_script(const ScalingSpec &spec, const std::string &csv_name);

/// Power-law fixture 5 N^2 over n = 2..7, for checking the fit path.
ScalingFit synthetic_power_law_fit();

struct SweepCommand {
    Model model = Model::Xxz;
    std::optional<SweepAxis> axis;
    std::optional<std::pair<double, double>> range;
    int points = 500;
    std::vector<int> iterations{0, 1, 2, 3, 4, 5, 6};
    std::vector<Measure> measures{kAllMeasures.begin(), kAllMeasures.end()};
    std::filesystem::path out_dir = ".";
    bool plot = true;
};

struct FlowCommand {
    Model model = Model::Xxz;
    double param = 0;
    double j = 1.0;
    int steps = 10;
    std::vector<Measure> measures{kAllMeasures.begin(), kAllMeasures.end()};
    std::filesystem::path out_dir = ".";
    bool plot = true;
};

struct ScalingCommand {
    ScalingSpec spec;
    bool self_test = false;
    std::filesystem::path out_dir = ".";
    bool plot = true;
};

/// Each runner writes its files under out_dir, reports what it wrote on
/// `log`, and returns the paths of the files written.
std::vector<std::filesystem::path> run_sweep(const SweepCommand &cmd, std::ostream &log);
std::vector<std::filesystem::path> run_flow(const FlowCommand &cmd, std::ostream &log);
std::vector<std::filesystem::path> run_scaling(const ScalingCommand &cmd, std::ostream &log);
/// Returns the exit code (0 iff every check passed).
int run_verify(const VerifyConfig &cfg, std::ostream &log);

}  // namespace qrg::cli

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


// End-to-end tests of the qrgcorr executable plus the shared command layer.

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "commands.hpp"
#include "qrg/flow.hpp"
#include "qrg/models.hpp"

using namespace qrg;
using namespace qrg::cli;
namespace fs = std::filesystem;

namespace {

const fs::path kWork = QRG_CLI_WORK_DIR;

int run(const std::string &args, const fs::path &out_file = kWork / "stdout.txt") {
    fs::create_directories(kWork);
    std::string cmd = std::string(QRGCORR_PATH) + " " + args + " > " + out_file.string() + " 2> " +
                      (kWork / "stderr.txt").string();
    int status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::vector<std::string>> read_csv(const fs::path &p) {
    std::vector<std::vector<std::string>> rows;
    std::ifstream in(p);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            cells.push_back(cell);
        }
        rows.push_back(cells);
    }
    return rows;
}

fs::path fresh_dir(const std::string &name) {
    fs::path d = kWork / name;
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

bool close12(double printed, double exact) {
    return std::abs(printed - exact) <= 1e-11 * std::max(1.0, std::abs(exact)) || printed == exact;
}

}  // namespace

TEST_CASE("format_number") {
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(1.0 / 3) == "0.333333333333");
    CHECK(format_number(2.5e-9) == "2.5e-09");
    CHECK(format_number(123456789012345.0) == "1.23456789012e+14");
    CHECK(format_number(0) == "0");
}

TEST_CASE("argument parsers") {
    CHECK(parse_iterations("0..6") == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
    CHECK(parse_iterations("1,3,9") == std::vector<int>{1, 3, 9});
    CHECK(parse_iterations("4") == std::vector<int>{4});
    CHECK_THROWS_AS(parse_iterations("3..1"), ConfigError);
    CHECK_THROWS_AS(parse_iterations("3,1"), ConfigError);
    CHECK_THROWS_AS(parse_iterations("a..b"), ConfigError);
    CHECK_THROWS_AS(parse_iterations("-1..2"), ConfigError);
    CHECK(parse_range("0:2.5") == std::pair{0.0, 2.5});
    CHECK_THROWS_AS(parse_range("2"), ConfigError);
    CHECK_THROWS_AS(parse_range("2:1"), ConfigError);
    CHECK(parse_measures("all").size() == 9);
    CHECK(parse_measures("chsh_max,concurrence") == std::vector<Measure>{Measure::Concurrence, Measure::ChshMax});
    CHECK_THROWS_AS(parse_measures("concurrence,bogus"), ConfigError);
}

TEST_CASE("synthetic scaling fixture") {
    ScalingFit fit = synthetic_power_law_fit();
    CHECK(std::abs(fit.exponent - 2) < 1e-10);
    CHECK(run("scaling --self-test") == 0);
    CHECK(slurp(kWork / "stdout.txt").find("self_test_exponent,2\n") != std::string::npos);
}

TEST_CASE("exit codes") {
    fs::path d = fresh_dir("codes");
    std::string out = " --out " + d.string();
    CHECK(run("sweep --points 1" + out) == 2);
    CHECK(run("sweep --model xy --axis delta" + out) == 2);
    CHECK(run("sweep --model heisenberg" + out) == 2);
    CHECK(run("sweep --iterations 0..31 --points 3" + out) == 2);
    CHECK(run("sweep --frobnicate" + out) == 2);
    CHECK(run("flow --model xxz --param 0.5 --steps -1" + out) == 2);
    CHECK(run("flow --model xxz --param -0.5" + out) == 2);
    CHECK(run("scaling --iterations 2..3" + out) == 2);
    CHECK(run("scaling --range 1.2:1.5 --points 101" + out) == 3);
    CHECK(run("") == 2);
    CHECK(run("verify --random-states 500 --oracle-states 5 --inject-fault") == 1);
    CHECK(slurp(kWork / "stdout.txt").find("FAIL mid-equals-sigma-z-discord") != std::string::npos);
    CHECK(run("verify --random-states 500 --oracle-states 5") == 0);
    CHECK(slurp(kWork / "stderr.txt").empty());
    CHECK(run("--help") == 0);
}

TEST_CASE("fixed-points output") {
    CHECK(run("fixed-points") == 0);
    CHECK(slurp(kWork / "stdout.txt") ==
          "model,parameter,value,stability,multiplier\n"
          "xxz,delta,0,stable,0.5\n"
          "xxz,delta,1,unstable,1.66666666667\n"
          "xy,gamma,-1,stable,0\n"
          "xy,gamma,0,unstable,3\n"
          "xy,gamma,1,stable,0\n");
    CHECK(run("fixed-points --model xy") == 0);
    CHECK(slurp(kWork / "stdout.txt").find("xxz") == std::string::npos);
}

TEST_CASE("sweep CSV layout and round trip") {
    fs::path d = fresh_dir("sweep");
    REQUIRE(run("sweep --model xxz --axis delta --range 0:2.5 --points 26 --iterations 0..3 --out " + d.string()) ==
            0);
    REQUIRE(fs::exists(d / "sweep_xxz_delta.csv"));
    REQUIRE(fs::exists(d / "sweep_xxz_delta.gp"));
    auto rows = read_csv(d / "sweep_xxz_delta.csv");
    REQUIRE(rows.size() == 1 + 26 * 4);
    std::string header;
    for (std::size_t i = 0; i < rows[0].size(); ++i) {
        header += (i ? "," : "") + rows[0][i];
    }
    CHECK(header == "delta,iteration,N,concurrence,qd_optimal,qd_sigma_x,qd_sigma_y,qd_sigma_z,mid,gd,min,chsh_max");
    double prev_x = -1;
    int prev_n = -1;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        double x = std::stod(rows[r][0]);
        int n = std::stoi(rows[r][1]);
        CHECK((x > prev_x || (x == prev_x && n > prev_n)));
        prev_x = x;
        prev_n = n;
        CHECK(std::stoll(rows[r][2]) == effective_size(n));
        for (std::size_t c = 3; c < rows[r].size(); ++c) {
            Measure m = kAllMeasures[c - 3];
            CHECK(close12(std::stod(rows[r][c]), flowed_measure(Model::Xxz, x, n, m)));
        }
    }
}

TEST_CASE("XY sweep with a measure subset") {
    fs::path d = fresh_dir("sweep_xy");
    REQUIRE(run("sweep --model xy --range 0:3 --points 31 --iterations 0,2,6 --measures mid,chsh_max --no-plot --out " +
                d.string()) == 0);
    CHECK_FALSE(fs::exists(d / "sweep_xy_g.gp"));
    auto rows = read_csv(d / "sweep_xy_g.csv");
    REQUIRE(rows.size() == 1 + 31 * 3);
    CHECK(rows[0] == std::vector<std::string>{"g", "iteration", "N", "mid", "chsh_max"});
    for (std::size_t r = 1; r < rows.size(); ++r) {
        double g = std::stod(rows[r][0]);
        int n = std::stoi(rows[r][1]);
        double gamma = gamma_of_g(g);
        CHECK(close12(std::stod(rows[r][3]), flowed_measure(Model::Xy, gamma, n, Measure::Mid)));
        CHECK(close12(std::stod(rows[r][4]), flowed_measure(Model::Xy, gamma, n, Measure::ChshMax)));
    }
}

TEST_CASE("flow CSV") {
    fs::path d = fresh_dir("flow");
    REQUIRE(run("flow --model xxz --param 1 --steps 10 --out " + d.string()) == 0);
    auto rows = read_csv(d / "flow_xxz.csv");
    REQUIRE(rows.size() == 12);
    CHECK(rows[0][0] == "n");
    CHECK(rows[0][3] == "J");
    for (std::size_t r = 2; r < rows.size(); ++r) {
        CHECK(rows[r][2] == "1");
        for (std::size_t c = 4; c < rows[r].size(); ++c) {
            CHECK(rows[r][c] == rows[1][c]);
        }
    }
    REQUIRE(run("flow --model xy --param 0.5 --steps 6 --measures gd --out " + d.string()) == 0);
    auto xy = read_csv(d / "flow_xy.csv");
    CHECK(std::abs(std::stod(xy[2][2]) - 0.928571428571) < 1e-12);
    for (std::size_t r = 2; r < xy.size(); ++r) {
        CHECK(std::stod(xy[r][2]) >= std::stod(xy[r - 1][2]));
    }
    CHECK(xy.back()[2] == "1");
}

TEST_CASE("scaling CSV and summary") {
    fs::path d = fresh_dir("scaling");
    REQUIRE(run("scaling --out " + d.string()) == 0);
    auto rows = read_csv(d / "scaling_xy_chsh_max.csv");
    REQUIRE(rows.size() == 7);
    CHECK(rows[0] == std::vector<std::string>{"n", "N", "g_m", "deriv_min_abs"});
    std::string summary = slurp(d / "scaling_xy_chsh_max_summary.txt");
    CHECK(summary.find("magnitude_exponent,0.98") != std::string::npos);
    CHECK(summary.find("position_exponent,-1.00") != std::string::npos);
    CHECK(fs::exists(d / "scaling_xy_chsh_max.gp"));
}

TEST_CASE("output is byte-identical across runs") {
    for (const std::string &args :
         {std::string("sweep --model xxz --points 120"), std::string("sweep --model xy --points 120"),
          std::string("flow --model xy --param 0.3 --steps 12"), std::string("scaling")}) {
        CAPTURE(args);
        fs::path a = fresh_dir("det_a");
        fs::path b = fresh_dir("det_b");
        REQUIRE(run(args + " --out " + a.string()) == 0);
        REQUIRE(run(args + " --out " + b.string()) == 0);
        for (const auto &entry : fs::directory_iterator(a)) {
            CHECK(slurp(entry.path()) == slurp(b / entry.path().filename()));
        }
    }
    REQUIRE(run("verify --seed 7 --random-states 2000 --oracle-states 10", kWork / "v1.txt") == 0);
    REQUIRE(run("verify --seed 7 --random-states 2000 --oracle-states 10", kWork / "v2.txt") == 0);
    CHECK(slurp(kWork / "v1.txt") == slurp(kWork / "v2.txt"));
}

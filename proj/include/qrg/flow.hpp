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

#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "qrg/measures.hpp"
#include "qrg/models.hpp"

namespace qrg {

inline constexpr int kDefaultMaxIterations = 30;
/// A coupling this close to a fixed point is pinned there.
inline constexpr double kFixedPointSnap = 1e-14;

/// 3^(n+1), the chain length represented after n block steps. Throws
/// Error(DomainError) for n < 0 and Error(Overflow) past int64.
std::int64_t effective_size(int n);

struct FlowOptions {
    int max_iterations = kDefaultMaxIterations;
    double fixed_point_snap = kFixedPointSnap;
};

/// One block step, pinning the anisotropy to a fixed point once it is within
/// the snap distance (J keeps flowing).
ModelParams flow_step(const ModelParams &p, const FlowOptions &opts = {});

struct TrajectoryStep {
    int n;
    ModelParams params;
    std::int64_t size;
    MeasureSet measures;
};

struct RGTrajectory {
    Model model;
    ModelParams initial;
    std::vector<TrajectoryStep> steps;
};

/// n_steps + 1 entries (n = 0 .. n_steps). Throws Error(DomainError) for
/// invalid parameters, negative n_steps, or n_steps above the cap.
RGTrajectory iterate(const ModelParams &params0, int n_steps, const FlowOptions &opts = {});

enum class SweepAxis { Delta, G };
std::string_view to_string(SweepAxis a) noexcept;
SweepAxis parse_axis(std::string_view name);

/// Maps an axis value to the model anisotropy (g -> gamma for XY).
/// Throws Error(DomainError) for axis/model mismatch or out-of-domain values.
double anisotropy_from_axis(Model model, SweepAxis axis, double value);

struct SweepSpec {
    Model model = Model::Xxz;
    SweepAxis axis = SweepAxis::Delta;
    double lo = 0;
    double hi = 1;
    int points = 2;
    std::vector<int> iterations{0};
    /// Measures to evaluate; the rest of each MeasureSet is left NaN.
    std::vector<Measure> measures{kAllMeasures.begin(), kAllMeasures.end()};
    double j = 1.0;
};

struct SweepTable {
    Model model;
    SweepAxis axis;
    std::vector<double> grid;
    std::vector<int> iterations;
    std::vector<Measure> measures;
    /// values[i][k]: iteration iterations[i] at grid point grid[k].
    std::vector<std::vector<MeasureSet>> values;
};

/// Inclusive affine grid lo + (hi - lo) k / (points - 1).
std::vector<double> linear_grid(double lo, double hi, int points);

/// Throws Error(DomainError) for lo >= hi, points < 2, unsorted or
/// out-of-range iterations, and axis/model or domain mismatch.
SweepTable sweep(const SweepSpec &spec, const FlowOptions &opts = {});

/// Flows the anisotropy alone n times and evaluates one measure; the hot
/// path for derivative scans.
double flowed_measure(Model model, double anisotropy, int n, Measure m, const FlowOptions &opts = {});

}  // namespace qrg

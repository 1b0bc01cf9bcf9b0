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
#include <utility>
#include <vector>

#include "qrg/flow.hpp"
#include "qrg/measures.hpp"
#include "qrg/models.hpp"

namespace qrg {

struct DerivativeCurve {
    std::vector<double> grid;
    std::vector<double> derivative;
    int iteration = 0;
    std::int64_t size = 0;
};

/// Second-order finite differences: central in the interior, one-sided
/// three-point at the ends. Throws Error(NonUniformGrid) if the spacing
/// varies, and Error(DomainError) for fewer than 3 points or mismatched
/// lengths.
DerivativeCurve numeric_derivative(std::span<const double> values, std::span<const double> grid, int iteration = 0);

enum class ExtremumKind { Min, Max };
std::string_view to_string(ExtremumKind k) noexcept;
ExtremumKind parse_extremum_kind(std::string_view name);

struct Extremum {
    double position;
    double value;
};

/// Grid argmin/argmax refined by the parabola through the bracketing
/// points. Throws Error(ExtremumAtBoundary) when the grid extremum is an
/// endpoint.
Extremum find_extremum(const DerivativeCurve &curve, ExtremumKind kind);

struct ScalingFit {
    double exponent = 0;
    double intercept = 0;
    double r_squared = 0;
    /// (ln N, ln value) pairs that entered the fit.
    std::vector<std::pair<double, double>> points;
};

/// Least-squares line through (ln N, ln value). Needs at least 3 points;
/// throws Error(NonPositiveValue) if any N or value is <= 0.
ScalingFit loglog_fit(std::span<const std::pair<double, double>> points);

struct ScalingSpec {
    Model model = Model::Xy;
    Measure measure = Measure::ChshMax;
    /// n = 0 and 1 are pre-asymptotic and left out by default.
    std::vector<int> iterations{2, 3, 4, 5, 6, 7};
    double lo = 0.5;
    double hi = 1.5;
    int points = 2001;
    ExtremumKind kind = ExtremumKind::Min;
    /// Re-sweeps of a shrinking window around the extremum estimate.
    int refine_passes = 3;
    /// Critical value of the sweep variable (g_c for XY, delta_c for XXZ).
    double critical = 1.0;
};

struct ScalingRow {
    int n;
    std::int64_t size;
    double position;
    double derivative;  // signed extremum of d(measure)/d(axis)
};

struct ScalingReport {
    std::vector<ScalingRow> rows;
    /// |d measure / d axis| at the extremum versus N.
    ScalingFit magnitude;
    /// |critical - position| versus N.
    ScalingFit position;
};

/// The derivative curve of one measure after n flow steps, sampled on
/// `grid` (sweep variable: delta for XXZ, g for XY).
DerivativeCurve derivative_scan(Model model, Measure measure, int n, std::span<const double> grid);

ScalingReport scaling_report(const ScalingSpec &spec);

}  // namespace qrg

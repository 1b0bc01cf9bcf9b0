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

#include "qrg/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "parallel.hpp"
#include "qrg/errors.hpp"

namespace qrg {

namespace {

[[noreturn]] void domain_error(const std::string &what) { throw Error(ErrorKind::DomainError, what); }

SweepAxis natural_axis(Model m) { return m == Model::Xxz ? SweepAxis::Delta : SweepAxis::G; }

}  // namespace

DerivativeCurve numeric_derivative(std::span<const double> values, std::span<const double> grid, int iteration) {
    const std::size_t n = grid.size();
    if (values.size() != n) {
        domain_error("values and grid differ in length");
    }
    if (n < 3) {
        domain_error("a derivative needs at least 3 points");
    }
    const double h = (grid[n - 1] - grid[0]) / static_cast<double>(n - 1);
    const double scale = std::max({1.0, std::abs(grid[0]), std::abs(grid[n - 1])});
    for (std::size_t i = 1; i < n; ++i) {
        if (std::abs((grid[i] - grid[i - 1]) - h) > 1e-12 * scale) {
            std::ostringstream msg;
            msg << "spacing " << grid[i] - grid[i - 1] << " at index " << i << " differs from " << h;
            throw Error(ErrorKind::NonUniformGrid, msg.str());
        }
    }
    if (!(h > 0)) {
        throw Error(ErrorKind::NonUniformGrid, "grid must be strictly increasing");
    }
    DerivativeCurve out;
    out.grid.assign(grid.begin(), grid.end());
    out.derivative.resize(n);
    out.iteration = iteration;
    out.size = effective_size(iteration);
    out.derivative[0] = (-3 * values[0] + 4 * values[1] - values[2]) / (2 * h);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        out.derivative[i] = (values[i + 1] - values[i - 1]) / (2 * h);
    }
    out.derivative[n - 1] = (3 * values[n - 1] - 4 * values[n - 2] + values[n - 3]) / (2 * h);
    return out;
}

std::string_view to_string(ExtremumKind k) noexcept { return k == ExtremumKind::Min ? "min" : "max"; }

ExtremumKind parse_extremum_kind(std::string_view name) {
    if (name == "min") {
        return ExtremumKind::Min;
    }
    if (name == "max") {
        return ExtremumKind::Max;
    }
    domain_error("extremum kind must be 'min' or 'max'");
}

Extremum find_extremum(const DerivativeCurve &curve, ExtremumKind kind) {
    const auto &d = curve.derivative;
    if (d.size() < 3 || d.size() != curve.grid.size()) {
        domain_error("extremum search needs a curve of at least 3 points");
    }
    auto it = kind == ExtremumKind::Min ? std::min_element(d.begin(), d.end()) : std::max_element(d.begin(), d.end());
    std::size_t i = static_cast<std::size_t>(it - d.begin());
    if (i == 0 || i + 1 == d.size()) {
        std::ostringstream msg;
        msg << "extremum at grid endpoint " << curve.grid[i] << "; widen the grid";
        throw Error(ErrorKind::ExtremumAtBoundary, msg.str());
    }
    double h = curve.grid[i + 1] - curve.grid[i];
    double fm = d[i - 1];
    double f0 = d[i];
    double fp = d[i + 1];
    double curvature = fp - 2 * f0 + fm;
    if (curvature == 0) {
        return {curve.grid[i], f0};
    }
    double offset = 0.5 * (fm - fp) / curvature;
    return {curve.grid[i] + offset * h, f0 - 0.125 * (fp - fm) * (fp - fm) / curvature};
}

ScalingFit loglog_fit(std::span<const std::pair<double, double>> points) {
    if (points.size() < 3) {
        domain_error("a scaling fit needs at least 3 points");
    }
    ScalingFit fit;
    for (const auto &[size, value] : points) {
        if (!(size > 0) || !(value > 0)) {
            std::ostringstream msg;
            msg << "cannot take the logarithm of (" << size << ", " << value << ")";
            throw Error(ErrorKind::NonPositiveValue, msg.str());
        }
        fit.points.emplace_back(std::log(size), std::log(value));
    }
    const double m = static_cast<double>(fit.points.size());
    double mx = 0;
    double my = 0;
    for (const auto &[x, y] : fit.points) {
        mx += x / m;
        my += y / m;
    }
    double sxx = 0;
    double sxy = 0;
    double syy = 0;
    for (const auto &[x, y] : fit.points) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
        syy += (y - my) * (y - my);
    }
    if (sxx == 0) {
        domain_error("a scaling fit needs at least two distinct sizes");
    }
    fit.exponent = sxy / sxx;
    fit.intercept = my - fit.exponent * mx;
    double ss_res = 0;
    for (const auto &[x, y] : fit.points) {
        double r = y - (fit.intercept + fit.exponent * x);
        ss_res += r * r;
    }
    fit.r_squared = syy > 0 ? std::clamp(1 - ss_res / syy, 0.0, 1.0) : 1.0;
    return fit;
}

DerivativeCurve derivative_scan(Model model, Measure measure, int n, std::span<const double> grid) {
    SweepAxis axis = natural_axis(model);
    std::vector<double> values(grid.size());
    detail::parallel_for(grid.size(), [&](std::size_t k) {
        values[k] = flowed_measure(model, anisotropy_from_axis(model, axis, grid[k]), n, measure);
    });
    return numeric_derivative(values, grid, n);
}

ScalingReport scaling_report(const ScalingSpec &spec) {
    if (spec.iterations.size() < 3) {
        domain_error("scaling needs at least 3 iterations");
    }
    if (spec.points < 3) {
        domain_error("scaling needs at least 3 grid points");
    }
    if (spec.refine_passes < 0) {
        domain_error("refine_passes must be nonnegative");
    }
    ScalingReport report;
    std::vector<std::pair<double, double>> magnitude;
    std::vector<std::pair<double, double>> position;
    for (int n : spec.iterations) {
        std::vector<double> grid = linear_grid(spec.lo, spec.hi, spec.points);
        Extremum ext = find_extremum(derivative_scan(spec.model, spec.measure, n, grid), spec.kind);
        for (int pass = 0; pass < spec.refine_passes; ++pass) {
            double h = grid[1] - grid[0];
            double half = std::max(5 * std::abs(spec.critical - ext.position), 3 * h);
            double lo = std::max(spec.lo, ext.position - half);
            double hi = std::min(spec.hi, ext.position + half);
            std::vector<double> fine = linear_grid(lo, hi, spec.points);
            try {
                ext = find_extremum(derivative_scan(spec.model, spec.measure, n, fine), spec.kind);
            } catch (const Error &e) {
                // A kink in the measure can pin the extremum to the edge of a
                // narrow window; keep the last interior estimate.
                if (e.kind() != ErrorKind::ExtremumAtBoundary) {
                    throw;
                }
                break;
            }
            grid = std::move(fine);
        }
        std::int64_t size = effective_size(n);
        report.rows.push_back({n, size, ext.position, ext.value});
        magnitude.emplace_back(static_cast<double>(size), std::abs(ext.value));
        position.emplace_back(static_cast<double>(size), std::abs(spec.critical - ext.position));
    }
    report.magnitude = loglog_fit(magnitude);
    report.position = loglog_fit(position);
    return report;
}

}  // namespace qrg

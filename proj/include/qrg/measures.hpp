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

// Closed-form correlation measures on X states. All entropies are in bits.

#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <utility>

#include "qrg/xstate.hpp"

namespace qrg {

inline constexpr double kEntropyClampTol = 1e-12;
/// |local Bloch component| at or below this selects the x = 0 branch of MIN.
inline constexpr double kMinBranchTol = 1e-9;
/// Marginal eigenvalue gap below which the MID measurement basis is ambiguous.
inline constexpr double kDegenerateMarginalGap = 1e-9;

enum class Axis { X, Y };

/// -sum p log2 p; entries in [-tol, 0) count as zero. Throws
/// Error(InvalidDistribution) if an entry is out of range or the sum is
/// off by more than tol.
double shannon_entropy(std::span<const double> p, double tol = kEntropyClampTol);

/// Entropy of the two-point distribution (1 +- sqrt(z)) / 2.
/// Throws Error(DomainError) for z outside [-tol, 1 + tol].
double binary_mix_entropy(double z, double tol = kEntropyClampTol);

double von_neumann_entropy(const XState &s);

double concurrence(const XState &s);

/// Discord with a fixed sigma_z measurement on `side`.
double discord_sigma_z(const XState &s, Side side = Side::A);

/// Discord with a fixed sigma_x or sigma_y measurement on `side`.
double discord_sigma_xy(const XState &s, Axis axis, Side side = Side::A);

enum class Basis { X, Y, Z, BruteForce };
std::string_view to_string(Basis b) noexcept;

struct DiscordBreakdown {
    double s_a = 0;   // entropy of the measured side's marginal
    double s_ab = 0;  // entropy of the joint state
    double cond_x = 0;
    double cond_y = 0;
    double cond_z = 0;
    Basis optimal_basis = Basis::X;
    /// Either marginal is (numerically) maximally mixed, so the MID
    /// measurement basis is a convention rather than unique.
    bool degenerate_marginals = false;
};

/// True when the closed-form optimum over Pauli measurements is known to
/// be the true optimum: |sqrt(d1 d4) - sqrt(d2 d3)| <= |a| + |b|.
bool pauli_optimality_guard(const XState &s);

/// Optimal discord. Closed form (minimum over the Pauli bases) when the
/// guard holds, brute-force search otherwise.
std::pair<double, DiscordBreakdown> discord_optimal(const XState &s, Side side = Side::A);

/// Measurement-induced disturbance in the marginal eigenbases (sigma_z
/// basis when a marginal is degenerate).
double mid(const XState &s);

double geometric_discord(const XState &s, Side side = Side::A);
double min_nonlocality(const XState &s, Side side = Side::A);
double chsh_max(const XState &s);
double mutual_information(const XState &s);

enum class Measure { Concurrence, QdOptimal, QdSigmaX, QdSigmaY, QdSigmaZ, Mid, Gd, MinNl, ChshMax };

inline constexpr std::array<Measure, 9> kAllMeasures{
    Measure::Concurrence, Measure::QdOptimal, Measure::QdSigmaX, Measure::QdSigmaY, Measure::QdSigmaZ,
    Measure::Mid,         Measure::Gd,        Measure::MinNl,    Measure::ChshMax,
};

/// Column name used in tables ("concurrence", "qd_optimal", ..., "min", "chsh_max").
std::string_view to_string(Measure m) noexcept;
/// Inverse of to_string; also accepts "min_nl". Throws Error(DomainError).
Measure parse_measure(std::string_view name);

struct MeasureSet {
    double concurrence = 0;
    double qd_optimal = 0;
    double qd_sigma_x = 0;
    double qd_sigma_y = 0;
    double qd_sigma_z = 0;
    double mid = 0;
    double gd = 0;
    double min_nl = 0;
    double chsh_max = 0;

    double get(Measure m) const noexcept;
    void set(Measure m, double v) noexcept;
};

/// Single measure, side A where a side applies.
double evaluate(Measure m, const XState &s);

MeasureSet measure_all(const XState &s);

}  // namespace qrg

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

#include <array>
#include <string_view>
#include <utility>
#include <vector>

#include "qrg/linalg.hpp"
#include "qrg/xstate.hpp"

namespace qrg {

enum class Model { Xxz, Xy };

std::string_view to_string(Model m) noexcept;
/// Accepts "xxz" or "xy"; throws Error(DomainError) otherwise.
Model parse_model(std::string_view name);

// XXZ chain H = J/4 sum (sx sx + sy sy + delta sz sz).
struct XXZParams {
    double j = 1.0;
    double delta = 0.0;
};

// XY chain H = J/4 sum ((1+gamma) sx sx + (1-gamma) sy sy).
struct XYParams {
    double j = 1.0;
    double gamma = 0.0;
};

/// Model-tagged coupling point. `anisotropy` is delta for XXZ and gamma
/// for XY.
struct ModelParams {
    Model model = Model::Xxz;
    double j = 1.0;
    double anisotropy = 0.0;

    friend bool operator==(const ModelParams &, const ModelParams &) = default;
};

/// Throws Error(DomainError) when the point lies outside the model's domain.
void validate(const ModelParams &p);

/// Three-site block ket over |s1 s2 s3>, site 1 most significant, up = 0.
/// Index 1 is |up up down>, index 2 |up down up>, index 4 |down up up>.
class BlockState8 {
   public:
    /// Throws Error(DomainError) unless the amplitudes have unit norm
    /// within 1e-12.
    explicit BlockState8(const std::array<double, 8> &amplitudes);

    const std::array<double, 8> &amplitudes() const noexcept { return amp_; }
    double operator[](std::size_t i) const { return amp_[i]; }

   private:
    std::array<double, 8> amp_;
};

// ---- XXZ ----------------------------------------------------------------

/// q = -(delta + sqrt(delta^2 + 8)) / 2. Throws DomainError for delta < 0.
double q_of_delta(double delta);

XXZParams xxz_rg_step(const XXZParams &p);

/// The degenerate block ground kets (magnetization +1/2 and -1/2).
std::pair<BlockState8, BlockState8> xxz_ground_states(double delta);

/// Reduced state of the two outer block sites. Handles delta = +inf (the
/// Neel limit).
XState xxz_rho13(double delta);

// ---- XY -----------------------------------------------------------------

XYParams xy_rg_step(const XYParams &p);
std::pair<BlockState8, BlockState8> xy_ground_states(double gamma);
XState xy_rho13(double gamma);

/// g = (1 + gamma) / (1 - gamma) and its inverse. DomainError at the poles
/// gamma = 1 and g = -1.
double g_of_gamma(double gamma);
double gamma_of_g(double g);

// ---- shared -------------------------------------------------------------

ModelParams rg_step(const ModelParams &p);
XState rho13(Model model, double anisotropy);

enum class Stability { Stable, Unstable, Marginal };
std::string_view to_string(Stability s) noexcept;

struct FixedPoint {
    double value;
    Stability stability;
    /// |d(map)/d(parameter)| at the fixed point.
    double multiplier;
};

/// Fixed points of the anisotropy flow, in ascending order.
std::vector<FixedPoint> fixed_points(Model model);

/// Derivative of the anisotropy map with respect to the anisotropy.
double anisotropy_map_derivative(Model model, double anisotropy);

/// Three-site open block Hamiltonian with bonds (1,2) and (2,3), real
/// symmetric in the sigma_z product basis.
RealMatrix block_hamiltonian(const ModelParams &p);

}  // namespace qrg

// SPDX-License-Identifier: Apache-2.0
//
// dqcap - discrete quadrature capacity calculator for bosonic gaussian channels
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef DQCAP_PHASE_MODEL_HPP
#define DQCAP_PHASE_MODEL_HPP

#include <numbers>
#include <string_view>
#include <variant>
#include <vector>

/*!MD
# Phase-space tile model

Units: hbar = 1, so the vacuum has quadrature standard deviation 1/sqrt(2) and the smallest
physical tile has area 1/2. A signal ensemble is a `sigma_p x sigma_q` region of phase space
cut into `delta_p x delta_q` rectangles, each taken as one perfectly distinguishable state.

A channel shrinks the ensemble by `sqrt(lambda)` per quadrature and smears it by additive
noise. Tiles closer than the noise merge into meta-tiles; tiles below the uncertainty floor are
enlarged back to area 1/2.
MD!*/

namespace dqcap
{
    inline constexpr double vacuum_std = std::numbers::sqrt2 / 2.0;
    inline constexpr double min_tile_area = 0.5;

    // Relative slack used when checking constraints on computed (not user-typed) values.
    inline constexpr double constraint_rel_tol = 1e-12;

    struct ModulationScheme
    {
        double sigma_p = vacuum_std;
        double sigma_q = vacuum_std;
        double delta_p = vacuum_std;
        double delta_q = vacuum_std;

        friend bool operator==(const ModulationScheme &, const ModulationScheme &) = default;
    };

    // Mean signal power W >= 1/2 (W = 1/2 is the vacuum). Throws invalid_input otherwise.
    class PowerBudget
    {
    public:
        explicit PowerBudget(double w);
        double w() const noexcept { return w_; }

    private:
        double w_;
    };

    struct AdditiveGaussian
    {
        double lambda = 1.0;
        double sigma_r = vacuum_std;
        double sigma_s = vacuum_std;
    };

    // Beamsplitter with a vacuum environment.
    struct Attenuation
    {
        double lambda = 1.0;
    };

    // Beamsplitter with a thermal environment of mean photon number n_e.
    struct ThermalNoise
    {
        double lambda = 1.0;
        double n_e = 0.0;
    };

    // Gaussian displacement of power mu2 on both quadratures.
    struct ClassicalNoise
    {
        double mu2 = 0.0;
    };

    // Gaussian displacement of power mu2 on Q only.
    struct Dephasing
    {
        double mu2 = 0.0;
    };

    using ChannelModel = std::variant<AdditiveGaussian, Attenuation, ThermalNoise, ClassicalNoise, Dephasing>;

    // Throws invalid_input for out-of-range or non-finite channel parameters.
    void validate_channel(const ChannelModel &channel);

    std::string_view family_name(const ChannelModel &channel);

    // Environment quadrature std of a thermal state: sqrt(n_e + 1/2).
    double thermal_std(double n_e);

    AdditiveGaussian to_additive(const Attenuation &channel);
    AdditiveGaussian to_additive(const ThermalNoise &channel);

    // Every family reduced to output-side terms: signal amplitude gain sqrt(lambda) and the
    // additive noise std that lands on each output quadrature.
    struct NoiseProfile
    {
        double lambda;
        double noise_p;
        double noise_q;
    };
    NoiseProfile noise_profile(const ChannelModel &channel);

    // True when swapping P and Q leaves the channel unchanged.
    bool quadrature_symmetric(const ChannelModel &channel);

    struct TileDims
    {
        double dp;
        double dq;
        double area() const noexcept { return dp * dq; }
    };

    enum class Violation
    {
        uncertainty, // delta_p * delta_q < 1/2
        fit,         // a tile is larger than the ensemble spread
        power        // (sigma_p^2 + sigma_q^2)/2 > W
    };
    std::string_view to_string(Violation v);

    struct ValidationVerdict
    {
        std::vector<Violation> violations;
        bool ok() const noexcept { return violations.empty(); }
        bool has(Violation v) const noexcept;
    };

    // Checks the three physicality constraints. Non-finite fields, non-positive tile sizes or
    // negative spreads throw invalid_input; violated constraints are reported in the verdict.
    ValidationVerdict validate_scheme(const ModulationScheme &scheme, const PowerBudget &budget);

    // Output tile after attenuation, noise merging and the uncertainty floor. When the raw
    // maxima fall below area 1/2 both sides are scaled by a common factor, preserving their
    // ratio, until the area is exactly 1/2.
    TileDims effective_tile(const ChannelModel &channel, const ModulationScheme &scheme);

    // Number of distinguishable input states sigma_p sigma_q / (delta_p delta_q).
    double state_count(const ModulationScheme &scheme);
}

#endif

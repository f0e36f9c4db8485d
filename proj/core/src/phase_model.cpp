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

#include "dqcap/phase_model.hpp"
#include "dqcap/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dqcap
{
    namespace
    {
        template <class... Ts>
        struct overloaded : Ts...
        {
            using Ts::operator()...;
        };

        void require_finite(double v, const char *name)
        {
            if (!std::isfinite(v))
                throw invalid_input(std::string(name) + " must be finite");
        }

        void require_lambda(double lambda)
        {
            require_finite(lambda, "lambda");
            if (!(lambda > 0.0 && lambda <= 1.0))
                throw invalid_input("lambda must lie in (0, 1], got " + std::to_string(lambda));
        }

        void require_nonnegative(double v, const char *name)
        {
            require_finite(v, name);
            if (v < 0.0)
                throw invalid_input(std::string(name) + " must be >= 0");
        }

        void require_at_least_vacuum(double sigma, const char *name)
        {
            require_finite(sigma, name);
            if (sigma < vacuum_std * (1.0 - constraint_rel_tol))
                throw invalid_input(std::string(name) + " must be >= 1/sqrt(2) (vacuum)");
        }
    }

    PowerBudget::PowerBudget(double w) : w_(w)
    {
        require_finite(w, "power");
        if (w < min_tile_area)
            throw invalid_input("power W must be >= 1/2, got " + std::to_string(w));
    }

    void validate_channel(const ChannelModel &channel)
    {
        std::visit(overloaded{
                       [](const AdditiveGaussian &c)
                       {
                           require_lambda(c.lambda);
                           require_at_least_vacuum(c.sigma_r, "sigma_r");
                           require_at_least_vacuum(c.sigma_s, "sigma_s");
                       },
                       [](const Attenuation &c)
                       { require_lambda(c.lambda); },
                       [](const ThermalNoise &c)
                       {
                           require_lambda(c.lambda);
                           require_nonnegative(c.n_e, "n_e");
                       },
                       [](const ClassicalNoise &c)
                       { require_nonnegative(c.mu2, "mu2"); },
                       [](const Dephasing &c)
                       { require_nonnegative(c.mu2, "mu2"); }},
                   channel);
    }

    std::string_view family_name(const ChannelModel &channel)
    {
        return std::visit(overloaded{
                              [](const AdditiveGaussian &) { return std::string_view("additive"); },
                              [](const Attenuation &) { return std::string_view("attenuation"); },
                              [](const ThermalNoise &) { return std::string_view("thermal"); },
                              [](const ClassicalNoise &) { return std::string_view("classical-noise"); },
                              [](const Dephasing &) { return std::string_view("dephasing"); }},
                          channel);
    }

    double thermal_std(double n_e)
    {
        return std::sqrt(n_e + 0.5);
    }

    AdditiveGaussian to_additive(const Attenuation &channel)
    {
        return {channel.lambda, vacuum_std, vacuum_std};
    }

    AdditiveGaussian to_additive(const ThermalNoise &channel)
    {
        const double s = thermal_std(channel.n_e);
        return {channel.lambda, s, s};
    }

    NoiseProfile noise_profile(const ChannelModel &channel)
    {
        const auto additive = [](const AdditiveGaussian &c)
        {
            const double leak = std::sqrt(1.0 - c.lambda);
            return NoiseProfile{c.lambda, leak * c.sigma_r, leak * c.sigma_s};
        };
        return std::visit(overloaded{
                              additive,
                              [&](const Attenuation &c) { return additive(to_additive(c)); },
                              [&](const ThermalNoise &c) { return additive(to_additive(c)); },
                              [](const ClassicalNoise &c)
                              {
                                  const double mu = std::sqrt(c.mu2);
                                  return NoiseProfile{1.0, mu, mu};
                              },
                              [](const Dephasing &c)
                              { return NoiseProfile{1.0, 0.0, std::sqrt(c.mu2)}; }},
                          channel);
    }

    bool quadrature_symmetric(const ChannelModel &channel)
    {
        const NoiseProfile p = noise_profile(channel);
        return p.noise_p == p.noise_q;
    }

    std::string_view to_string(Violation v)
    {
        switch (v)
        {
        case Violation::uncertainty:
            return "uncertainty";
        case Violation::fit:
            return "fit";
        case Violation::power:
            return "power";
        }
        return "unknown";
    }

    bool ValidationVerdict::has(Violation v) const noexcept
    {
        return std::find(violations.begin(), violations.end(), v) != violations.end();
    }

    ValidationVerdict validate_scheme(const ModulationScheme &scheme, const PowerBudget &budget)
    {
        require_finite(scheme.sigma_p, "sigma_p");
        require_finite(scheme.sigma_q, "sigma_q");
        require_finite(scheme.delta_p, "delta_p");
        require_finite(scheme.delta_q, "delta_q");
        if (scheme.delta_p <= 0.0 || scheme.delta_q <= 0.0)
            throw invalid_input("tile dimensions must be positive");
        if (scheme.sigma_p < 0.0 || scheme.sigma_q < 0.0)
            throw invalid_input("quadrature spreads must be non-negative");

        const double slack = 1.0 + constraint_rel_tol;
        ValidationVerdict verdict;
        if (scheme.delta_p * scheme.delta_q * slack < min_tile_area)
            verdict.violations.push_back(Violation::uncertainty);
        if (scheme.delta_p > scheme.sigma_p * slack || scheme.delta_q > scheme.sigma_q * slack)
            verdict.violations.push_back(Violation::fit);
        const double power = 0.5 * (scheme.sigma_p * scheme.sigma_p + scheme.sigma_q * scheme.sigma_q);
        if (power > budget.w() * slack)
            verdict.violations.push_back(Violation::power);
        return verdict;
    }

    TileDims effective_tile(const ChannelModel &channel, const ModulationScheme &scheme)
    {
        const NoiseProfile p = noise_profile(channel);
        const double amp = std::sqrt(p.lambda);
        TileDims t{std::max(amp * scheme.delta_p, p.noise_p), std::max(amp * scheme.delta_q, p.noise_q)};
        const double area = t.area();
        if (area < min_tile_area)
        {
            const double lift = std::sqrt(min_tile_area / area);
            t.dp *= lift;
            t.dq *= lift;
        }
        return t;
    }

    double state_count(const ModulationScheme &scheme)
    {
        return (scheme.sigma_p * scheme.sigma_q) / (scheme.delta_p * scheme.delta_q);
    }
}

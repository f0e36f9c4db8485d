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

#include "dqcap/dq_engine.hpp"
#include "dqcap/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <variant>

namespace dqcap
{
    namespace
    {
        ModulationScheme coherent_scheme(const PowerBudget &budget)
        {
            const double s = std::sqrt(budget.w());
            return {s, s, vacuum_std, vacuum_std};
        }

        // Narrow in P, broad in Q: all resolution goes into the noiseless quadrature.
        ModulationScheme squeezed_scheme(const PowerBudget &budget)
        {
            const double s = std::sqrt(budget.w());
            return {s, s, 1.0 / (2.0 * s), s};
        }

        CapacityResult from_count(double count, const ModulationScheme &scheme, bool integer_levels)
        {
            CapacityResult r;
            r.optimizer_scheme = scheme;
            r.method = Method::closed_form;
            r.integer_levels = integer_levels;
            r.below_one_level = count < 1.0;
            if (!r.below_one_level)
                r.bits = std::log2(integer_levels ? ceil_levels(count) : count);
            return r;
        }
    }

    CapacityResult classical_capacity(const ChannelModel &channel, const PowerBudget &budget, bool integer_levels,
                                      const GeneralPathOptions &general)
    {
        validate_channel(channel);
        const double w = budget.w();

        if (const auto *c = std::get_if<Attenuation>(&channel))
            return from_count(2.0 * w * c->lambda, coherent_scheme(budget), integer_levels);

        if (const auto *c = std::get_if<ThermalNoise>(&channel))
        {
            const double noise_var = (1.0 - c->lambda) * (c->n_e + 0.5);
            return from_count(c->lambda * w / std::max(min_tile_area, noise_var), coherent_scheme(budget),
                              integer_levels);
        }

        if (const auto *c = std::get_if<ClassicalNoise>(&channel))
        {
            const double count = c->mu2 >= min_tile_area ? w / c->mu2 : 2.0 * w;
            return from_count(count, coherent_scheme(budget), integer_levels);
        }

        if (std::holds_alternative<Dephasing>(channel))
            return from_count(2.0 * w, squeezed_scheme(budget), integer_levels);

        const CapacityResult coarse = maximize_classical(channel, budget, general.grid, integer_levels);
        return refine(channel, budget, coarse, general.shrink_factor, general.refine_rounds, general.grid);
    }

    ThermalDecomposition thermal_decomposition(const ThermalNoise &channel)
    {
        validate_channel(channel);
        const double gain = (1.0 - channel.lambda) * channel.n_e + 1.0;
        return {channel.lambda / gain, gain};
    }

    EnvironmentLeakage environment_leakage(const ThermalNoise &channel, const ModulationScheme &scheme)
    {
        const ThermalDecomposition d = thermal_decomposition(channel);
        const double spread = scheme.sigma_p * scheme.sigma_q;
        // Output tiles of area 1/2 (mode 1) and G/2 (mode 2) are both achievable.
        const double s1 = std::log2(2.0 * (1.0 - d.lambda_tilde) * spread);
        const double s2 = std::log2(2.0 * (d.gain - 1.0) * spread / d.gain);
        return {std::max(0.0, s1), std::max(0.0, s2)};
    }

    CapacityResult quantum_capacity(const ChannelModel &channel, const PowerBudget &budget)
    {
        validate_channel(channel);
        ThermalNoise thermal;
        if (const auto *c = std::get_if<Attenuation>(&channel))
            thermal = {c->lambda, 0.0};
        else if (const auto *c = std::get_if<ThermalNoise>(&channel))
            thermal = *c;
        else
            throw unsupported_regime("quantum capacity is only modelled for attenuation and thermal channels");

        const ThermalDecomposition d = thermal_decomposition(thermal);

        CapacityResult r;
        r.method = Method::closed_form;
        r.optimizer_scheme = coherent_scheme(budget);
        r.power_limited = budget.w() < 1.0 / thermal.lambda;
        if (thermal.lambda == 1.0)
        {
            r.bits = std::numeric_limits<double>::infinity();
            return r;
        }
        // Output tile area 1/2 is achievable, so the -log2(2 dP~ dQ~) term vanishes.
        const double raw = std::log2(thermal.lambda) - std::log2(1.0 - d.lambda_tilde);
        r.below_one_level = raw < 0.0;
        r.bits = raw > 0.0 ? raw : 0.0;
        return r;
    }

    CapacityResult private_capacity(const ChannelModel &channel, const PowerBudget &budget)
    {
        return quantum_capacity(channel, budget);
    }

    RateRegion cq_tradeoff_region(const Attenuation &channel, const PowerBudget &budget)
    {
        validate_channel(channel);
        if (channel.lambda >= 1.0)
            throw unsupported_regime("trade-off region needs lambda < 1 (quantum capacity is unbounded at 1)");
        const double c_max = classical_capacity(channel, budget).bits;
        const double q_max = quantum_capacity(channel, budget).bits;
        return RateRegion({"C", "Q"}, {{{0, 1}, q_max}, {{1, 1}, c_max}});
    }
}

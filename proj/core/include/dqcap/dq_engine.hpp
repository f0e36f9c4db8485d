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

#ifndef DQCAP_DQ_ENGINE_HPP
#define DQCAP_DQ_ENGINE_HPP

#include "dqcap/capacity_result.hpp"
#include "dqcap/optimizer.hpp"
#include "dqcap/phase_model.hpp"
#include "dqcap/rate_region.hpp"

/*!MD
# Single-user capacities

## Classical
Closed forms, with `n^2` the output noise variance per quadrature:

| family          | output states                       |
|-----------------|-------------------------------------|
| attenuation     | 2 W lambda                          |
| thermal         | lambda W / max(1/2, (1-lambda)(N_E+1/2)) |
| classical noise | W / max(1/2, mu^2)                  |
| dephasing       | 2 W, independent of mu^2            |

A general `AdditiveGaussian` channel goes through the grid optimizer. With `integer_levels` the
state count is rounded up before taking the log.

## Quantum / private
The thermal channel splits into a pure loss `lambda/G` followed by an amplifier of gain
`G = (1-lambda) N_E + 1`. The environment learns `S1 = log2(2 (1 - lambda/G) sigma_p sigma_q)`
bits, and everything the output sees beyond that is hidden from it:

    Q = log2(lambda) - log2(1 - lambda/G)

The tile model cannot tell private from quantum capacity, so both are the same number.
MD!*/

namespace dqcap
{
    struct ThermalDecomposition
    {
        double lambda_tilde; // loss stage transmissivity lambda / G
        double gain;         // G = (1 - lambda) N_E + 1
    };

    struct EnvironmentLeakage
    {
        double s1; // bits seen by the loss-stage environment mode
        double s2; // bits seen by the amplifier environment mode
    };

    // Grid used when a channel has no closed form.
    struct GeneralPathOptions
    {
        GridSpec grid{};
        double shrink_factor = 0.5;
        int refine_rounds = 3;
    };

    // Throws invalid_input for bad channel parameters; W < 1/2 is rejected by PowerBudget itself.
    CapacityResult classical_capacity(const ChannelModel &channel, const PowerBudget &budget,
                                      bool integer_levels = false, const GeneralPathOptions &general = {});

    ThermalDecomposition thermal_decomposition(const ThermalNoise &channel);

    EnvironmentLeakage environment_leakage(const ThermalNoise &channel, const ModulationScheme &scheme);

    // Defined for Attenuation and ThermalNoise only (unsupported_regime otherwise). Lossless
    // channels give +infinity. power_limited is set when W < 1/lambda.
    CapacityResult quantum_capacity(const ChannelModel &channel, const PowerBudget &budget);
    CapacityResult private_capacity(const ChannelModel &channel, const PowerBudget &budget);

    // {(C, Q) >= 0 : Q <= Q_max, C + Q <= C_max}. Requires lambda in (0, 1).
    RateRegion cq_tradeoff_region(const Attenuation &channel, const PowerBudget &budget);
}

#endif

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

#ifndef DQCAP_REFERENCE_HPP
#define DQCAP_REFERENCE_HPP

#include "dqcap/capacity_result.hpp"
#include "dqcap/phase_model.hpp"

#include <optional>
#include <string_view>

/*!MD
# Gaussian reference capacities

Known results for the full gaussian model, used to measure how far the tile model lands from
the real thing. All returns are in bits except `g`, which is in nats.
MD!*/

namespace dqcap
{
    enum class ReferenceKind
    {
        exact_capacity,
        lower_bound,
        achievable_holevo
    };
    std::string_view to_string(ReferenceKind kind);

    struct GapReport
    {
        double dq_bits;
        double reference_bits;
        double gap_bits; // dq_bits - reference_bits
        ReferenceKind reference_kind;
    };

    // Entropy of a thermal state with mean photon number x, in nats:
    // (x+1) ln(x+1) - x ln x. Throws domain_error for x < 0.
    double g(double x);

    // Classical capacity of the pure-loss channel, g(lambda (W - 1/2)) / ln 2.
    double attenuation_capacity_exact(double lambda, const PowerBudget &budget);

    // Rate of displaced vacuum states over the classical noise channel.
    double classical_noise_lower_bound(double mu2, const PowerBudget &budget);

    // Holevo quantity of a maximally squeezed ensemble on the dephasing channel.
    double dephasing_holevo(double mu2, const PowerBudget &budget);

    // max(0, log2 lambda - log2(1 - lambda)); +infinity at lambda = 1.
    double attenuation_quantum_exact(double lambda);

    GapReport gap_report(const CapacityResult &dq, double reference_bits, ReferenceKind kind);

    struct ReferenceValue
    {
        double bits;
        ReferenceKind kind;
    };

    // Reference matching a DQ capacity query, if one is known for that family.
    std::optional<ReferenceValue> classical_reference(const ChannelModel &channel, const PowerBudget &budget);
    std::optional<ReferenceValue> quantum_reference(const ChannelModel &channel);
}

#endif

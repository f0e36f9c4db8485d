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

#ifndef DQCAP_OPTIMIZER_HPP
#define DQCAP_OPTIMIZER_HPP

#include "dqcap/capacity_result.hpp"
#include "dqcap/phase_model.hpp"

/*!MD
# Brute-force classical capacity search

Maximizes `log2(lambda sigma_p sigma_q / (dP~ dQ~))` over modulation schemes by exhaustive grid
search. The search space is two dimensional:

- the power split angle `theta`, with `sigma_p = sqrt(2W) cos(theta)`, `sigma_q = sqrt(2W) sin(theta)`
  (the full budget is always spent, more spread never loses states);
- the tile aspect `a = delta_p / delta_q` on a log grid, with `delta_p delta_q = 1/2` fixed.
  Enlarging a tile beyond the uncertainty floor can only enlarge the output tile, so area 1/2 is
  never beaten.

Grid points whose tiles do not fit inside the ensemble are skipped. Among points within 1e-9 bits
of each other the scheme with aspect closest to 1 wins, then the lowest grid index, so results do
not depend on evaluation order.
MD!*/

namespace dqcap
{
    struct GridSpec
    {
        int n_sigma = 257;
        int n_aspect = 257;
        double aspect_range = 0.0; // max squeeze ratio searched; 0 selects 4W

        // Resolved aspect range for the budget. Throws invalid_input if the grid is too small
        // or the range cannot reach the squeezed optimum 1/(2W).
        double resolved_aspect_range(const PowerBudget &budget) const;
    };

    inline constexpr double tie_tolerance_bits = 1e-9;

    // Rounds a state count up to an integer, ignoring float noise of relative size 1e-12.
    double ceil_levels(double count);

    // Raw (unclamped) log2 of the output state count for one scheme. No feasibility check.
    double scheme_rate(const ChannelModel &channel, const ModulationScheme &scheme, bool integer_levels = false);

    // Scheme at grid coordinates (theta, log aspect) for the given budget.
    ModulationScheme scheme_at(const PowerBudget &budget, double theta, double log_aspect);

    CapacityResult maximize_classical(const ChannelModel &channel, const PowerBudget &budget, const GridSpec &grid = {},
                                      bool integer_levels = false);

    // Re-grids a window around the incumbent, shrinking it by `shrink_factor` each round.
    // The incumbent is kept unless strictly beaten, so the value never decreases.
    CapacityResult refine(const ChannelModel &channel, const PowerBudget &budget, const CapacityResult &coarse,
                          double shrink_factor, int rounds, const GridSpec &grid = {});
}

#endif

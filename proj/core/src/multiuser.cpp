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

#include "dqcap/multiuser.hpp"
#include "dqcap/errors.hpp"

#include <cmath>

namespace dqcap
{
    namespace
    {
        // log2 of the coherent tile count 2 * lambda * W surviving a beamsplitter branch.
        double branch_bits(double transmissivity, double w)
        {
            return std::log2(2.0 * transmissivity * w);
        }
    }

    RateRegion broadcast_region(double lambda, const PowerBudget &budget)
    {
        if (!std::isfinite(lambda) || !(lambda > 0.0 && lambda <= 1.0))
            throw invalid_input("lambda must lie in (0, 1]");
        if (lambda <= 0.5)
            throw unsupported_regime("broadcast region is only modelled for lambda > 1/2");
        const double w = budget.w();
        return RateRegion({"R_B", "R_C"}, {
                                              {{0, 1}, branch_bits(1.0 - lambda, w)},
                                              {{1, 1}, branch_bits(lambda, w)},
                                          });
    }

    RateRegion mac_region(double lambda, const PowerBudget &budget_a, const PowerBudget &budget_b)
    {
        if (!std::isfinite(lambda) || !(lambda > 0.0 && lambda < 1.0))
            throw invalid_input("lambda must lie in (0, 1)");
        const double wa = budget_a.w();
        const double wb = budget_b.w();
        if (lambda * wa < (1.0 - lambda) * wb)
            throw unsupported_regime("multiple-access region needs lambda W_A >= (1 - lambda) W_B");
        // A's high-order bits are always resolvable; the low-order positions are shared, so the
        // total never exceeds A's own tile count.
        const double a_bits = branch_bits(lambda, wa);
        return RateRegion({"R_A", "R_B"}, {
                                              {{1, 0}, a_bits},
                                              {{0, 1}, branch_bits(1.0 - lambda, wb)},
                                              {{1, 1}, a_bits},
                                          });
    }
}

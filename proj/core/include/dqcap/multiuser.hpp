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

#ifndef DQCAP_MULTIUSER_HPP
#define DQCAP_MULTIUSER_HPP

#include "dqcap/phase_model.hpp"
#include "dqcap/rate_region.hpp"

namespace dqcap
{
    // Sender A splits onto a beamsplitter; receiver B gets the lambda branch, C the rest.
    // Rates (R_B, R_C). lambda must lie in (1/2, 1]; lambda <= 1/2 throws unsupported_regime.
    RateRegion broadcast_region(double lambda, const PowerBudget &budget);

    // Senders A (lambda branch) and B combine into one receiver. Rates (R_A, R_B).
    // Requires lambda in (0, 1) and lambda W_A >= (1 - lambda) W_B, else unsupported_regime.
    RateRegion mac_region(double lambda, const PowerBudget &budget_a, const PowerBudget &budget_b);
}

#endif

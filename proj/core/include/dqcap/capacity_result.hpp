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

#ifndef DQCAP_CAPACITY_RESULT_HPP
#define DQCAP_CAPACITY_RESULT_HPP

#include "dqcap/phase_model.hpp"

#include <cmath>
#include <string_view>

namespace dqcap
{
    enum class Method
    {
        closed_form,
        grid_search
    };

    inline std::string_view to_string(Method m)
    {
        return m == Method::closed_form ? "closed_form" : "grid_search";
    }

    struct CapacityResult
    {
        double bits = 0.0; // >= 0, may be +infinity for a lossless quantum channel
        ModulationScheme optimizer_scheme{};
        Method method = Method::closed_form;
        bool integer_levels = false;
        bool below_one_level = false; // raw rate was negative and got clamped to 0
        bool power_limited = false;   // W below the 1/lambda minimum-power advisory

        bool infinite() const noexcept { return std::isinf(bits); }
    };
}

#endif

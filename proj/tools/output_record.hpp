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

#ifndef DQCAP_TOOLS_OUTPUT_RECORD_HPP
#define DQCAP_TOOLS_OUTPUT_RECORD_HPP

#include "dqcap/dqcap.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace dqcap::cli
{
    enum class CapacityKind
    {
        classical,
        quantum,
        private_
    };
    std::string_view to_string(CapacityKind kind);

    struct OutputRecord
    {
        ChannelModel channel;
        CapacityKind kind = CapacityKind::classical;
        double power = 0.5;
        CapacityResult dq{};
        std::optional<double> reference_bits;
        std::optional<double> gap_bits;
        std::optional<ReferenceKind> reference_kind;
    };

    // 12 significant digits, lowercase "inf"/"-inf".
    std::string format_number(double v);

    // Value rounded to 12 significant digits for JSON; infinities become the string "inf".
    nlohmann::ordered_json json_number(double v);

    nlohmann::ordered_json channel_json(const ChannelModel &channel);
    nlohmann::ordered_json to_json(const OutputRecord &record, std::string_view command);

    // Fixed column set shared by every family; inapplicable fields are left empty.
    std::string csv_header();
    std::string csv_row(const OutputRecord &record);
}

#endif

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

#include "output_record.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace dqcap::cli
{
    namespace
    {
        template <class... Ts>
        struct overloaded : Ts...
        {
            using Ts::operator()...;
        };

        struct ChannelColumns
        {
            std::optional<double> lambda, n_e, mu2, sigma_r, sigma_s;
        };

        ChannelColumns columns(const ChannelModel &channel)
        {
            return std::visit(overloaded{
                                  [](const AdditiveGaussian &c)
                                  { return ChannelColumns{c.lambda, {}, {}, c.sigma_r, c.sigma_s}; },
                                  [](const Attenuation &c) { return ChannelColumns{c.lambda, {}, {}, {}, {}}; },
                                  [](const ThermalNoise &c) { return ChannelColumns{c.lambda, c.n_e, {}, {}, {}}; },
                                  [](const ClassicalNoise &c) { return ChannelColumns{{}, {}, c.mu2, {}, {}}; },
                                  [](const Dephasing &c) { return ChannelColumns{{}, {}, c.mu2, {}, {}}; }},
                              channel);
        }

        std::string field(const std::optional<double> &v)
        {
            return v ? format_number(*v) : std::string{};
        }

        const char *flag(bool b)
        {
            return b ? "1" : "0";
        }
    }

    std::string_view to_string(CapacityKind kind)
    {
        switch (kind)
        {
        case CapacityKind::classical:
            return "classical";
        case CapacityKind::quantum:
            return "quantum";
        case CapacityKind::private_:
            return "private";
        }
        return "unknown";
    }

    std::string format_number(double v)
    {
        if (std::isinf(v))
            return v > 0 ? "inf" : "-inf";
        if (v == 0.0)
            v = 0.0; // drop the sign of -0
        std::array<char, 32> buf{};
        std::snprintf(buf.data(), buf.size(), "%.12g", v);
        return buf.data();
    }

    nlohmann::ordered_json json_number(double v)
    {
        if (std::isinf(v))
            return format_number(v);
        return std::strtod(format_number(v).c_str(), nullptr);
    }

    nlohmann::ordered_json channel_json(const ChannelModel &channel)
    {
        nlohmann::ordered_json j;
        j["family"] = std::string(family_name(channel));
        const ChannelColumns c = columns(channel);
        const auto put = [&](const char *key, const std::optional<double> &v)
        {
            if (v)
                j[key] = json_number(*v);
        };
        put("lambda", c.lambda);
        put("n_e", c.n_e);
        put("mu2", c.mu2);
        put("sigma_r", c.sigma_r);
        put("sigma_s", c.sigma_s);
        return j;
    }

    nlohmann::ordered_json to_json(const OutputRecord &record, std::string_view command)
    {
        nlohmann::ordered_json j;
        j["command"] = std::string(command);
        j["kind"] = std::string(to_string(record.kind));
        j["channel"] = channel_json(record.channel);
        j["power"] = json_number(record.power);
        j["dq_bits"] = json_number(record.dq.bits);
        if (record.reference_bits)
        {
            j["reference_bits"] = json_number(*record.reference_bits);
            j["gap_bits"] = record.gap_bits ? json_number(*record.gap_bits) : nlohmann::ordered_json(nullptr);
            j["reference_kind"] = std::string(to_string(*record.reference_kind));
        }
        j["method"] = std::string(to_string(record.dq.method));
        j["integer_levels"] = record.dq.integer_levels;
        const ModulationScheme &s = record.dq.optimizer_scheme;
        j["scheme"] = {{"sigma_p", json_number(s.sigma_p)},
                       {"sigma_q", json_number(s.sigma_q)},
                       {"delta_p", json_number(s.delta_p)},
                       {"delta_q", json_number(s.delta_q)}};
        j["flags"] = {{"power_limited", record.dq.power_limited}, {"below_one_level", record.dq.below_one_level}};
        return j;
    }

    std::string csv_header()
    {
        return "channel,kind,lambda,n_e,mu2,sigma_r,sigma_s,power,dq_bits,reference_bits,gap_bits,reference_kind,"
               "power_limited,below_one_level";
    }

    std::string csv_row(const OutputRecord &record)
    {
        const ChannelColumns c = columns(record.channel);
        std::string row;
        row += family_name(record.channel);
        row += ',';
        row += to_string(record.kind);
        for (const auto &v : {c.lambda, c.n_e, c.mu2, c.sigma_r, c.sigma_s})
        {
            row += ',';
            row += field(v);
        }
        row += ',' + format_number(record.power);
        row += ',' + format_number(record.dq.bits);
        row += ',' + field(record.reference_bits);
        row += ',' + field(record.gap_bits);
        row += ',';
        if (record.reference_kind)
            row += to_string(*record.reference_kind);
        row += ',';
        row += flag(record.dq.power_limited);
        row += ',';
        row += flag(record.dq.below_one_level);
        return row;
    }
}

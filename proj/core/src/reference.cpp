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

#include "dqcap/reference.hpp"
#include "dqcap/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <variant>

namespace dqcap
{
    namespace
    {
        void require_mu2(double mu2)
        {
            if (!std::isfinite(mu2) || mu2 < 0.0)
                throw invalid_input("mu2 must be finite and >= 0");
        }

        void require_lambda(double lambda)
        {
            if (!std::isfinite(lambda) || !(lambda > 0.0 && lambda <= 1.0))
                throw invalid_input("lambda must lie in (0, 1]");
        }
    }

    std::string_view to_string(ReferenceKind kind)
    {
        switch (kind)
        {
        case ReferenceKind::exact_capacity:
            return "exact_capacity";
        case ReferenceKind::lower_bound:
            return "lower_bound";
        case ReferenceKind::achievable_holevo:
            return "achievable_holevo";
        }
        return "unknown";
    }

    double g(double x)
    {
        if (std::isnan(x) || x < 0.0)
            throw std::domain_error("g(x) requires x >= 0");
        if (x < 1e-12)
            return 0.0;
        if (std::isinf(x))
            return x;
        // ln(1+x) + x ln(1 + 1/x): no cancellation between two large terms
        return std::log1p(x) + x * std::log1p(1.0 / x);
    }

    double attenuation_capacity_exact(double lambda, const PowerBudget &budget)
    {
        require_lambda(lambda);
        return g(lambda * (budget.w() - 0.5)) / std::numbers::ln2;
    }

    double classical_noise_lower_bound(double mu2, const PowerBudget &budget)
    {
        require_mu2(mu2);
        return (g(budget.w() - 0.5 + mu2) - g(mu2)) / std::numbers::ln2;
    }

    double dephasing_holevo(double mu2, const PowerBudget &budget)
    {
        require_mu2(mu2);
        const double w = budget.w();
        const double stretch = std::sqrt(1.0 + mu2 / (2.0 * w));
        const double signal = (2.0 * w * stretch - 1.0) / 2.0;
        const double noise = (stretch - 1.0) / 2.0;
        return (g(signal) - g(noise)) / std::numbers::ln2;
    }

    double attenuation_quantum_exact(double lambda)
    {
        require_lambda(lambda);
        if (lambda == 1.0)
            return std::numeric_limits<double>::infinity();
        const double q = std::log2(lambda) - std::log2(1.0 - lambda);
        return q > 0.0 ? q : 0.0;
    }

    GapReport gap_report(const CapacityResult &dq, double reference_bits, ReferenceKind kind)
    {
        if (!std::isfinite(dq.bits) || !std::isfinite(reference_bits))
            throw invalid_input("gap report needs finite rates");
        return {dq.bits, reference_bits, dq.bits - reference_bits, kind};
    }

    std::optional<ReferenceValue> classical_reference(const ChannelModel &channel, const PowerBudget &budget)
    {
        if (const auto *c = std::get_if<Attenuation>(&channel))
            return ReferenceValue{attenuation_capacity_exact(c->lambda, budget), ReferenceKind::exact_capacity};
        if (const auto *c = std::get_if<ThermalNoise>(&channel); c && c->n_e == 0.0)
            return ReferenceValue{attenuation_capacity_exact(c->lambda, budget), ReferenceKind::exact_capacity};
        if (const auto *c = std::get_if<ClassicalNoise>(&channel))
            return ReferenceValue{classical_noise_lower_bound(c->mu2, budget), ReferenceKind::lower_bound};
        if (const auto *c = std::get_if<Dephasing>(&channel))
            return ReferenceValue{dephasing_holevo(c->mu2, budget), ReferenceKind::achievable_holevo};
        return std::nullopt;
    }

    std::optional<ReferenceValue> quantum_reference(const ChannelModel &channel)
    {
        if (const auto *c = std::get_if<Attenuation>(&channel))
            return ReferenceValue{attenuation_quantum_exact(c->lambda), ReferenceKind::exact_capacity};
        if (const auto *c = std::get_if<ThermalNoise>(&channel); c && c->n_e == 0.0)
            return ReferenceValue{attenuation_quantum_exact(c->lambda), ReferenceKind::exact_capacity};
        return std::nullopt;
    }
}

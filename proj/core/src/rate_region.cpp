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

#include "dqcap/rate_region.hpp"
#include "dqcap/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dqcap
{
    namespace
    {
        constexpr double inf = std::numeric_limits<double>::infinity();
        constexpr double boundary_slack = 1e-12;
    }

    RateRegion::RateRegion(std::array<std::string, 2> labels, std::vector<Halfplane> constraints)
        : labels_(std::move(labels)), constraints_(std::move(constraints))
    {
        for (auto &h : constraints_)
        {
            for (int c : h.coeffs)
                if (c != 0 && c != 1)
                    throw invalid_input("rate region coefficients must be 0 or 1");
            if (std::isnan(h.bound))
                throw invalid_input("rate region bound is NaN");
            if (h.bound < 0.0)
                h.bound = 0.0;
        }
    }

    double RateRegion::bound(std::array<int, 2> coeffs) const noexcept
    {
        double b = inf;
        for (const auto &h : constraints_)
            if (h.coeffs == coeffs)
                b = std::min(b, h.bound);
        return b;
    }

    bool region_contains(const RateRegion &region, std::span<const double> point)
    {
        if (point.size() != RateRegion::dimension)
            throw invalid_input("rate point has dimension " + std::to_string(point.size()) + ", region has 2");
        for (double r : point)
            if (std::isnan(r) || r < 0.0)
                return false;
        for (const auto &h : region.constraints())
        {
            const double lhs = h.coeffs[0] * point[0] + h.coeffs[1] * point[1];
            if (lhs > h.bound + boundary_slack * std::max(1.0, h.bound))
                return false;
        }
        return true;
    }

    std::vector<RatePoint> region_boundary(const RateRegion &region, int n)
    {
        if (n < 2)
            throw invalid_input("boundary needs at least 2 points");

        const double sum = region.bound({1, 1});
        const double x_max = std::min(region.bound({1, 0}), sum);
        const double y_max = std::min(region.bound({0, 1}), sum);
        if (std::isinf(x_max) || std::isinf(y_max))
            throw invalid_input("rate region is unbounded");

        // Non-dominated set: from the top corner (largest R_0 at R_1 = y_max) down the
        // sum-rate facet to the right corner (largest R_1 at R_0 = x_max).
        const RatePoint top{std::clamp(sum - y_max, 0.0, x_max), y_max};
        const RatePoint right{x_max, std::clamp(sum - x_max, 0.0, y_max)};

        std::vector<RatePoint> pts;
        pts.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
        {
            if (i == n - 1)
            {
                pts.push_back(right);
                break;
            }
            const double t = static_cast<double>(i) / static_cast<double>(n - 1);
            pts.push_back({top[0] + t * (right[0] - top[0]), top[1] + t * (right[1] - top[1])});
        }
        return pts;
    }
}

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

#ifndef DQCAP_RATE_REGION_HPP
#define DQCAP_RATE_REGION_HPP

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace dqcap
{
    using RatePoint = std::array<double, 2>;

    // sum_i coeffs[i] * R_i <= bound, coefficients in {0, 1}
    struct Halfplane
    {
        std::array<int, 2> coeffs;
        double bound;
    };

    // Downward-closed polytope of two rates: R_i >= 0 plus a short list of halfplanes.
    class RateRegion
    {
    public:
        static constexpr std::size_t dimension = 2;

        // Negative bounds (including -inf) are clamped to 0. NaN bounds or coefficients outside
        // {0, 1} throw invalid_input.
        RateRegion(std::array<std::string, 2> labels, std::vector<Halfplane> constraints);

        const std::array<std::string, 2> &labels() const noexcept { return labels_; }
        const std::vector<Halfplane> &constraints() const noexcept { return constraints_; }

        // Tightest bound among constraints with exactly this coefficient vector (+inf if none).
        double bound(std::array<int, 2> coeffs) const noexcept;

    private:
        std::array<std::string, 2> labels_;
        std::vector<Halfplane> constraints_;
    };

    // Membership in the closed region. Bounds are compared with a relative slack of 1e-12 so
    // that points computed on a boundary test as inside. Throws invalid_input on a size mismatch.
    bool region_contains(const RateRegion &region, std::span<const double> point);

    // n points evenly spaced along the Pareto (non-dominated) boundary, sorted by the first
    // rate. The first and last points are the extreme corners. Throws invalid_input for n < 2
    // or an unbounded region.
    std::vector<RatePoint> region_boundary(const RateRegion &region, int n);
}

#endif

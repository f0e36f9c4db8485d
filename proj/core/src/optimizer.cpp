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

#include "dqcap/optimizer.hpp"
#include "dqcap/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

namespace dqcap
{
    namespace
    {
        constexpr double quarter_turn = std::numbers::pi / 2.0;

        struct Window
        {
            double theta_center;
            double theta_half;
            double log_aspect_center;
            double log_aspect_half;
        };

        struct Candidate
        {
            double rate;
            double theta;
            double log_aspect;
        };

        bool preferred(const Candidate &c, const Candidate &best)
        {
            if (c.rate > best.rate + tie_tolerance_bits)
                return true;
            if (c.rate >= best.rate - tie_tolerance_bits)
                return std::abs(c.log_aspect) < std::abs(best.log_aspect);
            return false;
        }

        double axis_point(double center, double half, int i, int n)
        {
            return center - half + static_cast<double>(i) * (2.0 * half / static_cast<double>(n - 1));
        }

        // Row-major scan over the window; infeasible or out-of-domain points are skipped.
        std::optional<Candidate> scan(const ChannelModel &channel, const PowerBudget &budget, const GridSpec &grid,
                                      double log_range, bool integer_levels, const Window &w)
        {
            std::optional<Candidate> best;
            for (int i = 0; i < grid.n_sigma; ++i)
            {
                const double theta = axis_point(w.theta_center, w.theta_half, i, grid.n_sigma);
                if (theta <= 0.0 || theta >= quarter_turn)
                    continue;
                for (int j = 0; j < grid.n_aspect; ++j)
                {
                    const double la = axis_point(w.log_aspect_center, w.log_aspect_half, j, grid.n_aspect);
                    if (std::abs(la) > log_range * (1.0 + constraint_rel_tol))
                        continue;
                    const ModulationScheme s = scheme_at(budget, theta, la);
                    if (!validate_scheme(s, budget).ok())
                        continue;
                    const Candidate c{scheme_rate(channel, s, integer_levels), theta, la};
                    if (!best || preferred(c, *best))
                        best = c;
                }
            }
            return best;
        }

        CapacityResult to_result(const PowerBudget &budget, const Candidate &c, bool integer_levels)
        {
            CapacityResult r;
            r.optimizer_scheme = scheme_at(budget, c.theta, c.log_aspect);
            r.method = Method::grid_search;
            r.integer_levels = integer_levels;
            r.below_one_level = c.rate < 0.0;
            r.bits = c.rate > 0.0 ? c.rate : 0.0;
            return r;
        }

        void require_grid(const GridSpec &grid)
        {
            if (grid.n_sigma < 2 || grid.n_aspect < 2)
                throw invalid_input("grid needs at least 2 points per axis");
        }
    }

    double GridSpec::resolved_aspect_range(const PowerBudget &budget) const
    {
        require_grid(*this);
        const double needed = 4.0 * budget.w();
        if (aspect_range == 0.0)
            return needed;
        if (!std::isfinite(aspect_range) || aspect_range <= 1.0)
            throw invalid_input("aspect_range must be finite and > 1");
        if (aspect_range < needed * (1.0 - constraint_rel_tol))
            throw invalid_input("aspect_range must be >= 4W to reach squeezed optima");
        return aspect_range;
    }

    double ceil_levels(double count)
    {
        return std::ceil(count * (1.0 - constraint_rel_tol));
    }

    double scheme_rate(const ChannelModel &channel, const ModulationScheme &scheme, bool integer_levels)
    {
        const double lambda = noise_profile(channel).lambda;
        const TileDims out = effective_tile(channel, scheme);
        double count = lambda * scheme.sigma_p * scheme.sigma_q / out.area();
        if (integer_levels && count >= 1.0)
            count = ceil_levels(count);
        return std::log2(count);
    }

    ModulationScheme scheme_at(const PowerBudget &budget, double theta, double log_aspect)
    {
        const double spread = std::sqrt(2.0 * budget.w());
        const double aspect = std::exp(log_aspect);
        return {spread * std::cos(theta), spread * std::sin(theta), std::sqrt(aspect / 2.0),
                std::sqrt(1.0 / (2.0 * aspect))};
    }

    CapacityResult maximize_classical(const ChannelModel &channel, const PowerBudget &budget, const GridSpec &grid,
                                      bool integer_levels)
    {
        validate_channel(channel);
        const double log_range = std::log(grid.resolved_aspect_range(budget));
        const Window full{quarter_turn / 2.0, quarter_turn / 2.0, 0.0, log_range};
        const auto best = scan(channel, budget, grid, log_range, integer_levels, full);
        if (!best)
        {
            CapacityResult vacuum;
            vacuum.method = Method::grid_search;
            vacuum.integer_levels = integer_levels;
            return vacuum;
        }
        return to_result(budget, *best, integer_levels);
    }

    CapacityResult refine(const ChannelModel &channel, const PowerBudget &budget, const CapacityResult &coarse,
                          double shrink_factor, int rounds, const GridSpec &grid)
    {
        if (!(shrink_factor > 0.0 && shrink_factor < 1.0))
            throw invalid_input("shrink_factor must lie in (0, 1)");
        if (rounds <= 0)
            return coarse;
        validate_channel(channel);

        const double log_range = std::log(grid.resolved_aspect_range(budget));
        const ModulationScheme &s = coarse.optimizer_scheme;
        Candidate incumbent{scheme_rate(channel, s, coarse.integer_levels), std::atan2(s.sigma_q, s.sigma_p),
                            std::log(s.delta_p / s.delta_q)};

        // Window half-widths start at one coarse cell and shrink geometrically.
        double theta_half = quarter_turn / static_cast<double>(grid.n_sigma - 1);
        double la_half = 2.0 * log_range / static_cast<double>(grid.n_aspect - 1);
        bool improved = false;
        for (int round = 0; round < rounds; ++round)
        {
            const Window w{incumbent.theta, theta_half, incumbent.log_aspect, la_half};
            if (const auto c = scan(channel, budget, grid, log_range, coarse.integer_levels, w);
                c && c->rate > incumbent.rate)
            {
                incumbent = *c;
                improved = true;
            }
            theta_half *= shrink_factor;
            la_half *= shrink_factor;
        }
        if (!improved)
            return coarse;
        return to_result(budget, incumbent, coarse.integer_levels);
    }
}

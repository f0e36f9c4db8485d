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

// Randomized invariant checks. Each property draws kIterations cases from a fixed seed so
// failures are reproducible; the failing inputs are printed with the assertion.

#include "dqcap/dqcap.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

using namespace dqcap;

namespace
{
    constexpr int kIterations = 500;

    class Gen
    {
    public:
        explicit Gen(std::uint64_t seed) : rng_(seed) {}

        double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
        double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
        int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

        double lambda() { return uniform(0.01, 1.0); }
        double power() { return log_uniform(0.5, 1e4); }

        ChannelModel channel()
        {
            switch (pick(5))
            {
            case 0:
                return Attenuation{lambda()};
            case 1:
                return ThermalNoise{lambda(), log_uniform(1e-3, 50.0)};
            case 2:
                return ClassicalNoise{log_uniform(1e-3, 50.0)};
            case 3:
                return Dephasing{log_uniform(1e-3, 50.0)};
            default:
                return AdditiveGaussian{lambda(), vacuum_std * log_uniform(1.0, 20.0), vacuum_std * log_uniform(1.0, 20.0)};
            }
        }

        // A scheme satisfying all three constraints for `budget`. Built directly: tile area in
        // [1/2, W], an aspect that keeps the tile inside the power budget, then the leftover
        // power spread over the two amplitudes.
        ModulationScheme valid_scheme(const PowerBudget &budget)
        {
            const double w = budget.w();
            const double area = std::max(0.5, log_uniform(0.5, std::max(0.5, 0.98 * w)));
            const double span = 2.0 * w / area;
            const double r_max = 0.5 * (span + std::sqrt(std::max(0.0, span * span - 4.0)));
            const double r = log_uniform(1.0 / r_max, r_max);
            ModulationScheme s{0.0, 0.0, std::sqrt(area * r), std::sqrt(area / r)};
            const double rest = std::max(0.0, 2.0 * w - s.delta_p * s.delta_p - s.delta_q * s.delta_q);
            const double used = rest * uniform(0.0, 1.0);
            const double split = uniform(0.0, 1.0);
            s.sigma_p = std::sqrt(s.delta_p * s.delta_p + used * split);
            s.sigma_q = std::sqrt(s.delta_q * s.delta_q + used * (1.0 - split));
            return s;
        }

    private:
        std::mt19937_64 rng_;
    };

    double bits(const ChannelModel &c, double w)
    {
        return classical_capacity(c, PowerBudget(w)).bits;
    }
}

// ---------------------------------------------------------------------------------------------
// phase model
// ---------------------------------------------------------------------------------------------

TEST(PhaseModelProperties, EffectiveTileRespectsFloors)
{
    Gen gen(1);
    for (int i = 0; i < kIterations; ++i)
    {
        const PowerBudget b(gen.power());
        const ChannelModel c = gen.channel();
        const ModulationScheme s = gen.valid_scheme(b);
        ASSERT_TRUE(validate_scheme(s, b).ok());
        const TileDims t = effective_tile(c, s);
        const double lambda = noise_profile(c).lambda;
        EXPECT_GE(t.area(), 0.5 * (1.0 - 1e-12)) << family_name(c);
        EXPECT_GE(t.area(), lambda * s.delta_p * s.delta_q * (1.0 - 1e-12)) << family_name(c);
    }
}

// The area floor rescales both sides together, so extra noise on one quadrature can narrow the
// other side; the area and the noisier side itself never shrink.
TEST(PhaseModelProperties, MoreEnvironmentNoiseNeverShrinksTile)
{
    Gen gen(2);
    for (int i = 0; i < kIterations; ++i)
    {
        const PowerBudget b(gen.power());
        const ModulationScheme s = gen.valid_scheme(b);
        const AdditiveGaussian lo{gen.lambda(), vacuum_std * gen.log_uniform(1.0, 10.0), vacuum_std * gen.log_uniform(1.0, 10.0)};
        AdditiveGaussian hi = lo;
        const bool on_p = gen.pick(2) == 0;
        if (on_p)
            hi.sigma_r *= gen.uniform(1.0, 3.0);
        else
            hi.sigma_s *= gen.uniform(1.0, 3.0);
        const TileDims a = effective_tile(lo, s);
        const TileDims z = effective_tile(hi, s);
        EXPECT_GE(z.area(), a.area() * (1.0 - 1e-12));
        if (on_p)
            EXPECT_GE(z.dp, a.dp * (1.0 - 1e-12));
        else
            EXPECT_GE(z.dq, a.dq * (1.0 - 1e-12));
    }
}

TEST(PhaseModelProperties, StateCountAtLeastOne)
{
    Gen gen(3);
    for (int i = 0; i < kIterations; ++i)
    {
        const PowerBudget b(gen.power());
        const ModulationScheme s = gen.valid_scheme(b);
        EXPECT_GE(state_count(s), 1.0);
        ModulationScheme single = s;
        single.delta_p = s.sigma_p;
        single.delta_q = s.sigma_q;
        EXPECT_DOUBLE_EQ(state_count(single), 1.0);
        if (s.delta_p < s.sigma_p || s.delta_q < s.sigma_q)
            EXPECT_GT(state_count(s), 1.0);
    }
}

TEST(PhaseModelProperties, IdentityChannelLeavesValidTileUnchanged)
{
    Gen gen(4);
    for (int i = 0; i < kIterations; ++i)
    {
        const ModulationScheme s = gen.valid_scheme(PowerBudget(gen.power()));
        const TileDims t = effective_tile(AdditiveGaussian{1.0, vacuum_std * gen.log_uniform(1.0, 100.0), vacuum_std}, s);
        EXPECT_EQ(t.dp, s.delta_p);
        EXPECT_EQ(t.dq, s.delta_q);
    }
}

// ---------------------------------------------------------------------------------------------
// capacities
// ---------------------------------------------------------------------------------------------

TEST(CapacityProperties, NondecreasingInPower)
{
    Gen gen(5);
    for (int i = 0; i < 200; ++i)
    {
        const ChannelModel c = gen.channel();
        const double w = gen.power();
        const double w2 = w * gen.uniform(1.0, 4.0);
        EXPECT_LE(bits(c, w), bits(c, w2) + 1e-9) << family_name(c) << " W=" << w << " -> " << w2;
    }
}

TEST(CapacityProperties, NonincreasingInNoise)
{
    Gen gen(6);
    for (int i = 0; i < kIterations; ++i)
    {
        const double w = gen.power();
        const double mu2 = gen.log_uniform(1e-3, 50.0);
        const double more = mu2 * gen.uniform(1.0, 5.0);
        EXPECT_GE(bits(ClassicalNoise{mu2}, w), bits(ClassicalNoise{more}, w));
        EXPECT_GE(bits(Dephasing{mu2}, w), bits(Dephasing{more}, w));

        const double lambda = gen.lambda();
        const double n_e = gen.log_uniform(1e-3, 50.0);
        EXPECT_GE(bits(ThermalNoise{lambda, n_e}, w), bits(ThermalNoise{lambda, n_e * gen.uniform(1.0, 5.0)}, w));

        const double lossier = lambda * gen.uniform(0.1, 1.0);
        EXPECT_GE(bits(Attenuation{lambda}, w), bits(Attenuation{lossier}, w));
        EXPECT_GE(bits(ThermalNoise{lambda, n_e}, w), bits(ThermalNoise{lossier, n_e}, w));
    }
}

TEST(CapacityProperties, DephasingConstantInNoise)
{
    Gen gen(7);
    for (int i = 0; i < 100; ++i)
    {
        const double w = gen.power();
        const double ref = bits(Dephasing{0.0}, w);
        for (double mu2 : {1e-4, 0.1, 1.0, 10.0, 1e3, 1e6})
            EXPECT_EQ(bits(Dephasing{mu2}, w), ref);
    }
}

// Q <= C is not unconditional: the quantum rate does not depend on W while the classical one
// does. It holds once W (1 - lambda/G) covers the effective output noise max(1/2, (1-lambda)(N_E+1/2)).
TEST(CapacityProperties, QuantumNeverExceedsClassicalWithEnoughPower)
{
    Gen gen(8);
    for (int i = 0; i < kIterations; ++i)
    {
        const ThermalNoise c{gen.uniform(0.01, 0.999), gen.pick(3) == 0 ? 0.0 : gen.log_uniform(1e-3, 50.0)};
        const double leak = 1.0 - thermal_decomposition(c).lambda_tilde;
        const double noise = std::max(0.5, (1.0 - c.lambda) * (c.n_e + 0.5));
        const double w_min = std::max(1.0 / c.lambda, noise / leak);
        const double w = w_min * gen.log_uniform(1.0, 100.0);
        const PowerBudget b(w);
        EXPECT_LE(quantum_capacity(c, b).bits, classical_capacity(c, b).bits + 1e-12)
            << "lambda=" << c.lambda << " n_e=" << c.n_e << " W=" << w;
        EXPECT_FALSE(quantum_capacity(c, b).power_limited);
    }
}

TEST(CapacityProperties, QuantumCapacitySaturatesInPower)
{
    Gen gen(9);
    for (int i = 0; i < kIterations; ++i)
    {
        const double lambda = gen.uniform(0.01, 0.999);
        const double w = gen.power();
        EXPECT_EQ(quantum_capacity(Attenuation{lambda}, PowerBudget(w)).bits,
                  quantum_capacity(Attenuation{lambda}, PowerBudget(10.0 * w)).bits);
    }
}

TEST(CapacityProperties, ThermalWithoutPhotonsIsAttenuation)
{
    Gen gen(10);
    for (int i = 0; i < kIterations; ++i)
    {
        const double lambda = gen.lambda();
        const PowerBudget b(gen.power());
        EXPECT_EQ(quantum_capacity(ThermalNoise{lambda, 0.0}, b).bits, quantum_capacity(Attenuation{lambda}, b).bits);
        EXPECT_EQ(classical_capacity(ThermalNoise{lambda, 0.0}, b).bits, classical_capacity(Attenuation{lambda}, b).bits);
    }
}

TEST(CapacityProperties, TradeoffRegionCornersAndClosure)
{
    Gen gen(11);
    for (int i = 0; i < 200; ++i)
    {
        const Attenuation c{gen.uniform(0.05, 0.99)};
        const PowerBudget b(gen.power());
        const RateRegion r = cq_tradeoff_region(c, b);
        const double c_max = classical_capacity(c, b).bits;
        const double q_max = quantum_capacity(c, b).bits;
        EXPECT_TRUE(region_contains(r, std::array{c_max, 0.0}));
        if (c_max >= q_max)
            EXPECT_TRUE(region_contains(r, std::array{c_max - q_max, q_max}));
        const std::array p{gen.uniform(0.0, c_max), gen.uniform(0.0, q_max)};
        if (region_contains(r, p))
            EXPECT_TRUE(region_contains(r, std::array{p[0] * gen.uniform(0.0, 1.0), p[1] * gen.uniform(0.0, 1.0)}));
    }
}

// ---------------------------------------------------------------------------------------------
// optimizer
// ---------------------------------------------------------------------------------------------

TEST(OptimizerProperties, SymmetricChannelsInvariantUnderAspectInversion)
{
    Gen gen(12);
    for (int i = 0; i < kIterations; ++i)
    {
        ChannelModel c;
        switch (gen.pick(3))
        {
        case 0:
            c = Attenuation{gen.lambda()};
            break;
        case 1:
            c = ClassicalNoise{gen.log_uniform(1e-3, 50.0)};
            break;
        default:
            c = ThermalNoise{gen.lambda(), gen.log_uniform(1e-3, 50.0)};
        }
        ASSERT_TRUE(quadrature_symmetric(c));
        const PowerBudget b(gen.power());
        const double theta = gen.uniform(0.01, std::numbers::pi / 2.0 - 0.01);
        const double la = std::log(4.0 * b.w()) * gen.uniform(-1.0, 1.0);
        const double fwd = scheme_rate(c, scheme_at(b, theta, la));
        const double inv = scheme_rate(c, scheme_at(b, std::numbers::pi / 2.0 - theta, -la));
        EXPECT_NEAR(fwd, inv, 1e-12);
    }
}

TEST(OptimizerProperties, SearchResultIsFeasible)
{
    Gen gen(13);
    for (int i = 0; i < 40; ++i)
    {
        const ChannelModel c = gen.channel();
        const PowerBudget b(gen.power());
        const CapacityResult r = maximize_classical(c, b, {33, 33, 0.0});
        EXPECT_TRUE(validate_scheme(r.optimizer_scheme, b).ok()) << family_name(c);
        EXPECT_GE(r.bits, 0.0);
    }
}

TEST(OptimizerProperties, ClosedFormsAgreeWithSearch)
{
    Gen gen(14);
    for (int i = 0; i < 40; ++i)
    {
        ChannelModel c = gen.channel();
        if (std::holds_alternative<AdditiveGaussian>(c))
            continue;
        const double w = gen.log_uniform(1.0, 1e3);
        // the squeezed dephasing scheme needs the Q tile to swallow the noise: mu2 <= W
        if (const auto *d = std::get_if<Dephasing>(&c); d && d->mu2 > w)
            c = Dephasing{w * gen.uniform(0.0, 1.0)};
        const PowerBudget b(w);
        const CapacityResult grid = refine(c, b, maximize_classical(c, b, {65, 65, 0.0}), 0.5, 3, {65, 65, 0.0});
        EXPECT_NEAR(grid.bits, classical_capacity(c, b).bits, 0.05) << family_name(c) << " W=" << w;
    }
}

// ---------------------------------------------------------------------------------------------
// rate regions
// ---------------------------------------------------------------------------------------------

TEST(RegionProperties, DownwardClosure)
{
    Gen gen(15);
    for (int i = 0; i < kIterations; ++i)
    {
        const double lambda = gen.uniform(0.51, 0.999);
        const double wa = gen.power();
        const RateRegion r = gen.pick(2) == 0
                                 ? broadcast_region(lambda, PowerBudget(wa))
                                 : mac_region(lambda, PowerBudget(wa), PowerBudget(std::max(0.5, wa * gen.uniform(0.0, 1.0))));
        const std::array p{gen.uniform(0.0, 15.0), gen.uniform(0.0, 15.0)};
        if (!region_contains(r, p))
            continue;
        const std::array q{p[0] * gen.uniform(0.0, 1.0), p[1] * gen.uniform(0.0, 1.0)};
        EXPECT_TRUE(region_contains(r, q));
    }
}

TEST(RegionProperties, BroadcastSumDominatesWeakReceiver)
{
    Gen gen(16);
    for (int i = 0; i < kIterations; ++i)
    {
        const RateRegion r = broadcast_region(gen.uniform(0.5 + 1e-9, 1.0), PowerBudget(gen.power()));
        EXPECT_GE(r.bound({1, 1}), r.bound({0, 1}));
    }
}

TEST(RegionProperties, MacSumEqualsStrongSender)
{
    Gen gen(17);
    for (int i = 0; i < kIterations; ++i)
    {
        const double lambda = gen.uniform(0.05, 0.95);
        const double wb = gen.power();
        const double wa = std::max(0.5, (1.0 - lambda) * wb / lambda) * gen.log_uniform(1.0, 100.0);
        const RateRegion r = mac_region(lambda, PowerBudget(wa), PowerBudget(wb));
        EXPECT_EQ(r.bound({1, 1}), r.bound({1, 0}));
        const double rb = r.bound({0, 1});
        const double ra = std::log2(2.0 * lambda * wa) - rb;
        if (ra >= 0.0 && rb > 0.0)
        {
            EXPECT_TRUE(region_contains(r, std::array{ra, rb}));
            EXPECT_NEAR(ra + rb, r.bound({1, 1}), 1e-12 * std::max(1.0, r.bound({1, 1})));
        }
    }
}

TEST(RegionProperties, DoublingPowerAddsOneBit)
{
    Gen gen(18);
    for (int i = 0; i < kIterations; ++i)
    {
        const double lambda = gen.uniform(0.51, 0.99);
        const double w = gen.log_uniform(50.0, 1e4); // keep every bound above the zero clamp
        const RateRegion a = broadcast_region(lambda, PowerBudget(w));
        const RateRegion b = broadcast_region(lambda, PowerBudget(2.0 * w));
        EXPECT_NEAR(b.bound({0, 1}) - a.bound({0, 1}), 1.0, 1e-12);
        EXPECT_NEAR(b.bound({1, 1}) - a.bound({1, 1}), 1.0, 1e-12);

        const RateRegion m = mac_region(lambda, PowerBudget(w), PowerBudget(w));
        const RateRegion ma = mac_region(lambda, PowerBudget(2.0 * w), PowerBudget(w));
        const RateRegion mb = mac_region(lambda, PowerBudget(2.0 * w), PowerBudget(2.0 * w));
        EXPECT_NEAR(ma.bound({1, 0}) - m.bound({1, 0}), 1.0, 1e-12);
        EXPECT_NEAR(mb.bound({0, 1}) - m.bound({0, 1}), 1.0, 1e-12);
    }
}

// ---------------------------------------------------------------------------------------------
// reference formulas
// ---------------------------------------------------------------------------------------------

TEST(ReferenceProperties, GIncreasingAndConcave)
{
    const double h = 1e-3;
    for (double x = 2e-3; x < 200.0; x *= 1.07)
    {
        const double lo = g(x - h), mid = g(x), hi = g(x + h);
        EXPECT_GT(hi, mid) << x;
        EXPECT_GT(mid, lo) << x;
        EXPECT_LT(hi - 2.0 * mid + lo, 0.0) << x;
    }
}

TEST(ReferenceProperties, GApproachesLog2OfEx)
{
    double previous = std::numeric_limits<double>::infinity();
    for (double x = 1.0; x <= 1e9; x *= 10.0)
    {
        const double excess = g(x) / std::numbers::ln2 - std::log2(std::numbers::e * x);
        EXPECT_GE(excess, -1e-12) << x;
        EXPECT_LE(excess, previous) << x;
        previous = excess;
    }
    EXPECT_LT(previous, 1e-8);
}

TEST(ReferenceProperties, LosslessAttenuationIsBest)
{
    Gen gen(19);
    for (int i = 0; i < kIterations; ++i)
    {
        const PowerBudget b(gen.power());
        EXPECT_GE(attenuation_capacity_exact(1.0, b), attenuation_capacity_exact(gen.lambda(), b));
    }
}

TEST(ReferenceProperties, ClassicalNoiseBoundNonincreasingInNoise)
{
    Gen gen(20);
    for (int i = 0; i < kIterations; ++i)
    {
        const PowerBudget b(gen.power());
        const double mu2 = gen.log_uniform(1e-4, 100.0);
        EXPECT_GE(classical_noise_lower_bound(mu2, b) + 1e-12,
                  classical_noise_lower_bound(mu2 * gen.uniform(1.0, 5.0), b));
    }
}

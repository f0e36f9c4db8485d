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

#include "dqcap/dqcap.hpp"

#include <benchmark/benchmark.h>

namespace dqcap
{
    void BM_ClosedFormClassical(benchmark::State &state)
    {
        const PowerBudget b(50.5);
        for (auto _ : state)
        {
            benchmark::DoNotOptimize(classical_capacity(ThermalNoise{0.8, 1.0}, b));
        }
    }
    BENCHMARK(BM_ClosedFormClassical);

    void BM_AttenuationReference(benchmark::State &state)
    {
        const PowerBudget b(50.5);
        for (auto _ : state)
        {
            benchmark::DoNotOptimize(attenuation_capacity_exact(0.8, b));
        }
    }
    BENCHMARK(BM_AttenuationReference);

    // Coarse scan cost grows with n_sigma * n_aspect.
    void BM_GridSearch(benchmark::State &state)
    {
        const int n = static_cast<int>(state.range(0));
        const PowerBudget b(20.0);
        const ChannelModel c = AdditiveGaussian{0.7, 1.1, 2.5};
        for (auto _ : state)
        {
            benchmark::DoNotOptimize(maximize_classical(c, b, {n, n, 0.0}));
        }
        state.SetComplexityN(static_cast<benchmark::IterationCount>(n) * n);
    }
    BENCHMARK(BM_GridSearch)->RangeMultiplier(2)->Range(17, 257)->Complexity(benchmark::oN);

    void BM_GridSearchRefined(benchmark::State &state)
    {
        const PowerBudget b(20.0);
        const ChannelModel c = AdditiveGaussian{0.7, 1.1, 2.5};
        for (auto _ : state)
        {
            const CapacityResult coarse = maximize_classical(c, b);
            benchmark::DoNotOptimize(refine(c, b, coarse, 0.5, 3));
        }
    }
    BENCHMARK(BM_GridSearchRefined)->Unit(benchmark::kMillisecond);

    void BM_RegionBoundary(benchmark::State &state)
    {
        const RateRegion r = mac_region(0.6, PowerBudget(30.0), PowerBudget(7.0));
        for (auto _ : state)
        {
            benchmark::DoNotOptimize(region_boundary(r, static_cast<int>(state.range(0))));
        }
    }
    BENCHMARK(BM_RegionBoundary)->Arg(64)->Arg(4096);
}

BENCHMARK_MAIN();

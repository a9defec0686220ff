// SPDX-License-Identifier: Apache-2.0
//
// sv60 - statistical channel modelling for 60 GHz fixed mmWave uplinks
// Copyright (C) 2026 The sv60 authors
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

#include "sv60/extraction.hpp"
#include "sv60/metrics.hpp"
#include "sv60/simulator.hpp"

#include <benchmark/benchmark.h>

using namespace sv60;

namespace
{

const SvParameterSet &o2o_near()
{
    return ParameterRegistry::published().at(Scenario::O2O, MisalignmentBin::Near);
}

Pdp fine_profile(std::uint64_t seed)
{
    SimConfig config;
    config.shadowing_sigma_db = 0.0;
    config.delay_resolution_ns = 0.001;
    config.max_delay_ns = 40.0;
    Rng rng(seed);
    return normalize_pdp(cir_to_pdp(generate_cir(o2o_near(), config, rng), config).pdp);
}

} // namespace

static void BM_GenerateCir(benchmark::State &state)
{
    SimConfig config;
    Rng rng(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(generate_cir(o2o_near(), config, rng));
}
BENCHMARK(BM_GenerateCir);

static void BM_CirToPdp(benchmark::State &state)
{
    SimConfig config;
    Rng rng(2);
    const Cir cir = generate_cir(o2o_near(), config, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(cir_to_pdp(cir, config));
}
BENCHMARK(BM_CirToPdp);

static void BM_Ensemble(benchmark::State &state)
{
    SimConfig config;
    for (auto _ : state)
        benchmark::DoNotOptimize(simulate_ensemble(o2o_near(), config, static_cast<std::size_t>(state.range(0))));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Ensemble)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_KsStatistic(benchmark::State &state)
{
    SimConfig config;
    config.max_delay_ns = static_cast<double>(state.range(0)) * config.delay_resolution_ns;
    Rng a(3), b(4);
    const Pdp p = cir_to_pdp(generate_cir(o2o_near(), config, a), config).pdp;
    const Pdp q = cir_to_pdp(generate_cir(o2o_near(), config, b), config).pdp;
    for (auto _ : state)
        benchmark::DoNotOptimize(ks_statistic(p, q));
}
BENCHMARK(BM_KsStatistic)->Arg(80)->Arg(8000);

static void BM_ExtractGap(benchmark::State &state)
{
    const Pdp pdp = fine_profile(5);
    for (auto _ : state)
        benchmark::DoNotOptimize(extract_parameters(pdp, 3));
}
BENCHMARK(BM_ExtractGap);

static void BM_ExtractEnvelope(benchmark::State &state)
{
    const Pdp pdp = fine_profile(5);
    ExtractionOptions options;
    options.segmentation = Segmentation::Envelope;
    for (auto _ : state)
        benchmark::DoNotOptimize(extract_parameters(pdp, 3, options));
}
BENCHMARK(BM_ExtractEnvelope);

BENCHMARK_MAIN();

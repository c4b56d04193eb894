// Copyright 2026 The entverify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "benchmark/benchmark.h"

#include "entverify/bootstrap.h"
#include "entverify/compiler.h"
#include "entverify/graph.h"
#include "entverify/sampler.h"
#include "entverify/tomography.h"

using namespace entverify;

namespace {

const TomographyDataset &chain_data() {
    static const TomographyDataset ds = [] {
        GraphStateSpec spec = default_ring_spec(8);
        Circuit c = synthesize(spec, 16);
        return simulate_tomography(c, chain_plans(spec).front(), NoiseModel::from_device(DeviceModel::ibmqx5()), 1);
    }();
    return ds;
}

}  // namespace

static void BM_simulate_chain_tomography(benchmark::State &state) {
    GraphStateSpec spec = default_ring_spec(8);
    Circuit c = synthesize(spec, 16);
    TomographyPlan plan = chain_plans(spec).front();
    NoiseModel noise = NoiseModel::from_device(DeviceModel::ibmqx5());
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_tomography(c, plan, noise, seed++));
    }
}
BENCHMARK(BM_simulate_chain_tomography)->Unit(benchmark::kMillisecond);

static void BM_reconstruct(benchmark::State &state) {
    MarginalTable table = marginalize(chain_data());
    for (auto _ : state) {
        benchmark::DoNotOptimize(reconstruct_state(table));
    }
}
BENCHMARK(BM_reconstruct)->Unit(benchmark::kMicrosecond);

static void BM_bootstrap_nn(benchmark::State &state) {
    MarginalTable table = marginalize(chain_data());
    BootstrapConfig cfg;
    cfg.resamples = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bootstrap_protocol(table, Protocol::NearestNeighbor, cfg));
    }
}
BENCHMARK(BM_bootstrap_nn)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

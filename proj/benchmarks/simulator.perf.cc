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

#include "entverify/compiler.h"
#include "entverify/graph.h"
#include "entverify/sampler.h"
#include "entverify/tableau.h"

using namespace entverify;

static void BM_tableau_ring_preparation(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    Circuit c = synthesize(default_ring_spec(n), 16);
    for (auto _ : state) {
        StabilizerTableau t(c.n_qubits);
        t.apply(c);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_tableau_ring_preparation)->Arg(8)->Arg(16);

static void BM_sample_shots(benchmark::State &state) {
    Circuit c = synthesize(default_ring_spec(16), 16);
    std::vector<Pauli> basis(16, Pauli::X);
    NoiseModel noise = state.range(0) ? NoiseModel::from_device(DeviceModel::ibmqx5()) : NoiseModel::noiseless();
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_shots(c, basis, noise, 2048, seed++));
    }
    state.SetItemsProcessed(state.iterations() * 2048);
}
BENCHMARK(BM_sample_shots)->Arg(0)->Arg(1);

static void BM_compile_ring(benchmark::State &state) {
    GraphStateSpec spec = default_ring_spec(16);
    DeviceModel device = DeviceModel::ibmqx5();
    for (auto _ : state) {
        benchmark::DoNotOptimize(schedule(optimize(lower(synthesize(spec, 16), device))));
    }
}
BENCHMARK(BM_compile_ring);

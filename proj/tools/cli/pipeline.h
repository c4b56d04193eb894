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

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cli/config.h"
#include "entverify/bootstrap.h"
#include "entverify/circuit.h"
#include "entverify/entanglement.h"
#include "entverify/inference.h"
#include "entverify/tomography.h"

namespace entverify::cli {

namespace fs = std::filesystem;

struct CompiledRing {
    GraphStateSpec spec;
    DeviceModel device;
    Circuit synthesized;
    Circuit lowered;
    /// Optimized and scheduled.
    Circuit compiled;
};

CompiledRing compile_ring(const PipelineConfig &cfg);

/// Physical qubits in ring order.
std::vector<int> ring_qubits(const GraphStateSpec &spec);

/// One dataset per chain plan with every device qubit measured.
std::vector<TomographyDataset> simulate_chains(const CompiledRing &ring, const PipelineConfig &cfg);

std::vector<ReconstructedState> reconstruct_chains(const std::vector<TomographyDataset> &datasets);

struct ProtocolRow {
    std::size_t plan = 0;
    std::vector<int> chain;
    std::pair<int, int> pair;
    Estimate estimate;
    /// Overall postselection yield; absent for the nearest-neighbour test.
    std::optional<double> retained_fraction;
    std::vector<std::string> warnings;
};

/// Runs a protocol on every chain. The distance tests postselect the two
/// ring neighbours outside the chain on outcome 0 and need n >= 6.
std::vector<ProtocolRow> analyze_protocol(const std::vector<TomographyDataset> &datasets, const GraphStateSpec &spec,
                                          Protocol protocol, const PipelineConfig &cfg);

struct VerdictReport {
    std::vector<PairResult> pairs;
    std::size_t initial_hypotheses = 0;
    std::vector<AuxTest> aux;
    EntanglementVerdict verdict;
};

/// Infers full entanglement from the nearest-neighbour rows, running the
/// suggested partial-transpose tests on the chain data until no new test is
/// suggested.
VerdictReport analyze_verdict(const std::vector<TomographyDataset> &datasets, const GraphStateSpec &spec,
                              const std::vector<ProtocolRow> &nn, const PipelineConfig &cfg);

Json protocol_json(Protocol protocol, const std::vector<ProtocolRow> &rows, const PipelineConfig &cfg);
std::string protocol_csv(const std::vector<ProtocolRow> &rows);
Json verdict_json(const VerdictReport &report);
Json fidelity_json(const FidelityBound &bound, const std::vector<ReconstructedState> &chains);

// Run-directory steps. Each throws Error naming the missing input.
void write_compiled(const fs::path &dir, const PipelineConfig &cfg, const CompiledRing &ring);
CompiledRing read_compiled(const fs::path &dir);
void write_counts(const fs::path &dir, const std::vector<TomographyDataset> &datasets);
std::vector<TomographyDataset> read_counts(const fs::path &dir, const GraphStateSpec &spec,
                                           std::vector<std::string> *warnings = nullptr);
void write_reconstructions(const fs::path &dir, const std::vector<ReconstructedState> &states);
std::vector<ReconstructedState> read_reconstructions(const fs::path &dir, std::size_t count);
GraphStateSpec read_spec(const fs::path &dir);

void run_synth(const PipelineConfig &cfg);
void run_simulate(const PipelineConfig &cfg);
/// Ingests external counts for the configured ring into cfg.out.
void run_ingest(const PipelineConfig &cfg, const fs::path &counts_path);
void run_reconstruct(const PipelineConfig &cfg);
/// mode: nn, dist2, dist3, verdict or fidelity.
void run_analyze(const PipelineConfig &cfg, const std::string &mode);
/// Every step in memory; writes all artifacts and returns report.json.
Json run_pipeline(const PipelineConfig &cfg);

}  // namespace entverify::cli

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

#include <string>
#include <utility>
#include <vector>

#include "entverify/bootstrap.h"

namespace entverify {

/// Bipartition of the ring's qubits. block_a is the block without ring[0];
/// both blocks list qubits in ring order.
struct SeparationHypothesis {
    std::vector<int> block_a;
    std::vector<int> block_b;

    std::string str() const;
    friend bool operator==(const SeparationHypothesis &, const SeparationHypothesis &) = default;
};

struct PairResult {
    std::pair<int, int> pair;
    Estimate estimate;
};

/// Negativity of a 4-qubit chain across the cut (block | chain \ block).
struct AuxTest {
    std::vector<int> chain;
    std::vector<int> block;
    Estimate estimate;
};

/// A 4-qubit partial-transpose test that would refute a hypothesis.
struct SuggestedTest {
    std::size_t hypothesis = 0;
    std::vector<int> chain;
    std::vector<int> block;
};

enum class VerdictStatus { FullyEntangled, Inconclusive };

struct EntanglementVerdict {
    VerdictStatus status = VerdictStatus::Inconclusive;
    std::vector<SeparationHypothesis> surviving;
    /// Indices into the aux list that refuted at least one hypothesis.
    std::vector<std::size_t> aux_consumed;
    std::vector<SuggestedTest> suggestions;
};

std::string_view status_name(VerdictStatus s);

/// Every bipartition of the ring that keeps each significantly entangled
/// adjacent pair on one side: the ring breaks only at non-significant edges
/// and the resulting arcs are split between the two blocks in every way.
std::vector<SeparationHypothesis> ring_hypotheses(std::span<const int> ring, std::span<const PairResult> pairs);

/// True when a significant aux test shows entanglement across the cut the
/// hypothesis induces on the test's chain.
bool refutes(const AuxTest &aux, const SeparationHypothesis &h);

/// `ring` lists physical qubits in ring order; `pairs` must hold exactly one
/// estimate per adjacent pair (either orientation).
EntanglementVerdict infer_full_entanglement(std::span<const int> ring, std::span<const PairResult> pairs,
                                            std::span<const AuxTest> aux = {});

}  // namespace entverify

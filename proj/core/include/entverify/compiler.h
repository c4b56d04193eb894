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

#include <vector>

#include "entverify/circuit.h"
#include "entverify/device.h"
#include "entverify/graph.h"

namespace entverify {

/// Textbook preparation: H on every vertex qubit, then one CZ per edge in
/// the graph's edge order, on the physical qubits of spec.qubit_map. The
/// circuit width is max(n_qubits, largest label + 1).
Circuit synthesize(const GraphStateSpec &spec, int n_qubits = 0);

/// Rewrites CZ(a, b) as H(t) CNOT(c -> t) H(t) along an available coupling
/// (lower index controls when both directions exist) and reverses CNOTs that
/// only exist the other way. Throws CompilationError for uncoupled pairs.
Circuit lower(const Circuit &c, const DeviceModel &device);

/// Peephole optimizer for H/CNOT/CZ circuits:
///  - H . CNOT . H sandwiches on a target wire are viewed as CZ blocks;
///    runs of commuting CZ blocks are regrouped by edge color when that
///    shortens the two-qubit depth;
///  - H . H pairs adjacent on a wire are cancelled to fixpoint.
/// Returns the input unchanged when nothing improves.
Circuit optimize(const Circuit &c);

/// Greedy layering: each gate lands in the first layer after every earlier
/// non-commuting gate on its qubits where its qubits are free.
Circuit schedule(const Circuit &c);

/// Equality up to global phase. Circuits on at most 8 qubits are compared as
/// unitaries (all basis inputs, one common phase); wider ones (up to 16) by
/// their output on |0...0>.
bool equivalent(const Circuit &a, const Circuit &b);

/// Proper edge coloring used to pack commuting two-qubit gates. Paths and
/// even cycles get two colors; other components fall back to first-fit.
std::vector<int> edge_coloring(const std::vector<Edge> &edges);

}  // namespace entverify

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

#include <span>
#include <string_view>
#include <vector>

#include "entverify/graph.h"
#include "entverify/operators.h"
#include "entverify/pauli.h"
#include "entverify/tomography.h"

namespace entverify {

/// Partial transpose over the qubits at `positions` (tensor positions of m).
ComplexMatrix partial_transpose(const ComplexMatrix &m, std::span<const int> positions);

/// Sum of |lambda| over eigenvalues of the partial transpose below -1e-10.
double negativity(const DensityMatrix &rho, std::span<const int> positions);

/// rho -> (O rho O^dagger) / tr(...) for O the tensor product of the
/// filters, followed by tracing out `trace_out`. Throws AnnihilationError
/// when the filtered trace is below 1e-12.
DensityMatrix apply_filters(const DensityMatrix &rho, std::span<const LocalFilter> filters,
                            std::span<const int> trace_out);

/// Localization protocols on a 4-qubit chain state A-B-C-D. Each returns the
/// negativity of the two qubits left after filtering and tracing.
enum class Protocol {
    /// Z+ on A and D, keep B-C.
    NearestNeighbor,
    /// X+ on B, Z+ on D, keep A-C. Expects E (before A) and F (after D)
    /// postselected to 0.
    Distance2,
    /// X+ on B and C, keep A-D. Expects E and F postselected to 0.
    Distance3,
};

std::string_view protocol_name(Protocol p);
Protocol protocol_from_name(std::string_view name);

double protocol_negativity(Protocol p, const DensityMatrix &rho4);
double nn_filter_negativity(const DensityMatrix &rho4);
double dist2_negativity(const DensityMatrix &rho4);
double dist3_negativity(const DensityMatrix &rho4);

/// The pair of chain positions a protocol leaves behind.
std::pair<int, int> protocol_pair(Protocol p);

/// Fidelity of each chain reconstruction with the ideal reduced state of the
/// graph state on the same vertices; the smallest bounds the fidelity of the
/// full state from above.
struct FidelityBound {
    double bound = 1.0;
    std::vector<double> per_chain;
    std::size_t weakest = 0;
};
FidelityBound fidelity_upper_bound(std::span<const ReconstructedState> chains, const GraphStateSpec &spec);

}  // namespace entverify

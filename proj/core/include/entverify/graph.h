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
#include <utility>
#include <vector>

#include "entverify/operators.h"
#include "entverify/pauli.h"

namespace entverify {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices [0, n). Edges are stored normalized
/// (smaller endpoint first) in insertion order.
class Graph {
   public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int size() const noexcept {
        return n_;
    }
    const std::vector<Edge> &edges() const noexcept {
        return edges_;
    }
    const std::vector<int> &neighbors(int v) const {
        return adjacency_.at(v);
    }
    int degree(int v) const {
        return static_cast<int>(neighbors(v).size());
    }
    bool has_edge(int a, int b) const;

    friend bool operator==(const Graph &a, const Graph &b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

   private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
};

/// A graph plus the physical qubit carrying each vertex.
struct GraphStateSpec {
    Graph graph;
    std::vector<int> qubit_map;

    GraphStateSpec(Graph g, std::vector<int> map);
    /// Identity placement: vertex v on qubit v.
    explicit GraphStateSpec(Graph g);

    /// Physical label of vertex v.
    int qubit(int v) const {
        return qubit_map.at(v);
    }
    int max_qubit() const;
};

/// Cycle 0-1-...-(n-1)-0 for even n >= 4.
Graph ring_graph(int n);

/// Default placement of an n-ring on the 16-qubit ladder device: the outer
/// perimeter for n = 16, otherwise the rectangle closed by the rung that
/// yields n qubits (n = 8 -> q5..q12).
GraphStateSpec default_ring_spec(int n);

/// True when g is a single cycle visiting vertices 0, 1, ..., n-1 in order.
bool is_ring(const Graph &g);

/// K_a = X_a prod_{b in N(a)} Z_b for every vertex, in vertex order.
std::vector<PauliString> stabilizer_generators(const Graph &g);

inline constexpr int max_statevector_qubits = 16;

/// Amplitudes of |G> = prod CZ_ab |+>^n, qubit 0 most significant.
ComplexVector ideal_statevector(const Graph &g);

inline constexpr int max_rdm_qubits = 5;

/// Exact reduced state of |G> on `subset` (in the listed order), assembled
/// from the stabilizer-group elements supported inside the subset.
DensityMatrix reduced_density_matrix(const Graph &g, std::span<const int> subset);

/// Stabilizer-group elements of |G> supported inside `subset`, restricted to it.
std::vector<PauliString> supported_stabilizers(const Graph &g, std::span<const int> subset);

}  // namespace entverify

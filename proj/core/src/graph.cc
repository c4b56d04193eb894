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

#include "entverify/graph.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include <fmt/format.h>

#include "entverify/errors.h"

namespace entverify {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), adjacency_(n < 0 ? 0 : n) {
    if (n < 0) {
        throw UsageError("graph vertex count must be non-negative");
    }
    std::set<Edge> seen;
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n) {
            throw UsageError(fmt::format("edge ({}, {}) references a vertex outside [0, {})", a, b, n));
        }
        if (a == b) {
            throw UsageError(fmt::format("self-loop on vertex {}", a));
        }
        Edge e = std::minmax(a, b);
        if (!seen.insert(e).second) {
            throw UsageError(fmt::format("duplicate edge ({}, {})", e.first, e.second));
        }
        edges_.push_back(e);
        adjacency_[e.first].push_back(e.second);
        adjacency_[e.second].push_back(e.first);
    }
    for (auto &adj : adjacency_) {
        std::sort(adj.begin(), adj.end());
    }
}

bool Graph::has_edge(int a, int b) const {
    if (a < 0 || a >= n_) {
        return false;
    }
    const auto &adj = adjacency_[a];
    return std::binary_search(adj.begin(), adj.end(), b);
}

GraphStateSpec::GraphStateSpec(Graph g, std::vector<int> map) : graph(std::move(g)), qubit_map(std::move(map)) {
    if (static_cast<int>(qubit_map.size()) != graph.size()) {
        throw UsageError(fmt::format("qubit_map has {} entries for {} vertices", qubit_map.size(), graph.size()));
    }
    std::set<int> used;
    for (int q : qubit_map) {
        if (q < 0) {
            throw UsageError(fmt::format("negative physical qubit label {}", q));
        }
        if (!used.insert(q).second) {
            throw UsageError(fmt::format("qubit_map is not injective: qubit {} used twice", q));
        }
    }
}

GraphStateSpec::GraphStateSpec(Graph g) : graph(std::move(g)) {
    qubit_map.resize(graph.size());
    std::iota(qubit_map.begin(), qubit_map.end(), 0);
}

int GraphStateSpec::max_qubit() const {
    return qubit_map.empty() ? -1 : *std::max_element(qubit_map.begin(), qubit_map.end());
}

Graph ring_graph(int n) {
    if (n < 4 || n % 2 != 0) {
        throw UsageError(fmt::format("ring size must be even and at least 4, got {}", n));
    }
    std::vector<Edge> edges;
    edges.reserve(n);
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
    }
    return Graph(n, std::move(edges));
}

GraphStateSpec default_ring_spec(int n) {
    Graph g = ring_graph(n);
    if (n > 16) {
        throw UsageError(fmt::format("no default placement for a {}-ring on a 16-qubit device", n));
    }
    int first = n == 16 ? 0 : 9 - n / 2;
    std::vector<int> map(n);
    std::iota(map.begin(), map.end(), first);
    return GraphStateSpec(std::move(g), std::move(map));
}

bool is_ring(const Graph &g) {
    int n = g.size();
    if (n < 3 || static_cast<int>(g.edges().size()) != n) {
        return false;
    }
    for (int i = 0; i < n; ++i) {
        if (!g.has_edge(i, (i + 1) % n)) {
            return false;
        }
    }
    return true;
}

std::vector<PauliString> stabilizer_generators(const Graph &g) {
    std::vector<PauliString> gens;
    gens.reserve(g.size());
    for (int a = 0; a < g.size(); ++a) {
        PauliString k(static_cast<std::size_t>(g.size()));
        k.set(a, Pauli::X);
        for (int b : g.neighbors(a)) {
            k.set(b, Pauli::Z);
        }
        gens.push_back(std::move(k));
    }
    return gens;
}

ComplexVector ideal_statevector(const Graph &g) {
    int n = g.size();
    if (n > max_statevector_qubits) {
        throw CapacityError(fmt::format("{}-qubit statevector exceeds {} qubits", n, max_statevector_qubits));
    }
    // CZ on |+>^n only attaches the sign (-1)^{#edges with both endpoints 1}.
    Eigen::Index dim = Eigen::Index{1} << n;
    double amp = std::pow(2.0, -0.5 * n);
    ComplexVector psi(dim);
    for (Eigen::Index x = 0; x < dim; ++x) {
        int parity = 0;
        for (auto [a, b] : g.edges()) {
            parity ^= static_cast<int>(((x >> (n - 1 - a)) & (x >> (n - 1 - b))) & 1);
        }
        psi(x) = parity ? -amp : amp;
    }
    return psi;
}

std::vector<PauliString> supported_stabilizers(const Graph &g, std::span<const int> subset) {
    int n = g.size();
    auto k = static_cast<int>(subset.size());
    if (k > max_rdm_qubits) {
        throw CapacityError(fmt::format("reduced state on {} qubits exceeds {} qubits", k, max_rdm_qubits));
    }
    std::vector<bool> inside(n, false);
    for (int v : subset) {
        if (v < 0 || v >= n) {
            throw UsageError(fmt::format("vertex {} outside graph of size {}", v, n));
        }
        if (inside[v]) {
            throw UsageError(fmt::format("vertex {} repeated in subset", v));
        }
        inside[v] = true;
    }

    // A product of generators over a vertex set T has X support exactly T, so
    // only T within the subset can qualify; the Z support must also stay inside.
    std::vector<PauliString> gens = stabilizer_generators(g);
    std::vector<PauliString> out;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        PauliString prod(static_cast<std::size_t>(n));
        for (int j = 0; j < k; ++j) {
            if ((mask >> j) & 1) {
                prod = prod * gens[subset[j]];
            }
        }
        bool contained = true;
        for (int v = 0; v < n && contained; ++v) {
            contained = inside[v] || prod[v] == Pauli::I;
        }
        if (contained) {
            out.push_back(prod.restricted(subset));
        }
    }
    return out;
}

DensityMatrix reduced_density_matrix(const Graph &g, std::span<const int> subset) {
    std::vector<PauliString> elems = supported_stabilizers(g, subset);
    auto k = static_cast<int>(subset.size());
    Eigen::Index dim = Eigen::Index{1} << k;
    ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
    for (const auto &p : elems) {
        rho += pauli_to_matrix(p);
    }
    rho /= static_cast<double>(dim);
    return DensityMatrix(std::move(rho));
}

}  // namespace entverify

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

#include "entverify/entanglement.h"

#include <algorithm>

#include <Eigen/Eigenvalues>

#include <fmt/format.h>

#include "entverify/errors.h"
#include "entverify/tolerances.h"

namespace entverify {

ComplexMatrix partial_transpose(const ComplexMatrix &m, std::span<const int> positions) {
    int k = qubits_for_dimension(m.rows());
    if (m.cols() != m.rows()) {
        throw UsageError("partial transpose needs a square matrix");
    }
    Eigen::Index mask = 0;
    for (int p : positions) {
        if (p < 0 || p >= k) {
            throw UsageError(fmt::format("partial transpose position {} outside {} qubits", p, k));
        }
        mask |= Eigen::Index{1} << (k - 1 - p);
    }
    ComplexMatrix out(m.rows(), m.cols());
    for (Eigen::Index a = 0; a < m.rows(); ++a) {
        for (Eigen::Index b = 0; b < m.cols(); ++b) {
            Eigen::Index a2 = (a & ~mask) | (b & mask);
            Eigen::Index b2 = (b & ~mask) | (a & mask);
            out(a2, b2) = m(a, b);
        }
    }
    return out;
}

double negativity(const DensityMatrix &rho, std::span<const int> positions) {
    ComplexMatrix pt = partial_transpose(rho.matrix(), positions);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(pt, Eigen::EigenvaluesOnly);
    double sum = 0;
    for (double v : solver.eigenvalues()) {
        if (v < -Tolerances::negativity_dust) {
            sum -= v;
        }
    }
    return sum;
}

DensityMatrix apply_filters(const DensityMatrix &rho, std::span<const LocalFilter> filters,
                            std::span<const int> trace_out) {
    int k = rho.num_qubits();
    std::vector<Eigen::Matrix2cd> ops(k, Eigen::Matrix2cd::Identity());
    std::vector<bool> filtered(k, false);
    for (const auto &f : filters) {
        if (f.qubit < 0 || f.qubit >= k) {
            throw UsageError(fmt::format("filter on qubit {} outside {} qubits", f.qubit, k));
        }
        if (filtered[f.qubit]) {
            throw UsageError(fmt::format("two filters on qubit {}", f.qubit));
        }
        filtered[f.qubit] = true;
        ops[f.qubit] = filter_matrix(f);
    }
    std::vector<bool> traced(k, false);
    for (int q : trace_out) {
        if (q < 0 || q >= k || traced[q]) {
            throw UsageError(fmt::format("invalid trace-out qubit {}", q));
        }
        traced[q] = true;
    }
    ComplexMatrix o = ComplexMatrix::Identity(1, 1);
    for (const auto &op : ops) {
        o = kron(o, op);
    }
    ComplexMatrix out = o * rho.matrix() * o.adjoint();
    double tr = out.trace().real();
    if (tr < Tolerances::annihilation) {
        throw AnnihilationError(fmt::format("filters leave trace {:.3g}", tr));
    }
    std::vector<int> keep;
    for (int q = 0; q < k; ++q) {
        if (!traced[q]) {
            keep.push_back(q);
        }
    }
    ComplexMatrix reduced = partial_trace(out, keep) / tr;
    return DensityMatrix((reduced + reduced.adjoint()) / 2);
}

std::string_view protocol_name(Protocol p) {
    switch (p) {
        case Protocol::NearestNeighbor:
            return "nn";
        case Protocol::Distance2:
            return "dist2";
        case Protocol::Distance3:
            return "dist3";
    }
    return "?";
}

Protocol protocol_from_name(std::string_view name) {
    for (Protocol p : {Protocol::NearestNeighbor, Protocol::Distance2, Protocol::Distance3}) {
        if (protocol_name(p) == name) {
            return p;
        }
    }
    throw UsageError(fmt::format("unknown protocol '{}'", name));
}

namespace {

void check_chain(const DensityMatrix &rho4) {
    if (rho4.num_qubits() != 4) {
        throw UsageError(fmt::format("localization protocols act on 4-qubit chains, got {} qubits", rho4.num_qubits()));
    }
}

double filtered_pair_negativity(const DensityMatrix &rho4, std::initializer_list<LocalFilter> filters,
                                std::initializer_list<int> traced) {
    check_chain(rho4);
    std::vector<LocalFilter> f(filters);
    std::vector<int> t(traced);
    auto pair = apply_filters(rho4, f, t);
    int cut[] = {0};
    return negativity(pair, cut);
}

}  // namespace

double nn_filter_negativity(const DensityMatrix &rho4) {
    return filtered_pair_negativity(rho4, {{0, FilterKind::ZPlus}, {3, FilterKind::ZPlus}}, {0, 3});
}

double dist2_negativity(const DensityMatrix &rho4) {
    return filtered_pair_negativity(rho4, {{1, FilterKind::XPlus}, {3, FilterKind::ZPlus}}, {1, 3});
}

double dist3_negativity(const DensityMatrix &rho4) {
    return filtered_pair_negativity(rho4, {{1, FilterKind::XPlus}, {2, FilterKind::XPlus}}, {1, 2});
}

double protocol_negativity(Protocol p, const DensityMatrix &rho4) {
    switch (p) {
        case Protocol::NearestNeighbor:
            return nn_filter_negativity(rho4);
        case Protocol::Distance2:
            return dist2_negativity(rho4);
        case Protocol::Distance3:
            return dist3_negativity(rho4);
    }
    throw UsageError("unknown protocol");
}

std::pair<int, int> protocol_pair(Protocol p) {
    switch (p) {
        case Protocol::NearestNeighbor:
            return {1, 2};
        case Protocol::Distance2:
            return {0, 2};
        case Protocol::Distance3:
            return {0, 3};
    }
    throw UsageError("unknown protocol");
}

FidelityBound fidelity_upper_bound(std::span<const ReconstructedState> chains, const GraphStateSpec &spec) {
    if (chains.empty()) {
        throw UsageError("fidelity bound needs at least one reconstruction");
    }
    FidelityBound out;
    for (std::size_t c = 0; c < chains.size(); ++c) {
        std::vector<int> vertices;
        for (int q : chains[c].subsystem) {
            auto it = std::find(spec.qubit_map.begin(), spec.qubit_map.end(), q);
            if (it == spec.qubit_map.end()) {
                throw UsageError(fmt::format("reconstructed qubit {} carries no graph vertex", q));
            }
            vertices.push_back(static_cast<int>(it - spec.qubit_map.begin()));
        }
        auto ideal = reduced_density_matrix(spec.graph, vertices);
        if (ideal.num_qubits() != chains[c].rho.num_qubits()) {
            throw UsageError("reconstruction width differs from its subsystem");
        }
        double f = fidelity(chains[c].rho.matrix(), ideal.matrix());
        out.per_chain.push_back(f);
        if (c == 0 || f < out.bound) {
            out.bound = f;
            out.weakest = c;
        }
    }
    return out;
}

}  // namespace entverify

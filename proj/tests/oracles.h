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

// Independent reference implementations used to check the library. They
// favor directness over speed and share no code paths with it.

#include <cstdint>
#include <random>
#include <vector>

#include "entverify/circuit.h"
#include "entverify/graph.h"
#include "entverify/operators.h"
#include "entverify/pauli.h"

namespace oracle {

using entverify::Complex;
using entverify::ComplexMatrix;
using entverify::ComplexVector;

/// Single-qubit Pauli matrix for I, X, Y or Z.
Eigen::Matrix2cd pauli2(entverify::Pauli p);

/// Kronecker product of 2x2 Pauli matrices times the string's phase.
ComplexMatrix dense_pauli(const entverify::PauliString &p);

/// Partial trace by explicit index sums.
ComplexMatrix dense_partial_trace(const ComplexMatrix &m, const std::vector<int> &keep);

/// Partial transpose by reshaping into per-qubit indices.
ComplexMatrix dense_partial_transpose(const ComplexMatrix &m, const std::vector<int> &positions);

/// Full unitary of a unitary circuit on n <= 8 qubits, qubit 0 most significant.
ComplexMatrix dense_unitary(const entverify::Circuit &c);

/// |G> built by applying dense CZ matrices to |+>^n.
ComplexVector dense_graph_state(const entverify::Graph &g);

/// Euclidean projection of v onto the probability simplex by bisection on
/// the shift tau with sum(max(v - tau, 0)) = 1.
Eigen::VectorXd simplex_projection(const Eigen::VectorXd &v);

/// Sum of |negative eigenvalues| of the dense partial transpose.
double dense_negativity(const ComplexMatrix &rho, const std::vector<int> &positions);

/// Random generators for property tests.
ComplexMatrix random_hermitian(int dim, std::mt19937_64 &rng);
ComplexMatrix random_density_matrix(int qubits, std::mt19937_64 &rng, int rank = 0);
Eigen::Matrix2cd random_unitary2(std::mt19937_64 &rng);
ComplexVector random_qubit_state(std::mt19937_64 &rng);
entverify::Circuit random_clifford_circuit(int n, int gates, std::mt19937_64 &rng);

/// Total variation distance between two outcome histograms.
double tvd(const std::vector<std::pair<std::uint64_t, double>> &a,
           const std::vector<std::pair<std::uint64_t, double>> &b);

}  // namespace oracle

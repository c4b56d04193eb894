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

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace entverify {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Number of qubits k such that dim == 2^k; throws UsageError otherwise.
int qubits_for_dimension(Eigen::Index dim);

bool is_hermitian(const ComplexMatrix &m, double tol);

/// Largest entrywise |m - m^dagger|.
double hermiticity_defect(const ComplexMatrix &m);

/// Dense density operator on k <= 6 qubits. Qubit 0 is the most significant
/// tensor factor (kron order, leftmost in text). Construction checks
/// squareness, power-of-two dimension and Hermiticity; unit trace and
/// positivity are properties of particular producers, not of the type.
class DensityMatrix {
   public:
    explicit DensityMatrix(ComplexMatrix m);

    static DensityMatrix maximally_mixed(int qubits);
    static DensityMatrix from_pure(const ComplexVector &psi);

    const ComplexMatrix &matrix() const noexcept {
        return m_;
    }
    int num_qubits() const noexcept {
        return qubits_;
    }
    Eigen::Index dim() const noexcept {
        return m_.rows();
    }
    double trace() const {
        return m_.trace().real();
    }
    /// Eigenvalues in ascending order.
    Eigen::VectorXd eigenvalues() const;
    double min_eigenvalue() const;

   private:
    ComplexMatrix m_;
    int qubits_;
};

/// Partial trace keeping the qubits in `keep` (positions in m's tensor order);
/// the result is ordered as listed in `keep`.
ComplexMatrix partial_trace(const ComplexMatrix &m, std::span<const int> keep);

/// Reorders tensor factors: factor j of the result is factor perm[j] of m.
ComplexMatrix permute_qubits(const ComplexMatrix &m, std::span<const int> perm);

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Trace distance 1/2 ||a - b||_1 between Hermitian operators.
double trace_distance(const ComplexMatrix &a, const ComplexMatrix &b);

/// Uhlmann fidelity (tr sqrt(sqrt(a) b sqrt(a)))^2 of two PSD operators.
double fidelity(const ComplexMatrix &a, const ComplexMatrix &b);

}  // namespace entverify

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

#include "entverify/operators.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "entverify/errors.h"
#include "entverify/tolerances.h"

namespace entverify {

namespace {

constexpr int max_dense_qubits = 6;

Eigen::Index bit_position(int qubit, int total) {
    return total - 1 - qubit;
}

ComplexMatrix psd_sqrt(const ComplexMatrix &m) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m);
    Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

int qubits_for_dimension(Eigen::Index dim) {
    if (dim <= 0 || (dim & (dim - 1)) != 0) {
        throw UsageError(fmt::format("dimension {} is not a power of two", dim));
    }
    int k = 0;
    while ((Eigen::Index{1} << k) < dim) {
        ++k;
    }
    return k;
}

double hermiticity_defect(const ComplexMatrix &m) {
    if (m.rows() != m.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix &m, double tol) {
    return m.rows() == m.cols() && hermiticity_defect(m) <= tol;
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) {
        throw UsageError("density matrix must be square");
    }
    qubits_ = qubits_for_dimension(m_.rows());
    if (qubits_ > max_dense_qubits) {
        throw CapacityError(fmt::format("density matrix on {} qubits exceeds dense bound {}", qubits_, max_dense_qubits));
    }
    double defect = hermiticity_defect(m_);
    if (defect > Tolerances::hermitian) {
        throw UsageError(fmt::format("density matrix is not Hermitian (defect {:.3g})", defect));
    }
}

DensityMatrix DensityMatrix::maximally_mixed(int qubits) {
    Eigen::Index d = Eigen::Index{1} << qubits;
    return DensityMatrix(ComplexMatrix::Identity(d, d) / static_cast<double>(d));
}

DensityMatrix DensityMatrix::from_pure(const ComplexVector &psi) {
    ComplexVector v = psi / psi.norm();
    return DensityMatrix(v * v.adjoint());
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m_, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

double DensityMatrix::min_eigenvalue() const {
    return eigenvalues()(0);
}

ComplexMatrix partial_trace(const ComplexMatrix &m, std::span<const int> keep) {
    int k = qubits_for_dimension(m.rows());
    std::vector<bool> kept(k, false);
    for (int q : keep) {
        if (q < 0 || q >= k || kept[q]) {
            throw UsageError(fmt::format("invalid or repeated qubit {} in partial trace over {} qubits", q, k));
        }
        kept[q] = true;
    }
    std::vector<int> traced;
    for (int q = 0; q < k; ++q) {
        if (!kept[q]) {
            traced.push_back(q);
        }
    }

    auto r = static_cast<int>(keep.size());
    auto t = static_cast<int>(traced.size());
    Eigen::Index out_dim = Eigen::Index{1} << r;
    Eigen::Index env_dim = Eigen::Index{1} << t;

    // Precompute full-register offsets for kept and traced index patterns.
    std::vector<Eigen::Index> kept_offset(out_dim, 0);
    for (Eigen::Index a = 0; a < out_dim; ++a) {
        for (int j = 0; j < r; ++j) {
            if ((a >> bit_position(j, r)) & 1) {
                kept_offset[a] |= Eigen::Index{1} << bit_position(keep[j], k);
            }
        }
    }
    std::vector<Eigen::Index> env_offset(env_dim, 0);
    for (Eigen::Index e = 0; e < env_dim; ++e) {
        for (int j = 0; j < t; ++j) {
            if ((e >> bit_position(j, t)) & 1) {
                env_offset[e] |= Eigen::Index{1} << bit_position(traced[j], k);
            }
        }
    }

    ComplexMatrix out = ComplexMatrix::Zero(out_dim, out_dim);
    for (Eigen::Index a = 0; a < out_dim; ++a) {
        for (Eigen::Index b = 0; b < out_dim; ++b) {
            Complex s = 0;
            for (Eigen::Index e = 0; e < env_dim; ++e) {
                s += m(kept_offset[a] | env_offset[e], kept_offset[b] | env_offset[e]);
            }
            out(a, b) = s;
        }
    }
    return out;
}

ComplexMatrix permute_qubits(const ComplexMatrix &m, std::span<const int> perm) {
    int k = qubits_for_dimension(m.rows());
    if (static_cast<int>(perm.size()) != k) {
        throw UsageError("permutation length must equal the qubit count");
    }
    std::vector<bool> seen(k, false);
    for (int q : perm) {
        if (q < 0 || q >= k || seen[q]) {
            throw UsageError("argument is not a permutation");
        }
        seen[q] = true;
    }
    Eigen::Index d = m.rows();
    std::vector<Eigen::Index> source(d, 0);
    for (Eigen::Index a = 0; a < d; ++a) {
        for (int j = 0; j < k; ++j) {
            if ((a >> bit_position(j, k)) & 1) {
                source[a] |= Eigen::Index{1} << bit_position(perm[j], k);
            }
        }
    }
    ComplexMatrix out(d, d);
    for (Eigen::Index a = 0; a < d; ++a) {
        for (Eigen::Index b = 0; b < d; ++b) {
            out(a, b) = m(source[a], source[b]);
        }
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

double trace_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix diff = a - b;
    ComplexMatrix h = (diff + diff.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double fidelity(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw UsageError("fidelity operands differ in dimension");
    }
    ComplexMatrix root = psd_sqrt((a + a.adjoint()) / 2.0);
    ComplexMatrix inner = root * ((b + b.adjoint()) / 2.0) * root;
    inner = (inner + inner.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(inner, Eigen::EigenvaluesOnly);
    // Rounding noise in zero eigenvalues would otherwise contribute
    // sqrt(eps)-sized terms.
    const Eigen::VectorXd &ev = es.eigenvalues();
    double floor = 64 * std::numeric_limits<double>::epsilon() * std::max(ev.maxCoeff(), 0.0);
    double s = 0;
    for (double v : ev) {
        if (v > floor) {
            s += std::sqrt(v);
        }
    }
    return s * s;
}

}  // namespace entverify

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

#include "entverify/statevector.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "entverify/errors.h"
#include "entverify/rng.h"

namespace entverify {

namespace {

void check_width(int n) {
    if (n < 0) {
        throw UsageError("negative qubit count");
    }
    if (n > Statevector::max_qubits) {
        throw CapacityError(fmt::format("{}-qubit statevector exceeds {} qubits", n, Statevector::max_qubits));
    }
}

}  // namespace

Statevector::Statevector(int n) : Statevector(n, 0) {
}

Statevector::Statevector(int n, std::uint64_t index) : n_(n) {
    check_width(n);
    Eigen::Index dim = Eigen::Index{1} << n;
    if (index >= static_cast<std::uint64_t>(dim)) {
        throw UsageError(fmt::format("basis index {} outside {}-qubit register", index, n));
    }
    amps_ = ComplexVector::Zero(dim);
    amps_(static_cast<Eigen::Index>(index)) = 1.0;
}

void Statevector::apply(const Gate &g) {
    for (int k = 0; k < g.arity(); ++k) {
        if (g.qubits[k] < 0 || g.qubits[k] >= n_) {
            throw UsageError(fmt::format("gate on qubit {} outside {}-qubit statevector", g.qubits[k], n_));
        }
    }
    Eigen::Index dim = amps_.size();
    Eigen::Index m0 = Eigen::Index{1} << (n_ - 1 - g.qubits[0]);
    Eigen::Index m1 = g.arity() == 2 ? Eigen::Index{1} << (n_ - 1 - g.qubits[1]) : 0;
    const Complex i_unit(0, 1);
    switch (g.kind) {
        case GateKind::H: {
            const double r = 1.0 / std::sqrt(2.0);
            for (Eigen::Index x = 0; x < dim; ++x) {
                if (!(x & m0)) {
                    Complex a = amps_(x);
                    Complex b = amps_(x | m0);
                    amps_(x) = r * (a + b);
                    amps_(x | m0) = r * (a - b);
                }
            }
            break;
        }
        case GateKind::X:
            for (Eigen::Index x = 0; x < dim; ++x) {
                if (!(x & m0)) {
                    std::swap(amps_(x), amps_(x | m0));
                }
            }
            break;
        case GateKind::Z:
        case GateKind::S:
        case GateKind::Sdg: {
            Complex phase = g.kind == GateKind::Z ? Complex(-1, 0) : g.kind == GateKind::S ? i_unit : -i_unit;
            for (Eigen::Index x = 0; x < dim; ++x) {
                if (x & m0) {
                    amps_(x) *= phase;
                }
            }
            break;
        }
        case GateKind::CZ:
            for (Eigen::Index x = 0; x < dim; ++x) {
                if ((x & m0) && (x & m1)) {
                    amps_(x) = -amps_(x);
                }
            }
            break;
        case GateKind::CNOT:
            for (Eigen::Index x = 0; x < dim; ++x) {
                if ((x & m0) && !(x & m1)) {
                    std::swap(amps_(x), amps_(x | m1));
                }
            }
            break;
        case GateKind::MeasureZ:
            throw UsageError("statevector simulation supports unitary gates only");
    }
}

void Statevector::apply(const Circuit &c) {
    if (c.n_qubits != n_) {
        throw UsageError(fmt::format("{}-qubit circuit applied to {}-qubit statevector", c.n_qubits, n_));
    }
    for (const Gate &g : c.gates) {
        apply(g);
    }
}

Eigen::VectorXd Statevector::probabilities() const {
    return amps_.cwiseAbs2();
}

void append_basis_change(Circuit &c, int q, Pauli label) {
    switch (label) {
        case Pauli::X:
            c.append(Gate::single(GateKind::H, q));
            break;
        case Pauli::Y:
            c.append(Gate::single(GateKind::Sdg, q));
            c.append(Gate::single(GateKind::H, q));
            break;
        case Pauli::Z:
            break;
        case Pauli::I:
            throw UsageError(fmt::format("qubit {} has no measurement basis", q));
    }
}

Counts statevector_run(const Circuit &c, std::span<const Pauli> basis, std::uint64_t shots, std::uint64_t seed) {
    check_width(c.n_qubits);
    if (static_cast<int>(basis.size()) != c.n_qubits) {
        throw UsageError(fmt::format("{} basis labels for {} qubits", basis.size(), c.n_qubits));
    }
    Circuit full = c;
    for (int q = 0; q < c.n_qubits; ++q) {
        append_basis_change(full, q, basis[q]);
    }
    Statevector sv(c.n_qubits);
    sv.apply(full);

    Eigen::VectorXd p = sv.probabilities();
    std::vector<double> cdf(static_cast<std::size_t>(p.size()));
    double acc = 0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        acc += p(i);
        cdf[static_cast<std::size_t>(i)] = acc;
    }

    int n = c.n_qubits;
    std::vector<std::uint64_t> samples(shots);
    for (std::uint64_t s = 0; s < shots; ++s) {
        SplitMix64 rng(derive_seed(seed, 0, s));
        double u = rng.uniform() * acc;
        auto idx = static_cast<std::uint64_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        idx = std::min<std::uint64_t>(idx, cdf.size() - 1);
        // Reverse into the Counts convention (bit q = qubit q).
        std::uint64_t key = 0;
        for (int q = 0; q < n; ++q) {
            key |= ((idx >> (n - 1 - q)) & 1) << q;
        }
        samples[s] = key;
    }
    return Counts::from_samples(std::move(samples));
}

}  // namespace entverify

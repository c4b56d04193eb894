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

#include <cstdint>
#include <span>

#include "entverify/circuit.h"
#include "entverify/counts.h"
#include "entverify/operators.h"
#include "entverify/pauli.h"

namespace entverify {

/// Dense pure-state simulator used as the reference oracle. Amplitude index
/// bit (n - 1 - q) holds qubit q.
class Statevector {
   public:
    static constexpr int max_qubits = 16;

    /// |0...0> on n qubits.
    explicit Statevector(int n);
    /// Computational basis state |index>.
    Statevector(int n, std::uint64_t index);

    int num_qubits() const noexcept {
        return n_;
    }
    const ComplexVector &amplitudes() const noexcept {
        return amps_;
    }

    /// Applies a unitary gate; MeasureZ throws UsageError.
    void apply(const Gate &g);
    void apply(const Circuit &c);

    /// Born-rule probabilities indexed like the amplitudes.
    Eigen::VectorXd probabilities() const;

   private:
    int n_;
    ComplexVector amps_;
};

/// Gates rotating the measurement basis `label` on qubit q onto Z:
/// X -> H, Y -> Sdg then H, Z -> nothing.
void append_basis_change(Circuit &c, int q, Pauli label);

/// Exact Born-rule sampling of c followed by measurement of every qubit in
/// the basis given per qubit. Noiseless; keys follow Counts (bit q = qubit q).
Counts statevector_run(const Circuit &c, std::span<const Pauli> basis, std::uint64_t shots, std::uint64_t seed);

}  // namespace entverify

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
#include <vector>

#include "entverify/circuit.h"
#include "entverify/pauli.h"
#include "entverify/rng.h"

namespace entverify {

/// Aaronson-Gottesman stabilizer tableau on up to 64 qubits. Rows 0..n-1 are
/// destabilizers, rows n..2n-1 stabilizers. In the bit masks, bit q is qubit q.
class StabilizerTableau {
   public:
    static constexpr int max_qubits = 64;

    /// |0...0>.
    explicit StabilizerTableau(int n);

    int num_qubits() const noexcept {
        return n_;
    }

    /// Conjugates by a Clifford gate; MeasureZ throws UsageError.
    void apply(const Gate &g);
    void apply(const Circuit &c);
    /// Applies the Pauli with the given X/Z masks to the state.
    void apply_pauli(std::uint64_t x, std::uint64_t z);

    /// Projective Z measurement of qubit q.
    int measure_z(int q, SplitMix64 &rng);
    /// True when Z_q (or -Z_q) belongs to the stabilizer group.
    bool is_deterministic(int q) const;

    PauliString stabilizer(int i) const;
    PauliString destabilizer(int i) const;
    std::vector<PauliString> stabilizers() const;

    std::uint64_t stabilizer_x(int i) const {
        return rows_[n_ + i].x;
    }

    /// Symplectic structure check: stabilizers commute pairwise, destabilizers
    /// commute pairwise, and destabilizer i anticommutes exactly with
    /// stabilizer i.
    bool is_valid() const;

   private:
    struct Row {
        std::uint64_t x = 0;
        std::uint64_t z = 0;
        bool sign = false;
    };

    void rowsum(Row &h, const Row &i) const;
    PauliString row_to_pauli(const Row &r) const;

    int n_;
    std::vector<Row> rows_;
};

/// True iff `candidate` (Hermitian, n qubits) is in the group generated by
/// `generators`, sign included.
bool in_stabilizer_group(const std::vector<PauliString> &generators, const PauliString &candidate);

/// True iff both lists generate the same signed stabilizer group.
bool same_stabilizer_group(const std::vector<PauliString> &a, const std::vector<PauliString> &b);

}  // namespace entverify

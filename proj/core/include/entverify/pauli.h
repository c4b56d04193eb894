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
#include <string>
#include <string_view>
#include <vector>

#include "entverify/operators.h"

namespace entverify {

/// Single-qubit Pauli in x/z bit encoding: bit 0 = X part, bit 1 = Z part.
enum class Pauli : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char pauli_char(Pauli p) noexcept;
Pauli pauli_from_char(char c);

inline bool has_x(Pauli p) noexcept {
    return (static_cast<std::uint8_t>(p) & 1) != 0;
}
inline bool has_z(Pauli p) noexcept {
    return (static_cast<std::uint8_t>(p) & 2) != 0;
}

/// Signed n-qubit Pauli operator i^phase * P_0 (x) P_1 (x) ... with the phase
/// kept as an exact exponent of i.
class PauliString {
   public:
    PauliString() = default;
    /// Identity on n qubits.
    explicit PauliString(std::size_t n);
    explicit PauliString(std::vector<Pauli> ops, int phase_exponent = 0);

    /// Parses the text form: optional "+", "-", "i", "+i", "-i" prefix followed
    /// by characters from "IXYZ" (also "_" for identity), qubit 0 leftmost.
    static PauliString from_str(std::string_view text);
    std::string str() const;

    std::size_t size() const noexcept {
        return ops_.size();
    }
    Pauli operator[](std::size_t q) const {
        return ops_[q];
    }
    std::span<const Pauli> ops() const noexcept {
        return ops_;
    }
    /// Exponent e in i^e, always in [0, 4).
    int phase_exponent() const noexcept {
        return phase_;
    }
    Complex phase() const noexcept;
    bool is_hermitian() const noexcept {
        return phase_ % 2 == 0;
    }
    bool is_identity() const noexcept;
    std::size_t weight() const noexcept;

    PauliString with_phase_exponent(int e) const;
    void set(std::size_t q, Pauli p) {
        ops_[q] = p;
    }
    /// Restriction to the listed qubits, in the listed order. Phase is kept.
    PauliString restricted(std::span<const int> qubits) const;

    bool commutes_with(const PauliString &other) const;

    friend bool operator==(const PauliString &, const PauliString &) = default;

   private:
    std::vector<Pauli> ops_;
    std::uint8_t phase_ = 0;
};

/// Phase-tracked product a * b. Throws UsageError on length mismatch.
PauliString pauli_multiply(const PauliString &a, const PauliString &b);

inline PauliString operator*(const PauliString &a, const PauliString &b) {
    return pauli_multiply(a, b);
}

/// Largest PauliString that pauli_to_matrix will expand densely.
inline constexpr std::size_t max_dense_pauli_qubits = 6;

/// phase * (sigma_0 (x) sigma_1 (x) ...). Throws CapacityError beyond 6 qubits.
ComplexMatrix pauli_to_matrix(const PauliString &p);

/// m += coeff * matrix(p), touching only the 2^n nonzeros of p.
void accumulate_pauli(ComplexMatrix &m, const PauliString &p, Complex coeff);

/// tr(rho P) for Hermitian P. Throws UsageError for non-Hermitian P or a
/// dimension mismatch.
double expectation(const DensityMatrix &rho, const PauliString &p);

enum class FilterKind : std::uint8_t {
    ZPlus,   // (Z + I) / 2
    ZMinus,  // (I - Z) / 2
    XPlus,   // (X + I) / 2
};

/// Rank-one local projector acting on one qubit of a small density matrix.
struct LocalFilter {
    int qubit;
    FilterKind kind;
};

Eigen::Matrix2cd filter_matrix(FilterKind kind);
inline Eigen::Matrix2cd filter_matrix(const LocalFilter &f) {
    return filter_matrix(f.kind);
}

}  // namespace entverify

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

#include "entverify/pauli.h"

#include <fmt/format.h>

#include "entverify/errors.h"
#include "entverify/tolerances.h"

namespace entverify {

namespace {

// Exponent of i picked up by the single-qubit product a * b.
int product_phase(Pauli a, Pauli b) {
    if (a == Pauli::I || b == Pauli::I || a == b) {
        return 0;
    }
    // Cyclic order X -> Y -> Z gives +i.
    auto cyc = [](Pauli p) {
        switch (p) {
            case Pauli::X:
                return 0;
            case Pauli::Y:
                return 1;
            default:
                return 2;
        }
    };
    return (cyc(b) - cyc(a) + 3) % 3 == 1 ? 1 : 3;
}

}  // namespace

char pauli_char(Pauli p) noexcept {
    switch (p) {
        case Pauli::X:
            return 'X';
        case Pauli::Y:
            return 'Y';
        case Pauli::Z:
            return 'Z';
        default:
            return 'I';
    }
}

Pauli pauli_from_char(char c) {
    switch (c) {
        case 'I':
        case '_':
            return Pauli::I;
        case 'X':
            return Pauli::X;
        case 'Y':
            return Pauli::Y;
        case 'Z':
            return Pauli::Z;
        default:
            throw UsageError(fmt::format("'{}' is not a Pauli label", c));
    }
}

PauliString::PauliString(std::size_t n) : ops_(n, Pauli::I) {
}

PauliString::PauliString(std::vector<Pauli> ops, int phase_exponent)
    : ops_(std::move(ops)), phase_(static_cast<std::uint8_t>(((phase_exponent % 4) + 4) % 4)) {
}

PauliString PauliString::from_str(std::string_view text) {
    int phase = 0;
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        phase = text[pos] == '-' ? 2 : 0;
        ++pos;
    }
    if (pos < text.size() && text[pos] == 'i') {
        phase += 1;
        ++pos;
    }
    std::vector<Pauli> ops;
    ops.reserve(text.size() - pos);
    for (; pos < text.size(); ++pos) {
        ops.push_back(pauli_from_char(text[pos]));
    }
    return PauliString(std::move(ops), phase);
}

std::string PauliString::str() const {
    static constexpr const char *prefix[4] = {"", "i", "-", "-i"};
    std::string out = prefix[phase_];
    for (Pauli p : ops_) {
        out.push_back(pauli_char(p));
    }
    return out;
}

Complex PauliString::phase() const noexcept {
    static constexpr Complex units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return units[phase_];
}

bool PauliString::is_identity() const noexcept {
    return weight() == 0;
}

std::size_t PauliString::weight() const noexcept {
    std::size_t w = 0;
    for (Pauli p : ops_) {
        w += p != Pauli::I;
    }
    return w;
}

PauliString PauliString::with_phase_exponent(int e) const {
    return PauliString(ops_, e);
}

PauliString PauliString::restricted(std::span<const int> qubits) const {
    std::vector<Pauli> ops;
    ops.reserve(qubits.size());
    for (int q : qubits) {
        if (q < 0 || static_cast<std::size_t>(q) >= ops_.size()) {
            throw UsageError(fmt::format("qubit {} out of range for {}-qubit Pauli string", q, ops_.size()));
        }
        ops.push_back(ops_[q]);
    }
    return PauliString(std::move(ops), phase_);
}

bool PauliString::commutes_with(const PauliString &other) const {
    if (other.size() != size()) {
        throw UsageError("commutation check on Pauli strings of different length");
    }
    int anti = 0;
    for (std::size_t q = 0; q < ops_.size(); ++q) {
        Pauli a = ops_[q];
        Pauli b = other.ops_[q];
        anti += a != Pauli::I && b != Pauli::I && a != b;
    }
    return anti % 2 == 0;
}

PauliString pauli_multiply(const PauliString &a, const PauliString &b) {
    if (a.size() != b.size()) {
        throw UsageError(fmt::format("cannot multiply Pauli strings of length {} and {}", a.size(), b.size()));
    }
    int phase = a.phase_exponent() + b.phase_exponent();
    std::vector<Pauli> ops(a.size());
    for (std::size_t q = 0; q < a.size(); ++q) {
        phase += product_phase(a[q], b[q]);
        ops[q] = static_cast<Pauli>(static_cast<std::uint8_t>(a[q]) ^ static_cast<std::uint8_t>(b[q]));
    }
    return PauliString(std::move(ops), phase);
}

void accumulate_pauli(ComplexMatrix &m, const PauliString &p, Complex coeff) {
    // Each tensor product of Paulis has one nonzero per column:
    // P|c> = i^{#Y} (-1)^{|c & z|} |c ^ x>.
    auto n = static_cast<int>(p.size());
    Eigen::Index dim = Eigen::Index{1} << n;
    if (m.rows() != dim || m.cols() != dim) {
        throw UsageError(fmt::format("{}-qubit Pauli string against a {}x{} matrix", n, m.rows(), m.cols()));
    }
    Eigen::Index xmask = 0;
    Eigen::Index zmask = 0;
    int ys = 0;
    for (int q = 0; q < n; ++q) {
        Eigen::Index bit = Eigen::Index{1} << (n - 1 - q);
        if (has_x(p[q])) {
            xmask |= bit;
        }
        if (has_z(p[q])) {
            zmask |= bit;
        }
        ys += p[q] == Pauli::Y;
    }
    static constexpr Complex units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    Complex base = coeff * units[(p.phase_exponent() + ys) % 4];
    for (Eigen::Index c = 0; c < dim; ++c) {
        bool odd = __builtin_popcountll(static_cast<unsigned long long>(c & zmask)) & 1;
        m(c ^ xmask, c) += odd ? -base : base;
    }
}

ComplexMatrix pauli_to_matrix(const PauliString &p) {
    if (p.size() > max_dense_pauli_qubits) {
        throw CapacityError(
            fmt::format("dense expansion of a {}-qubit Pauli string exceeds {} qubits", p.size(), max_dense_pauli_qubits));
    }
    Eigen::Index dim = Eigen::Index{1} << p.size();
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    accumulate_pauli(m, p, 1.0);
    return m;
}

double expectation(const DensityMatrix &rho, const PauliString &p) {
    if (!p.is_hermitian()) {
        throw UsageError(fmt::format("expectation of non-Hermitian Pauli string {}", p.str()));
    }
    if (static_cast<int>(p.size()) != rho.num_qubits()) {
        throw UsageError(
            fmt::format("{}-qubit Pauli string against {}-qubit density matrix", p.size(), rho.num_qubits()));
    }
    Complex v = (rho.matrix() * pauli_to_matrix(p)).trace();
    return v.real();
}

Eigen::Matrix2cd filter_matrix(FilterKind kind) {
    Eigen::Matrix2cd m;
    switch (kind) {
        case FilterKind::ZPlus:
            m << 1, 0, 0, 0;
            break;
        case FilterKind::ZMinus:
            m << 0, 0, 0, 1;
            break;
        case FilterKind::XPlus:
            m << 0.5, 0.5, 0.5, 0.5;
            break;
    }
    return m;
}

}  // namespace entverify

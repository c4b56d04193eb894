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

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace entverify {

enum class GateKind : std::uint8_t { H, S, Sdg, X, Z, CZ, CNOT, MeasureZ };

std::string_view gate_name(GateKind kind) noexcept;
GateKind gate_kind_from_name(std::string_view name);
int gate_arity(GateKind kind) noexcept;
bool is_clifford_unitary(GateKind kind) noexcept;

struct Gate {
    GateKind kind;
    // Second operand is -1 for single-qubit gates; CNOT is (control, target).
    std::array<int, 2> qubits{-1, -1};

    static Gate single(GateKind kind, int q);
    static Gate pair(GateKind kind, int a, int b);

    int arity() const noexcept {
        return gate_arity(kind);
    }
    bool acts_on(int q) const noexcept {
        return qubits[0] == q || qubits[1] == q;
    }
    bool shares_qubit(const Gate &other) const noexcept;

    friend bool operator==(const Gate &, const Gate &) = default;
};

struct Circuit {
    int n_qubits = 0;
    std::vector<Gate> gates;
    /// Optional partition of gate indices into parallel layers.
    std::vector<std::vector<std::size_t>> layers;

    Circuit() = default;
    explicit Circuit(int n) : n_qubits(n) {
    }

    /// Appends after checking operands against n_qubits.
    void append(const Gate &g);
    void h(int q) {
        append(Gate::single(GateKind::H, q));
    }
    void cz(int a, int b) {
        append(Gate::pair(GateKind::CZ, a, b));
    }
    void cnot(int c, int t) {
        append(Gate::pair(GateKind::CNOT, c, t));
    }

    std::size_t count(GateKind kind) const;
    std::size_t two_qubit_gate_count() const;
    bool is_unitary() const;
};

/// Length of the longest chain of two-qubit gates linked through shared
/// qubits, in gate order.
int two_qubit_depth(const Circuit &c);

/// Number of layers holding at least one two-qubit gate. Requires layers.
int two_qubit_layer_count(const Circuit &c);

/// True when layers cover every gate once, every layer touches disjoint
/// qubits, and non-commuting gates on a shared qubit keep their order.
bool layers_are_valid(const Circuit &c);

/// Whether two gates commute, judged qubit by qubit: on every shared qubit
/// both act diagonally (Z-type) or both act as X-type.
bool gates_commute(const Gate &a, const Gate &b) noexcept;

}  // namespace entverify

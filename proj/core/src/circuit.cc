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

#include "entverify/circuit.h"

#include <algorithm>

#include <fmt/format.h>

#include "entverify/errors.h"

namespace entverify {

std::string_view gate_name(GateKind kind) noexcept {
    switch (kind) {
        case GateKind::H:
            return "H";
        case GateKind::S:
            return "S";
        case GateKind::Sdg:
            return "Sdg";
        case GateKind::X:
            return "X";
        case GateKind::Z:
            return "Z";
        case GateKind::CZ:
            return "CZ";
        case GateKind::CNOT:
            return "CNOT";
        case GateKind::MeasureZ:
            return "MeasureZ";
    }
    return "?";
}

GateKind gate_kind_from_name(std::string_view name) {
    for (auto k : {GateKind::H, GateKind::S, GateKind::Sdg, GateKind::X, GateKind::Z, GateKind::CZ, GateKind::CNOT,
                   GateKind::MeasureZ}) {
        if (gate_name(k) == name) {
            return k;
        }
    }
    throw UsageError(fmt::format("unknown gate kind '{}'", name));
}

int gate_arity(GateKind kind) noexcept {
    return kind == GateKind::CZ || kind == GateKind::CNOT ? 2 : 1;
}

bool is_clifford_unitary(GateKind kind) noexcept {
    return kind != GateKind::MeasureZ;
}

Gate Gate::single(GateKind kind, int q) {
    if (gate_arity(kind) != 1) {
        throw UsageError(fmt::format("{} takes two qubits", gate_name(kind)));
    }
    if (q < 0) {
        throw UsageError(fmt::format("negative qubit index {}", q));
    }
    return Gate{kind, {q, -1}};
}

Gate Gate::pair(GateKind kind, int a, int b) {
    if (gate_arity(kind) != 2) {
        throw UsageError(fmt::format("{} takes one qubit", gate_name(kind)));
    }
    if (a < 0 || b < 0) {
        throw UsageError(fmt::format("negative qubit index in {}({}, {})", gate_name(kind), a, b));
    }
    if (a == b) {
        throw UsageError(fmt::format("{} operands must be distinct, got {} twice", gate_name(kind), a));
    }
    return Gate{kind, {a, b}};
}

bool Gate::shares_qubit(const Gate &other) const noexcept {
    for (int q : other.qubits) {
        if (q >= 0 && acts_on(q)) {
            return true;
        }
    }
    return false;
}

void Circuit::append(const Gate &g) {
    for (int i = 0; i < g.arity(); ++i) {
        if (g.qubits[i] < 0 || g.qubits[i] >= n_qubits) {
            throw UsageError(fmt::format("{} on qubit {} outside a {}-qubit circuit", gate_name(g.kind), g.qubits[i],
                                         n_qubits));
        }
    }
    if (g.arity() == 2 && g.qubits[0] == g.qubits[1]) {
        throw UsageError("two-qubit gate operands must be distinct");
    }
    gates.push_back(g);
}

std::size_t Circuit::count(GateKind kind) const {
    return static_cast<std::size_t>(std::count_if(gates.begin(), gates.end(), [&](const Gate &g) {
        return g.kind == kind;
    }));
}

std::size_t Circuit::two_qubit_gate_count() const {
    return count(GateKind::CZ) + count(GateKind::CNOT);
}

bool Circuit::is_unitary() const {
    return count(GateKind::MeasureZ) == 0;
}

int two_qubit_depth(const Circuit &c) {
    std::vector<int> depth(c.n_qubits, 0);
    int best = 0;
    for (const Gate &g : c.gates) {
        if (g.arity() != 2) {
            continue;
        }
        int d = std::max(depth[g.qubits[0]], depth[g.qubits[1]]) + 1;
        depth[g.qubits[0]] = depth[g.qubits[1]] = d;
        best = std::max(best, d);
    }
    return best;
}

int two_qubit_layer_count(const Circuit &c) {
    if (c.layers.empty() && !c.gates.empty()) {
        throw UsageError("circuit has not been scheduled");
    }
    int count = 0;
    for (const auto &layer : c.layers) {
        count += std::any_of(layer.begin(), layer.end(), [&](std::size_t i) {
            return c.gates[i].arity() == 2;
        });
    }
    return count;
}

namespace {

enum class Action { None, Diagonal, XType, Other };

Action action_on(const Gate &g, int q) {
    if (!g.acts_on(q)) {
        return Action::None;
    }
    switch (g.kind) {
        case GateKind::S:
        case GateKind::Sdg:
        case GateKind::Z:
        case GateKind::CZ:
        case GateKind::MeasureZ:
            return Action::Diagonal;
        case GateKind::X:
            return Action::XType;
        case GateKind::CNOT:
            return g.qubits[0] == q ? Action::Diagonal : Action::XType;
        default:
            return Action::Other;
    }
}

}  // namespace

bool gates_commute(const Gate &a, const Gate &b) noexcept {
    for (int q : a.qubits) {
        if (q < 0) {
            continue;
        }
        Action x = action_on(a, q);
        Action y = action_on(b, q);
        if (y == Action::None) {
            continue;
        }
        if (x == Action::Other || y == Action::Other || x != y) {
            return false;
        }
    }
    return true;
}

bool layers_are_valid(const Circuit &c) {
    std::vector<std::size_t> position(c.gates.size(), c.gates.size());
    std::vector<int> layer_of(c.gates.size(), -1);
    for (std::size_t l = 0; l < c.layers.size(); ++l) {
        std::vector<bool> busy(c.n_qubits, false);
        for (std::size_t i : c.layers[l]) {
            if (i >= c.gates.size() || layer_of[i] != -1) {
                return false;
            }
            layer_of[i] = static_cast<int>(l);
            for (int k = 0; k < c.gates[i].arity(); ++k) {
                int q = c.gates[i].qubits[k];
                if (busy[q]) {
                    return false;
                }
                busy[q] = true;
            }
        }
    }
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        if (layer_of[i] < 0) {
            return false;
        }
        for (std::size_t j = i + 1; j < c.gates.size(); ++j) {
            if (c.gates[i].shares_qubit(c.gates[j]) && !gates_commute(c.gates[i], c.gates[j]) &&
                layer_of[j] <= layer_of[i]) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace entverify

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

#include "entverify/compiler.h"

#include <algorithm>
#include <map>
#include <numeric>

#include <fmt/format.h>

#include "entverify/errors.h"
#include "entverify/statevector.h"
#include "entverify/tolerances.h"

namespace entverify {

Circuit synthesize(const GraphStateSpec &spec, int n_qubits) {
    Circuit c(std::max(n_qubits, spec.max_qubit() + 1));
    for (int v = 0; v < spec.graph.size(); ++v) {
        c.h(spec.qubit(v));
    }
    for (auto [a, b] : spec.graph.edges()) {
        c.cz(spec.qubit(a), spec.qubit(b));
    }
    return c;
}

Circuit lower(const Circuit &c, const DeviceModel &device) {
    if (c.n_qubits > device.n_qubits) {
        throw CompilationError(
            fmt::format("{}-qubit circuit does not fit a {}-qubit device", c.n_qubits, device.n_qubits));
    }
    Circuit out(c.n_qubits);
    for (const Gate &g : c.gates) {
        if (g.kind == GateKind::CZ) {
            auto [a, b] = std::minmax(g.qubits[0], g.qubits[1]);
            int control;
            int target;
            if (device.coupled(a, b)) {
                control = a;
                target = b;
            } else if (device.coupled(b, a)) {
                control = b;
                target = a;
            } else {
                throw CompilationError(fmt::format("CZ on uncoupled pair ({}, {})", a, b));
            }
            out.h(target);
            out.cnot(control, target);
            out.h(target);
        } else if (g.kind == GateKind::CNOT) {
            int control = g.qubits[0];
            int target = g.qubits[1];
            if (device.coupled(control, target)) {
                out.append(g);
            } else if (device.coupled(target, control)) {
                out.h(control);
                out.h(target);
                out.cnot(target, control);
                out.h(control);
                out.h(target);
            } else {
                throw CompilationError(fmt::format("CNOT on uncoupled pair ({}, {})", control, target));
            }
        } else {
            out.append(g);
        }
    }
    return out;
}

std::vector<int> edge_coloring(const std::vector<Edge> &edges) {
    std::vector<int> color(edges.size(), -1);
    std::map<int, std::vector<std::size_t>> incident;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        incident[edges[e].first].push_back(e);
        incident[edges[e].second].push_back(e);
    }
    std::size_t max_degree = 0;
    for (const auto &[v, es] : incident) {
        max_degree = std::max(max_degree, es.size());
    }

    if (max_degree <= 2) {
        auto other_end = [&](std::size_t e, int v) {
            return edges[e].first == v ? edges[e].second : edges[e].first;
        };
        auto walk = [&](int start) {
            int v = start;
            int c = 0;
            std::size_t first_edge = edges.size();
            while (true) {
                std::size_t next = edges.size();
                for (std::size_t e : incident[v]) {
                    if (color[e] < 0) {
                        next = e;
                        break;
                    }
                }
                if (next == edges.size()) {
                    break;
                }
                if (first_edge == edges.size()) {
                    first_edge = next;
                }
                color[next] = c;
                c ^= 1;
                v = other_end(next, v);
            }
            // Odd cycle: the closing edge clashes with the first one.
            if (v == start && first_edge != edges.size()) {
                std::size_t last = edges.size();
                for (std::size_t e : incident[start]) {
                    if (e != first_edge) {
                        last = e;
                    }
                }
                if (last != edges.size() && color[last] == color[first_edge]) {
                    color[last] = 2;
                }
            }
        };
        // Paths first from their endpoints, then the remaining cycles.
        for (const auto &[v, es] : incident) {
            if (es.size() == 1 && color[es[0]] < 0) {
                walk(v);
            }
        }
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (color[e] < 0) {
                walk(edges[e].first);
            }
        }
        return color;
    }

    std::map<int, std::vector<bool>> used;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto &ua = used[edges[e].first];
        auto &ub = used[edges[e].second];
        int c = 0;
        while ((c < static_cast<int>(ua.size()) && ua[c]) || (c < static_cast<int>(ub.size()) && ub[c])) {
            ++c;
        }
        color[e] = c;
        ua.resize(std::max<std::size_t>(ua.size(), c + 1));
        ub.resize(std::max<std::size_t>(ub.size(), c + 1));
        ua[c] = ub[c] = true;
    }
    return color;
}

namespace {

// A unit of the raised circuit: a plain gate or a CZ block H(t) CNOT(c,t) H(t).
struct Item {
    Gate gate;
    bool cz_block = false;
};

bool is_cz_like(const Item &it) {
    return it.cz_block || it.gate.kind == GateKind::CZ;
}

std::vector<Item> raise_cz_blocks(const Circuit &c) {
    std::size_t m = c.gates.size();
    std::vector<bool> absorbed(m, false);
    std::vector<bool> block(m, false);
    for (std::size_t i = 0; i < m; ++i) {
        const Gate &g = c.gates[i];
        if (g.kind != GateKind::CNOT) {
            continue;
        }
        int t = g.qubits[1];
        std::size_t before = m;
        for (std::size_t j = i; j-- > 0;) {
            if (c.gates[j].acts_on(t)) {
                before = j;
                break;
            }
        }
        std::size_t after = m;
        for (std::size_t j = i + 1; j < m; ++j) {
            if (c.gates[j].acts_on(t)) {
                after = j;
                break;
            }
        }
        if (before < m && after < m && c.gates[before].kind == GateKind::H && c.gates[after].kind == GateKind::H &&
            !absorbed[before] && !absorbed[after]) {
            absorbed[before] = absorbed[after] = true;
            block[i] = true;
        }
    }
    std::vector<Item> items;
    for (std::size_t i = 0; i < m; ++i) {
        if (!absorbed[i]) {
            items.push_back({c.gates[i], block[i]});
        }
    }
    return items;
}

int run_depth(const std::vector<Item> &run) {
    std::map<int, int> depth;
    int best = 0;
    for (const Item &it : run) {
        int d = std::max(depth[it.gate.qubits[0]], depth[it.gate.qubits[1]]) + 1;
        depth[it.gate.qubits[0]] = depth[it.gate.qubits[1]] = d;
        best = std::max(best, d);
    }
    return best;
}

void pack_runs(std::vector<Item> &items) {
    for (std::size_t start = 0; start < items.size();) {
        if (!is_cz_like(items[start])) {
            ++start;
            continue;
        }
        std::size_t end = start;
        while (end < items.size() && is_cz_like(items[end])) {
            ++end;
        }
        std::vector<Item> run(items.begin() + static_cast<std::ptrdiff_t>(start),
                              items.begin() + static_cast<std::ptrdiff_t>(end));
        std::vector<Edge> pairs;
        for (const Item &it : run) {
            pairs.emplace_back(it.gate.qubits[0], it.gate.qubits[1]);
        }
        std::vector<int> colors = edge_coloring(pairs);
        std::vector<std::size_t> order(run.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return colors[a] < colors[b];
        });
        std::vector<Item> packed;
        for (std::size_t k : order) {
            packed.push_back(run[k]);
        }
        if (run_depth(packed) < run_depth(run)) {
            std::copy(packed.begin(), packed.end(), items.begin() + static_cast<std::ptrdiff_t>(start));
        }
        start = end;
    }
}

Circuit lower_items(int n, const std::vector<Item> &items) {
    Circuit out(n);
    for (const Item &it : items) {
        if (it.cz_block) {
            int t = it.gate.qubits[1];
            out.h(t);
            out.append(it.gate);
            out.h(t);
        } else {
            out.append(it.gate);
        }
    }
    return out;
}

Circuit cancel_hadamard_pairs(const Circuit &c) {
    std::vector<bool> removed(c.gates.size(), false);
    std::vector<std::vector<std::size_t>> wire(c.n_qubits);
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const Gate &g = c.gates[i];
        if (g.kind == GateKind::H) {
            auto &stack = wire[g.qubits[0]];
            if (!stack.empty() && c.gates[stack.back()].kind == GateKind::H) {
                removed[stack.back()] = removed[i] = true;
                stack.pop_back();
                continue;
            }
        }
        for (int k = 0; k < g.arity(); ++k) {
            wire[g.qubits[k]].push_back(i);
        }
    }
    Circuit out(c.n_qubits);
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        if (!removed[i]) {
            out.append(c.gates[i]);
        }
    }
    return out;
}

}  // namespace

Circuit optimize(const Circuit &c) {
    std::vector<Item> items = raise_cz_blocks(c);
    pack_runs(items);
    Circuit candidate = cancel_hadamard_pairs(lower_items(c.n_qubits, items));

    bool fewer_gates = candidate.gates.size() < c.gates.size();
    bool shallower = two_qubit_depth(candidate) < two_qubit_depth(c);
    if (!fewer_gates && !shallower) {
        Circuit same = c;
        same.layers.clear();
        return same;
    }
    return candidate;
}

Circuit schedule(const Circuit &c) {
    Circuit out = c;
    out.layers.clear();
    std::vector<std::size_t> layer(c.gates.size(), 0);
    std::vector<std::vector<bool>> busy;
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const Gate &g = c.gates[i];
        std::size_t earliest = 0;
        for (std::size_t j = 0; j < i; ++j) {
            if (c.gates[j].shares_qubit(g) && !gates_commute(c.gates[j], g)) {
                earliest = std::max(earliest, layer[j] + 1);
            }
        }
        std::size_t l = earliest;
        auto free_at = [&](std::size_t at) {
            if (at >= busy.size()) {
                return true;
            }
            for (int k = 0; k < g.arity(); ++k) {
                if (busy[at][g.qubits[k]]) {
                    return false;
                }
            }
            return true;
        };
        while (!free_at(l)) {
            ++l;
        }
        if (l >= busy.size()) {
            busy.resize(l + 1, std::vector<bool>(c.n_qubits, false));
            out.layers.resize(l + 1);
        }
        for (int k = 0; k < g.arity(); ++k) {
            busy[l][g.qubits[k]] = true;
        }
        layer[i] = l;
        out.layers[l].push_back(i);
    }
    return out;
}

namespace {

bool same_up_to_phase(const ComplexVector &a, const ComplexVector &b, Complex &phase, bool phase_fixed) {
    if (!phase_fixed) {
        Eigen::Index k;
        a.cwiseAbs().maxCoeff(&k);
        if (std::abs(a(k)) < Tolerances::equivalence) {
            return false;
        }
        phase = b(k) / a(k);
        if (std::abs(std::abs(phase) - 1.0) > Tolerances::equivalence) {
            return false;
        }
    }
    return (b - phase * a).cwiseAbs().maxCoeff() <= Tolerances::equivalence;
}

}  // namespace

bool equivalent(const Circuit &a, const Circuit &b) {
    if (a.n_qubits != b.n_qubits) {
        return false;
    }
    if (!a.is_unitary() || !b.is_unitary()) {
        throw UsageError("equivalence check requires measurement-free circuits");
    }
    int n = a.n_qubits;
    if (n > Statevector::max_qubits) {
        throw CapacityError(fmt::format("equivalence check on {} qubits exceeds {}", n, Statevector::max_qubits));
    }
    constexpr int full_unitary_limit = 8;
    std::uint64_t inputs = n <= full_unitary_limit ? (std::uint64_t{1} << n) : 1;
    Complex phase{1, 0};
    for (std::uint64_t x = 0; x < inputs; ++x) {
        Statevector sa(n, x);
        Statevector sb(n, x);
        sa.apply(a);
        sb.apply(b);
        if (!same_up_to_phase(sa.amplitudes(), sb.amplitudes(), phase, x > 0)) {
            return false;
        }
    }
    return true;
}

}  // namespace entverify

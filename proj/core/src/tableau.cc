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

#include "entverify/tableau.h"

#include <algorithm>
#include <bit>

#include <fmt/format.h>

#include "entverify/errors.h"

namespace entverify {

namespace {

inline std::uint64_t bit(int q) {
    return std::uint64_t{1} << q;
}

// Exponent of i contributed when multiplying single-qubit Paulis (x1,z1)(x2,z2).
int g_phase(bool x1, bool z1, bool x2, bool z2) {
    if (!x1 && !z1) {
        return 0;
    }
    if (x1 && z1) {
        return static_cast<int>(z2) - static_cast<int>(x2);
    }
    if (x1) {
        return static_cast<int>(z2) * (2 * static_cast<int>(x2) - 1);
    }
    return static_cast<int>(x2) * (1 - 2 * static_cast<int>(z2));
}

}  // namespace

StabilizerTableau::StabilizerTableau(int n) : n_(n) {
    if (n < 0) {
        throw UsageError("negative qubit count");
    }
    if (n > max_qubits) {
        throw CapacityError(fmt::format("{}-qubit tableau exceeds {} qubits", n, max_qubits));
    }
    rows_.resize(2 * static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
        rows_[q].x = bit(q);
        rows_[n + q].z = bit(q);
    }
}

void StabilizerTableau::apply(const Gate &g) {
    for (int k = 0; k < g.arity(); ++k) {
        if (g.qubits[k] < 0 || g.qubits[k] >= n_) {
            throw UsageError(fmt::format("gate on qubit {} outside {}-qubit tableau", g.qubits[k], n_));
        }
    }
    const int a = g.qubits[0];
    const int b = g.qubits[1];
    for (Row &r : rows_) {
        bool xa = (r.x >> a) & 1;
        bool za = (r.z >> a) & 1;
        switch (g.kind) {
            case GateKind::H:
                r.sign ^= xa && za;
                r.x = (r.x & ~bit(a)) | (za ? bit(a) : 0);
                r.z = (r.z & ~bit(a)) | (xa ? bit(a) : 0);
                break;
            case GateKind::S:
                r.sign ^= xa && za;
                r.z ^= xa ? bit(a) : 0;
                break;
            case GateKind::Sdg:
                r.sign ^= xa && !za;
                r.z ^= xa ? bit(a) : 0;
                break;
            case GateKind::X:
                r.sign ^= za;
                break;
            case GateKind::Z:
                r.sign ^= xa;
                break;
            case GateKind::CNOT: {
                bool xb = (r.x >> b) & 1;
                bool zb = (r.z >> b) & 1;
                r.sign ^= xa && zb && (xb == za);
                r.x ^= xa ? bit(b) : 0;
                r.z ^= zb ? bit(a) : 0;
                break;
            }
            case GateKind::CZ: {
                bool xb = (r.x >> b) & 1;
                bool zb = (r.z >> b) & 1;
                r.sign ^= xa && xb && (za != zb);
                r.z ^= xb ? bit(a) : 0;
                r.z ^= xa ? bit(b) : 0;
                break;
            }
            case GateKind::MeasureZ:
                throw UsageError("MeasureZ is not a Clifford conjugation; use measure_z");
        }
    }
}

void StabilizerTableau::apply(const Circuit &c) {
    if (c.n_qubits != n_) {
        throw UsageError(fmt::format("{}-qubit circuit applied to {}-qubit tableau", c.n_qubits, n_));
    }
    for (const Gate &g : c.gates) {
        apply(g);
    }
}

void StabilizerTableau::apply_pauli(std::uint64_t x, std::uint64_t z) {
    for (Row &r : rows_) {
        r.sign ^= (std::popcount((x & r.z) ^ (z & r.x)) & 1) != 0;
    }
}

void StabilizerTableau::rowsum(Row &h, const Row &i) const {
    int e = 2 * static_cast<int>(h.sign) + 2 * static_cast<int>(i.sign);
    for (int q = 0; q < n_; ++q) {
        e += g_phase((i.x >> q) & 1, (i.z >> q) & 1, (h.x >> q) & 1, (h.z >> q) & 1);
    }
    e = ((e % 4) + 4) % 4;
    h.sign = e == 2;
    h.x ^= i.x;
    h.z ^= i.z;
}

bool StabilizerTableau::is_deterministic(int q) const {
    for (int i = n_; i < 2 * n_; ++i) {
        if ((rows_[i].x >> q) & 1) {
            return false;
        }
    }
    return true;
}

int StabilizerTableau::measure_z(int q, SplitMix64 &rng) {
    if (q < 0 || q >= n_) {
        throw UsageError(fmt::format("measurement of qubit {} outside {}-qubit tableau", q, n_));
    }
    int p = -1;
    for (int i = n_; i < 2 * n_; ++i) {
        if ((rows_[i].x >> q) & 1) {
            p = i;
            break;
        }
    }
    if (p >= 0) {
        for (int i = 0; i < 2 * n_; ++i) {
            if (i != p && ((rows_[i].x >> q) & 1)) {
                rowsum(rows_[i], rows_[p]);
            }
        }
        rows_[p - n_] = rows_[p];
        Row fresh;
        fresh.z = bit(q);
        fresh.sign = (rng() & 1) != 0;
        rows_[p] = fresh;
        return fresh.sign ? 1 : 0;
    }
    Row scratch;
    for (int i = 0; i < n_; ++i) {
        if ((rows_[i].x >> q) & 1) {
            rowsum(scratch, rows_[n_ + i]);
        }
    }
    return scratch.sign ? 1 : 0;
}

PauliString StabilizerTableau::row_to_pauli(const Row &r) const {
    std::vector<Pauli> ops(static_cast<std::size_t>(n_));
    for (int q = 0; q < n_; ++q) {
        ops[q] = static_cast<Pauli>(((r.x >> q) & 1) | (((r.z >> q) & 1) << 1));
    }
    return PauliString(std::move(ops), r.sign ? 2 : 0);
}

PauliString StabilizerTableau::stabilizer(int i) const {
    return row_to_pauli(rows_.at(n_ + i));
}

PauliString StabilizerTableau::destabilizer(int i) const {
    return row_to_pauli(rows_.at(i));
}

std::vector<PauliString> StabilizerTableau::stabilizers() const {
    std::vector<PauliString> out;
    out.reserve(n_);
    for (int i = 0; i < n_; ++i) {
        out.push_back(stabilizer(i));
    }
    return out;
}

bool StabilizerTableau::is_valid() const {
    auto anticommute = [](const Row &a, const Row &b) {
        return (std::popcount((a.x & b.z) ^ (a.z & b.x)) & 1) != 0;
    };
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            if (anticommute(rows_[n_ + i], rows_[n_ + j]) || anticommute(rows_[i], rows_[j])) {
                return false;
            }
            if (anticommute(rows_[i], rows_[n_ + j]) != (i == j)) {
                return false;
            }
        }
    }
    return true;
}

namespace {

struct SymplecticRow {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    PauliString pauli;
};

// Gaussian elimination over GF(2) on (x|z) bits, carrying full Pauli strings
// so signs follow. Returns the reduced, independent rows.
std::vector<SymplecticRow> reduce(const std::vector<PauliString> &gens) {
    std::vector<SymplecticRow> rows;
    for (const auto &g : gens) {
        SymplecticRow r;
        for (std::size_t q = 0; q < g.size(); ++q) {
            if (has_x(g[q])) {
                r.x |= bit(static_cast<int>(q));
            }
            if (has_z(g[q])) {
                r.z |= bit(static_cast<int>(q));
            }
        }
        r.pauli = g;
        rows.push_back(std::move(r));
    }
    std::vector<SymplecticRow> basis;
    for (int col = 0; col < 128; ++col) {
        auto test = [col](const SymplecticRow &r) {
            return col < 64 ? ((r.x >> col) & 1) : ((r.z >> (col - 64)) & 1);
        };
        auto it = std::find_if(rows.begin(), rows.end(), test);
        if (it == rows.end()) {
            continue;
        }
        SymplecticRow pivot = *it;
        rows.erase(it);
        for (auto &r : rows) {
            if (test(r)) {
                r.x ^= pivot.x;
                r.z ^= pivot.z;
                r.pauli = r.pauli * pivot.pauli;
            }
        }
        for (auto &b : basis) {
            if (test(b)) {
                b.x ^= pivot.x;
                b.z ^= pivot.z;
                b.pauli = b.pauli * pivot.pauli;
            }
        }
        basis.push_back(std::move(pivot));
    }
    return basis;
}

}  // namespace

bool in_stabilizer_group(const std::vector<PauliString> &generators, const PauliString &candidate) {
    if (generators.empty()) {
        return candidate.is_identity() && candidate.phase_exponent() == 0;
    }
    if (candidate.size() > 64) {
        throw CapacityError("stabilizer group membership is limited to 64 qubits");
    }
    std::vector<SymplecticRow> basis = reduce(generators);
    PauliString rest = candidate;
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    for (std::size_t q = 0; q < candidate.size(); ++q) {
        x |= has_x(candidate[q]) ? bit(static_cast<int>(q)) : 0;
        z |= has_z(candidate[q]) ? bit(static_cast<int>(q)) : 0;
    }
    // Reduced basis is in reduced row echelon form: each pivot column is set
    // in exactly one basis row.
    for (const auto &b : basis) {
        int col = b.x ? std::countr_zero(b.x) : 64 + std::countr_zero(b.z);
        bool set = col < 64 ? ((x >> col) & 1) : ((z >> (col - 64)) & 1);
        if (set) {
            x ^= b.x;
            z ^= b.z;
            rest = rest * b.pauli;
        }
    }
    return x == 0 && z == 0 && rest.phase_exponent() == 0;
}

bool same_stabilizer_group(const std::vector<PauliString> &a, const std::vector<PauliString> &b) {
    if (reduce(a).size() != reduce(b).size()) {
        return false;
    }
    for (const auto &p : b) {
        if (!in_stabilizer_group(a, p)) {
            return false;
        }
    }
    return true;
}

}  // namespace entverify

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

#include "entverify/sampler.h"

#include <algorithm>

#include <fmt/format.h>

#include "entverify/errors.h"
#include "entverify/statevector.h"

namespace entverify {

namespace {

void check_probability(double p, const char *what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw UsageError(fmt::format("{} must lie in [0, 1], got {}", what, p));
    }
}

inline std::uint64_t bit(int q) {
    return std::uint64_t{1} << q;
}

PauliMask random_pauli(const Gate &g, SplitMix64 &rng) {
    PauliMask m;
    if (g.arity() == 1) {
        // 1..3 -> X, Z, Y in x/z encoding.
        std::uint64_t k = 1 + rng.below(3);
        if (k & 1) {
            m.x |= bit(g.qubits[0]);
        }
        if (k & 2) {
            m.z |= bit(g.qubits[0]);
        }
    } else {
        std::uint64_t k = 1 + rng.below(15);
        if (k & 1) {
            m.x |= bit(g.qubits[0]);
        }
        if (k & 2) {
            m.z |= bit(g.qubits[0]);
        }
        if (k & 4) {
            m.x |= bit(g.qubits[1]);
        }
        if (k & 8) {
            m.z |= bit(g.qubits[1]);
        }
    }
    return m;
}

double gate_error(const Gate &g, const NoiseModel &noise) {
    return g.arity() == 2 ? noise.two_qubit(g.qubits[0], g.qubits[1]) : noise.depolarizing_1q;
}

struct FrameOp {
    GateKind kind;
    int a;
    int b;
    double p;
    Gate gate;
};

}  // namespace

NoiseModel NoiseModel::from_device(const DeviceModel &device) {
    NoiseModel nm;
    nm.depolarizing_1q = device.error_1q;
    nm.depolarizing_2q = device.error_2q;
    nm.readout_flip = device.readout_error;
    nm.depolarizing_2q_pairs = device.coupling_error;
    return nm;
}

void NoiseModel::validate() const {
    check_probability(depolarizing_1q, "depolarizing_1q");
    check_probability(depolarizing_2q, "depolarizing_2q");
    for (double p : readout_flip) {
        check_probability(p, "readout_flip");
    }
    for (const auto &[pair, p] : depolarizing_2q_pairs) {
        check_probability(p, "pair depolarizing probability");
    }
}

double NoiseModel::two_qubit(int a, int b) const {
    auto it = depolarizing_2q_pairs.find(std::minmax(a, b));
    return it == depolarizing_2q_pairs.end() ? depolarizing_2q : it->second;
}

bool NoiseModel::is_noiseless() const {
    auto zero = [](double p) {
        return p == 0.0;
    };
    return depolarizing_1q == 0.0 && depolarizing_2q == 0.0 && std::all_of(readout_flip.begin(), readout_flip.end(), zero) &&
           std::all_of(depolarizing_2q_pairs.begin(), depolarizing_2q_pairs.end(), [](const auto &kv) {
               return kv.second == 0.0;
           });
}

void apply_gate(StabilizerTableau &t, const Gate &g) {
    t.apply(g);
}

PauliMask inject_pauli_noise(StabilizerTableau &t, const Gate &g, const NoiseModel &noise, SplitMix64 &rng) {
    double p = gate_error(g, noise);
    if (p <= 0.0 || !rng.bernoulli(p)) {
        return {};
    }
    PauliMask m = random_pauli(g, rng);
    t.apply_pauli(m.x, m.z);
    return m;
}

int measure_z(StabilizerTableau &t, int q, SplitMix64 &rng) {
    return t.measure_z(q, rng);
}

OutcomeSpace outcome_space(const StabilizerTableau &t, SplitMix64 &rng) {
    OutcomeSpace space;
    StabilizerTableau collapsed = t;
    for (int q = 0; q < t.num_qubits(); ++q) {
        if (collapsed.measure_z(q, rng)) {
            space.offset |= bit(q);
        }
    }
    // Outcomes differ from any one sample by the X parts of stabilizers.
    std::vector<std::uint64_t> rows;
    for (int i = 0; i < t.num_qubits(); ++i) {
        rows.push_back(t.stabilizer_x(i));
    }
    for (int col = 0; col < t.num_qubits(); ++col) {
        auto it = std::find_if(rows.begin(), rows.end(), [col](std::uint64_t r) {
            return (r >> col) & 1;
        });
        if (it == rows.end()) {
            continue;
        }
        std::uint64_t pivot = *it;
        rows.erase(it);
        for (auto &r : rows) {
            if ((r >> col) & 1) {
                r ^= pivot;
            }
        }
        space.basis.push_back(pivot);
    }
    return space;
}

Counts sample_shots(const Circuit &c, std::span<const Pauli> basis, const NoiseModel &noise, std::uint64_t shots,
                    std::uint64_t seed, std::uint64_t stream) {
    int n = c.n_qubits;
    if (n > StabilizerTableau::max_qubits) {
        throw CapacityError(fmt::format("{}-qubit sampling exceeds {} qubits", n, StabilizerTableau::max_qubits));
    }
    if (static_cast<int>(basis.size()) != n) {
        throw UsageError(fmt::format("{} basis labels for {} qubits", basis.size(), n));
    }
    if (!c.is_unitary()) {
        throw UsageError("sample_shots measures every qubit at the end; circuit must not contain MeasureZ");
    }
    noise.validate();

    Circuit full = c;
    full.layers.clear();
    for (int q = 0; q < n; ++q) {
        append_basis_change(full, q, basis[q]);
    }

    StabilizerTableau tableau(n);
    tableau.apply(full);
    SplitMix64 reference_rng(derive_seed(seed, stream, ~std::uint64_t{0}));
    OutcomeSpace space = outcome_space(tableau, reference_rng);

    std::vector<FrameOp> ops;
    ops.reserve(full.gates.size());
    bool any_gate_noise = false;
    for (const Gate &g : full.gates) {
        double p = gate_error(g, noise);
        any_gate_noise |= p > 0.0;
        ops.push_back({g.kind, g.qubits[0], g.qubits[1], p, g});
    }
    std::vector<double> readout(static_cast<std::size_t>(n));
    bool any_readout = false;
    for (int q = 0; q < n; ++q) {
        readout[q] = noise.readout(q);
        any_readout |= readout[q] > 0.0;
    }

    std::vector<std::uint64_t> samples(shots);
    for (std::uint64_t s = 0; s < shots; ++s) {
        SplitMix64 rng(derive_seed(seed, stream, s));
        std::uint64_t outcome = space.offset;
        std::uint64_t r = rng();
        for (std::size_t i = 0; i < space.basis.size(); ++i) {
            if ((r >> i) & 1) {
                outcome ^= space.basis[i];
            }
        }
        if (any_gate_noise) {
            // Pauli frame: errors pushed through the rest of the circuit;
            // its X part flips the ideal outcome.
            std::uint64_t fx = 0;
            std::uint64_t fz = 0;
            for (const FrameOp &op : ops) {
                std::uint64_t ma = bit(op.a);
                switch (op.kind) {
                    case GateKind::H: {
                        std::uint64_t xa = fx & ma;
                        std::uint64_t za = fz & ma;
                        fx = (fx & ~ma) | za;
                        fz = (fz & ~ma) | xa;
                        break;
                    }
                    case GateKind::S:
                    case GateKind::Sdg:
                        fz ^= fx & ma;
                        break;
                    case GateKind::CNOT: {
                        std::uint64_t mb = bit(op.b);
                        if (fx & ma) {
                            fx ^= mb;
                        }
                        if (fz & mb) {
                            fz ^= ma;
                        }
                        break;
                    }
                    case GateKind::CZ: {
                        std::uint64_t mb = bit(op.b);
                        bool xa = fx & ma;
                        bool xb = fx & mb;
                        if (xb) {
                            fz ^= ma;
                        }
                        if (xa) {
                            fz ^= mb;
                        }
                        break;
                    }
                    default:
                        break;
                }
                if (op.p > 0.0 && rng.uniform() < op.p) {
                    PauliMask m = random_pauli(op.gate, rng);
                    fx ^= m.x;
                    fz ^= m.z;
                }
            }
            outcome ^= fx;
        }
        if (any_readout) {
            for (int q = 0; q < n; ++q) {
                if (readout[q] > 0.0 && rng.uniform() < readout[q]) {
                    outcome ^= bit(q);
                }
            }
        }
        samples[s] = outcome;
    }
    return Counts::from_samples(std::move(samples));
}

}  // namespace entverify

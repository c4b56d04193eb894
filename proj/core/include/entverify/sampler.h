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
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "entverify/circuit.h"
#include "entverify/counts.h"
#include "entverify/device.h"
#include "entverify/pauli.h"
#include "entverify/rng.h"
#include "entverify/tableau.h"

namespace entverify {

/// Stochastic Pauli noise: after every 1q (2q) gate a uniformly random
/// non-identity Pauli on the gate's support is applied with probability
/// depolarizing_1q (depolarizing_2q); each measured bit flips independently
/// with its qubit's readout probability.
struct NoiseModel {
    double depolarizing_1q = 0.0;
    double depolarizing_2q = 0.0;
    /// Per qubit; missing entries mean no readout error.
    std::vector<double> readout_flip;
    /// Per-pair overrides of depolarizing_2q keyed by (min, max).
    std::map<std::pair<int, int>, double> depolarizing_2q_pairs;

    static NoiseModel noiseless() {
        return {};
    }
    static NoiseModel from_device(const DeviceModel &device);

    void validate() const;
    double two_qubit(int a, int b) const;
    double readout(int q) const {
        return q < static_cast<int>(readout_flip.size()) ? readout_flip[q] : 0.0;
    }
    bool is_noiseless() const;
};

/// A Pauli on up to 64 qubits as X/Z bit masks (bit q = qubit q), phase dropped.
struct PauliMask {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    friend bool operator==(const PauliMask &, const PauliMask &) = default;
};

/// In-place tableau update for one gate.
void apply_gate(StabilizerTableau &t, const Gate &g);

/// With the gate's depolarizing probability, applies a uniformly random
/// non-identity Pauli on g's support. Returns what was applied (empty masks
/// when nothing fired).
PauliMask inject_pauli_noise(StabilizerTableau &t, const Gate &g, const NoiseModel &noise, SplitMix64 &rng);

/// Projective Z measurement; the tableau collapses accordingly.
int measure_z(StabilizerTableau &t, int q, SplitMix64 &rng);

/// Z-basis outcome support of a stabilizer state: offset XOR span(basis),
/// sampled uniformly.
struct OutcomeSpace {
    std::uint64_t offset = 0;
    std::vector<std::uint64_t> basis;
};
OutcomeSpace outcome_space(const StabilizerTableau &t, SplitMix64 &rng);

/// Runs c, rotates each qubit into the basis given for it (X: H, Y: Sdg H,
/// Z: nothing) and measures every qubit. Noise and readout flips follow
/// `noise`. Shot s of stream `stream` draws from its own generator seeded
/// by (seed, stream, s), so results do not depend on how shots are batched.
Counts sample_shots(const Circuit &c, std::span<const Pauli> basis, const NoiseModel &noise, std::uint64_t shots,
                    std::uint64_t seed, std::uint64_t stream = 0);

}  // namespace entverify

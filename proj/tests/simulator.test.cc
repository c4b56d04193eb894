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

#include <cmath>
#include <cstdlib>

#include "gtest/gtest.h"

#include "entverify/compiler.h"
#include "entverify/errors.h"
#include "entverify/sampler.h"
#include "entverify/statevector.h"
#include "entverify/tableau.h"
#include "oracles.h"

using namespace entverify;

static std::vector<std::pair<std::uint64_t, double>> frequencies(const Counts &c) {
    std::vector<std::pair<std::uint64_t, double>> out;
    for (auto [k, n] : c.entries()) {
        out.emplace_back(k, static_cast<double>(n) / static_cast<double>(c.total()));
    }
    return out;
}

TEST(tableau, single_qubit_gates) {
    StabilizerTableau t(1);
    ASSERT_EQ(t.stabilizer(0).str(), "Z");
    t.apply(Gate::single(GateKind::H, 0));
    ASSERT_EQ(t.stabilizer(0).str(), "X");
    t.apply(Gate::single(GateKind::S, 0));
    ASSERT_EQ(t.stabilizer(0).str(), "Y");
    t.apply(Gate::single(GateKind::S, 0));
    ASSERT_EQ(t.stabilizer(0).str(), "-X");
    t.apply(Gate::single(GateKind::Sdg, 0));
    ASSERT_EQ(t.stabilizer(0).str(), "Y");
    t.apply(Gate::single(GateKind::Z, 0));
    ASSERT_EQ(t.stabilizer(0).str(), "-Y");
    t.apply(Gate::single(GateKind::X, 0));
    ASSERT_EQ(t.stabilizer(0).str(), "Y");
    ASSERT_THROW(t.apply(Gate::single(GateKind::MeasureZ, 0)), UsageError);
}

TEST(tableau, bell_pair) {
    StabilizerTableau t(2);
    t.apply(Gate::single(GateKind::H, 0));
    t.apply(Gate::pair(GateKind::CNOT, 0, 1));
    std::vector<PauliString> expected{PauliString::from_str("XX"), PauliString::from_str("ZZ")};
    ASSERT_TRUE(same_stabilizer_group(t.stabilizers(), expected));
    SplitMix64 rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        StabilizerTableau copy = t;
        int a = copy.measure_z(0, rng);
        int b = copy.measure_z(1, rng);
        ASSERT_EQ(a, b);
    }
}

TEST(tableau, ring_preparation_matches_generators) {
    auto c = synthesize(GraphStateSpec(ring_graph(8)));
    StabilizerTableau t(8);
    t.apply(c);
    ASSERT_TRUE(same_stabilizer_group(t.stabilizers(), stabilizer_generators(ring_graph(8))));
    auto lowered = optimize(lower(synthesize(default_ring_spec(16), 16), DeviceModel::ibmqx5()));
    StabilizerTableau t16(16);
    t16.apply(lowered);
    auto gens = stabilizer_generators(ring_graph(16));
    auto spec = default_ring_spec(16);
    for (const auto &g : gens) {
        PauliString placed(16);
        for (int v = 0; v < 16; ++v) {
            placed.set(spec.qubit(v), g[v]);
        }
        ASSERT_TRUE(in_stabilizer_group(t16.stabilizers(), placed)) << placed.str();
    }
}

TEST(tableau, symplectic_validity_under_random_gates) {
    std::mt19937_64 rng(23);
    auto c = oracle::random_clifford_circuit(16, 10000, rng);
    StabilizerTableau t(16);
    for (const auto &g : c.gates) {
        t.apply(g);
        ASSERT_TRUE(t.is_valid());
    }
}

TEST(tableau, matches_statevector_stabilizers) {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + static_cast<int>(rng() % 5);
        auto c = oracle::random_clifford_circuit(n, 30, rng);
        StabilizerTableau t(n);
        t.apply(c);
        Statevector sv(n);
        sv.apply(c);
        auto rho = DensityMatrix::from_pure(sv.amplitudes());
        for (const auto &s : t.stabilizers()) {
            ASSERT_NEAR(expectation(rho, s), 1.0, 1e-9) << s.str();
        }
    }
}

TEST(tableau, measurement) {
    StabilizerTableau zero(1);
    SplitMix64 rng(3);
    ASSERT_TRUE(zero.is_deterministic(0));
    ASSERT_EQ(zero.measure_z(0, rng), 0);
    int ones = 0;
    for (int s = 0; s < 10000; ++s) {
        StabilizerTableau plus(1);
        plus.apply(Gate::single(GateKind::H, 0));
        ones += plus.measure_z(0, rng);
    }
    ASSERT_NEAR(ones / 10000.0, 0.5, 0.02);
    ASSERT_THROW(StabilizerTableau(65), CapacityError);
}

TEST(noise, zero_probability_leaves_state) {
    StabilizerTableau t(2);
    t.apply(Gate::single(GateKind::H, 0));
    auto before = t.stabilizers();
    SplitMix64 rng(1);
    auto applied = inject_pauli_noise(t, Gate::pair(GateKind::CNOT, 0, 1), NoiseModel::noiseless(), rng);
    ASSERT_EQ(applied, PauliMask{});
    ASSERT_EQ(t.stabilizers(), before);
}

TEST(noise, single_qubit_paulis_are_uniform) {
    NoiseModel nm;
    nm.depolarizing_1q = 1.0;
    SplitMix64 rng(77);
    int freq[4] = {0, 0, 0, 0};
    const int trials = 100000;
    StabilizerTableau t(1);
    for (int i = 0; i < trials; ++i) {
        auto m = inject_pauli_noise(t, Gate::single(GateKind::H, 0), nm, rng);
        freq[(m.x & 1) | ((m.z & 1) << 1)]++;
    }
    ASSERT_EQ(freq[0], 0);
    double chi2 = 0;
    for (int k = 1; k < 4; ++k) {
        double p = freq[k] / static_cast<double>(trials);
        ASSERT_NEAR(p, 1.0 / 3, 0.02);
        double e = trials / 3.0;
        chi2 += (freq[k] - e) * (freq[k] - e) / e;
    }
    // 2 degrees of freedom, 0.999 quantile.
    ASSERT_LT(chi2, 13.8);
}

TEST(noise, two_qubit_paulis_cover_all_fifteen) {
    NoiseModel nm;
    nm.depolarizing_2q = 1.0;
    SplitMix64 rng(78);
    std::vector<int> freq(16, 0);
    StabilizerTableau t(2);
    const int trials = 150000;
    for (int i = 0; i < trials; ++i) {
        auto m = inject_pauli_noise(t, Gate::pair(GateKind::CZ, 0, 1), nm, rng);
        freq[(m.x & 3) | ((m.z & 3) << 2)]++;
    }
    ASSERT_EQ(freq[0], 0);
    for (int k = 1; k < 16; ++k) {
        ASSERT_NEAR(freq[k] / static_cast<double>(trials), 1.0 / 15, 0.005);
    }
}

TEST(sample_shots, bell_pair_in_x) {
    Circuit c(2);
    c.h(0);
    c.cnot(0, 1);
    Pauli basis[] = {Pauli::X, Pauli::X};
    auto counts = sample_shots(c, basis, NoiseModel::noiseless(), 2048, 5);
    ASSERT_EQ(counts.total(), 2048u);
    ASSERT_EQ(counts.at(0b01) + counts.at(0b10), 0u);
    ASSERT_NEAR(counts.at(0b00) / 2048.0, 0.5, 0.05);
}

TEST(sample_shots, ring_stabilizer_parity_is_exact) {
    auto c = synthesize(GraphStateSpec(ring_graph(8)));
    // Z_2 X_3 Z_4 on chain (2,3,4,5).
    std::vector<Pauli> basis(8, Pauli::Z);
    basis[3] = Pauli::X;
    basis[5] = Pauli::Y;
    auto counts = sample_shots(c, basis, NoiseModel::noiseless(), 2048, 9);
    for (auto [key, n] : counts.entries()) {
        int parity = static_cast<int>(((key >> 2) ^ (key >> 3) ^ (key >> 4)) & 1);
        ASSERT_EQ(parity, 0);
    }
}

TEST(sample_shots, readout_flips) {
    Circuit c(1);
    NoiseModel nm;
    nm.readout_flip = {0.065};
    Pauli basis[] = {Pauli::Z};
    auto counts = sample_shots(c, basis, nm, 10000, 4);
    ASSERT_NEAR(counts.at(1) / 10000.0, 0.065, 0.01);
}

TEST(sample_shots, deterministic_regardless_of_threads) {
    auto c = optimize(lower(synthesize(default_ring_spec(8), 16), DeviceModel::ibmqx5()));
    auto nm = NoiseModel::from_device(DeviceModel::ibmqx5());
    std::vector<Pauli> basis(16, Pauli::Z);
    basis[6] = Pauli::X;
    setenv("ENTVERIFY_THREADS", "1", 1);
    auto one = sample_shots(c, basis, nm, 3000, 42, 7);
    setenv("ENTVERIFY_THREADS", "3", 1);
    auto three = sample_shots(c, basis, nm, 3000, 42, 7);
    unsetenv("ENTVERIFY_THREADS");
    ASSERT_EQ(one, three);
    ASSERT_EQ(one, sample_shots(c, basis, nm, 3000, 42, 7));
    ASSERT_FALSE(one == sample_shots(c, basis, nm, 3000, 43, 7));
}

TEST(sample_shots, noiseless_matches_statevector) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        auto c = oracle::random_clifford_circuit(n, 10 * n, rng);
        std::vector<Pauli> basis;
        for (int q = 0; q < n; ++q) {
            basis.push_back(static_cast<Pauli>(1 + rng() % 3));
        }
        auto a = sample_shots(c, basis, NoiseModel::noiseless(), 20000, trial);
        auto b = statevector_run(c, basis, 20000, trial);
        ASSERT_LT(oracle::tvd(frequencies(a), frequencies(b)), 0.04);
    }
}

TEST(sample_shots, depolarizing_flips_match_expectation) {
    // |+> measured in X passes through two noisy H gates (preparation and
    // basis change). Each flips the outcome with probability 2p/3.
    Circuit c(1);
    c.h(0);
    NoiseModel nm;
    nm.depolarizing_1q = 0.3;
    Pauli basis[] = {Pauli::X};
    auto counts = sample_shots(c, basis, nm, 20000, 8);
    double f = 2 * 0.3 / 3;
    ASSERT_NEAR(counts.at(1) / 20000.0, 2 * f * (1 - f), 0.01);
}

TEST(statevector, basics) {
    Circuit c(3);
    Pauli basis[] = {Pauli::Z, Pauli::Z, Pauli::Z};
    auto counts = statevector_run(c, basis, 100, 1);
    ASSERT_EQ(counts.at(0), 100u);
    ASSERT_THROW(Statevector(17), CapacityError);
    Circuit hs(4);
    for (int q = 0; q < 4; ++q) {
        hs.h(q);
    }
    Pauli zs[] = {Pauli::Z, Pauli::Z, Pauli::Z, Pauli::Z};
    auto uniform = statevector_run(hs, zs, 16000, 2);
    for (std::uint64_t k = 0; k < 16; ++k) {
        // Binomial sd is about 30.
        ASSERT_NEAR(static_cast<double>(uniform.at(k)), 1000.0, 150.0);
    }
}

TEST(statevector, matches_dense_unitary) {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        auto c = oracle::random_clifford_circuit(n, 25, rng);
        Statevector sv(n);
        sv.apply(c);
        ComplexVector expected = oracle::dense_unitary(c).col(0);
        ASSERT_LT((sv.amplitudes() - expected).norm(), 1e-9);
    }
}

TEST(counts, construction_and_bitstrings) {
    auto c = Counts::from_samples({3, 1, 3, 3});
    ASSERT_EQ(c.total(), 4u);
    ASSERT_EQ(c.at(3), 3u);
    ASSERT_EQ(c.at(2), 0u);
    auto d = Counts::from_entries({{1, 1}, {3, 2}, {3, 1}, {5, 0}});
    ASSERT_EQ(c, d);
    ASSERT_EQ(bitstring(0b0110, 4), "0110");
    ASSERT_EQ(bitstring(0b0001, 4), "1000");
    ASSERT_EQ(parse_bitstring("1000"), 1u);
    ASSERT_THROW(parse_bitstring("10a"), ParseError);
    d.merge(Counts::from_entries({{0, 2}}));
    ASSERT_EQ(d.total(), 6u);
}

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
#include <optional>
#include <string>
#include <vector>

#include "entverify/circuit.h"
#include "entverify/counts.h"
#include "entverify/graph.h"
#include "entverify/operators.h"
#include "entverify/pauli.h"
#include "entverify/sampler.h"

namespace entverify {

/// Measurement basis per subsystem qubit, each in {X, Y, Z}.
using Setting = std::vector<Pauli>;

inline constexpr int max_tomography_qubits = 6;

/// All 3^k settings in lexicographic order with X < Y < Z, qubit 0 most
/// significant.
std::vector<Setting> enumerate_settings(int k);

/// Position of `s` in enumerate_settings(s.size()).
std::size_t setting_index(const Setting &s);

std::string setting_str(const Setting &s);

struct TomographyPlan {
    std::vector<int> subsystem;
    std::vector<Setting> settings;
    std::uint64_t shots_per_setting = 2048;

    /// Complete plan: every setting of enumerate_settings(subsystem.size()).
    static TomographyPlan complete(std::vector<int> subsystem, std::uint64_t shots = 2048);

    void validate() const;
    /// Labels for a register of n measured qubits: the setting on the
    /// subsystem, Z on every other qubit.
    std::vector<Pauli> device_basis(std::size_t setting, int n_qubits) const;
};

/// One plan per ring position i covering vertices (i, i+1, i+2, i+3) mod n,
/// mapped to physical qubits. Throws UsageError unless spec.graph is a ring.
std::vector<TomographyPlan> chain_plans(const GraphStateSpec &spec, std::uint64_t shots = 2048);

struct SettingData {
    /// Labels on every measured qubit (the plan setting on the subsystem).
    std::vector<Pauli> measured_labels;
    Counts counts;
};

struct Postselection {
    std::map<int, int> conditions;
    std::vector<double> retained_fraction;
    double overall_fraction = 1.0;
};

struct TomographyDataset {
    TomographyPlan plan;
    /// Counts key bit j is the outcome of measured_qubits[j].
    std::vector<int> measured_qubits;
    /// Parallel to plan.settings.
    std::vector<SettingData> data;
    bool resampled = false;
    std::optional<Postselection> postselection;
    std::vector<std::string> warnings;

    /// Checks that every plan setting has data whose labels agree with the
    /// plan on the subsystem. Throws IncompleteDataError otherwise.
    void validate() const;
    int position_of(int qubit) const;
};

/// Simulates every setting of `plan` on circuit c (all qubits measured).
/// Configuration index plan_index * |settings| + s selects the RNG stream.
TomographyDataset simulate_tomography(const Circuit &c, const TomographyPlan &plan, const NoiseModel &noise,
                                      std::uint64_t seed, std::uint64_t plan_index = 0);

/// Keeps only shots whose condition qubits read the given bits. Condition
/// qubits must be outside the subsystem and measured in Z in every setting.
/// Below 100 retained shots in a setting a warning is recorded; a setting
/// with none left raises DegenerateDataError.
TomographyDataset postselect(const TomographyDataset &ds, const std::map<int, int> &conditions);

/// Per-setting outcome weights over the subsystem only. Weights are counts
/// for sampled data and probabilities for exact data.
struct MarginalTable {
    int k = 0;
    std::vector<Setting> settings;
    /// weights[s][key], key bit j = outcome of subsystem position j.
    std::vector<std::vector<double>> weights;

    double total(std::size_t s) const;
};

MarginalTable marginalize(const TomographyDataset &ds);

/// Born-rule outcome probabilities of rho for all 3^k settings; the
/// infinite-shot limit of a tomography experiment.
MarginalTable exact_marginals(const DensityMatrix &rho);

/// Pooled Pauli-parity estimate of <P> for a Hermitian P with phase +1:
/// parity means over every setting that matches P on its support, shots
/// pooled.
double estimate_pauli(const MarginalTable &table, const PauliString &p);

/// mu = 2^-k sum_P e(P) P over all 4^k Pauli strings. Hermitian with unit
/// trace, not necessarily PSD. Throws IncompleteDataError when a setting is
/// missing or has no shots.
ComplexMatrix linear_inversion(const MarginalTable &table);
ComplexMatrix linear_inversion(const TomographyDataset &ds);

/// Closest unit-trace PSD spectrum to `eigenvalues` (any order) in Euclidean
/// norm: negative eigenvalues are zeroed smallest-first while their deficit
/// is spread evenly over the rest. Output is in the input's order.
Eigen::VectorXd truncate_spectrum(const Eigen::VectorXd &eigenvalues);

/// Maximum-likelihood projection of a linear-inversion estimate onto the
/// unit-trace PSD cone. Inputs with trace within 1e-6 of 1 are renormalized;
/// others throw UsageError.
DensityMatrix mle_project(const ComplexMatrix &mu);

enum class ReconstructionMethod { LinearInversion, Mle };

struct ReconstructedState {
    DensityMatrix rho;
    ReconstructionMethod method = ReconstructionMethod::Mle;
    std::vector<int> subsystem;
    std::map<int, int> postselection;
    double retained_fraction = 1.0;
};

/// postselect (when conditions are given), linear inversion, MLE projection.
ReconstructedState reconstruct(const TomographyDataset &ds, const std::map<int, int> &conditions = {});

/// Linear inversion plus MLE on a marginal table.
DensityMatrix reconstruct_state(const MarginalTable &table);

}  // namespace entverify

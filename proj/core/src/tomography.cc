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

#include "entverify/tomography.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <fmt/format.h>

#include "entverify/errors.h"
#include "entverify/parallel.h"
#include "entverify/rng.h"
#include "entverify/tolerances.h"

namespace entverify {

namespace {

constexpr Pauli setting_alphabet[3] = {Pauli::X, Pauli::Y, Pauli::Z};

int alphabet_index(Pauli p) {
    switch (p) {
        case Pauli::X:
            return 0;
        case Pauli::Y:
            return 1;
        case Pauli::Z:
            return 2;
        default:
            throw UsageError("measurement settings use only X, Y and Z");
    }
}

void check_tomography_size(std::size_t k) {
    if (k == 0) {
        throw UsageError("tomography needs at least one qubit");
    }
    if (k > max_tomography_qubits) {
        throw CapacityError(fmt::format("tomography on {} qubits exceeds the {}-qubit limit", k, max_tomography_qubits));
    }
}

// In-place Walsh-Hadamard transform: out[m] = sum_key in[key] (-1)^{|key & m|}.
void walsh_hadamard(std::vector<double> &v) {
    for (std::size_t h = 1; h < v.size(); h <<= 1) {
        for (std::size_t i = 0; i < v.size(); i += h << 1) {
            for (std::size_t j = i; j < i + h; ++j) {
                double a = v[j];
                double b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
        }
    }
}

// Parity sums per setting and subsystem mask, plus the setting totals.
struct ParityTable {
    int k = 0;
    std::vector<Setting> settings;
    std::vector<std::vector<double>> parity;
    std::vector<double> totals;
};

ParityTable parity_table(const MarginalTable &table) {
    check_tomography_size(static_cast<std::size_t>(table.k));
    std::size_t expected = 1;
    for (int i = 0; i < table.k; ++i) {
        expected *= 3;
    }
    std::vector<int> slot(expected, -1);
    for (std::size_t s = 0; s < table.settings.size(); ++s) {
        if (static_cast<int>(table.settings[s].size()) != table.k) {
            throw UsageError("setting width differs from the table width");
        }
        slot[setting_index(table.settings[s])] = static_cast<int>(s);
    }
    auto all = enumerate_settings(table.k);
    ParityTable out;
    out.k = table.k;
    for (std::size_t i = 0; i < expected; ++i) {
        if (slot[i] < 0) {
            throw IncompleteDataError(fmt::format("setting {} is missing", setting_str(all[i])));
        }
        const auto &w = table.weights[slot[i]];
        if (w.size() != (std::size_t{1} << table.k)) {
            throw UsageError(fmt::format("setting {} has {} outcome weights, expected {}", setting_str(all[i]),
                                         w.size(), std::size_t{1} << table.k));
        }
        double total = std::accumulate(w.begin(), w.end(), 0.0);
        if (!(total > 0)) {
            throw IncompleteDataError(fmt::format("setting {} has no shots", setting_str(all[i])));
        }
        std::vector<double> par = w;
        walsh_hadamard(par);
        out.settings.push_back(all[i]);
        out.parity.push_back(std::move(par));
        out.totals.push_back(total);
    }
    return out;
}

double pooled_parity(const ParityTable &pt, std::span<const Pauli> ops) {
    std::uint64_t support = 0;
    for (int j = 0; j < pt.k; ++j) {
        if (ops[j] != Pauli::I) {
            support |= std::uint64_t{1} << j;
        }
    }
    if (support == 0) {
        return 1.0;
    }
    double num = 0;
    double den = 0;
    for (std::size_t s = 0; s < pt.settings.size(); ++s) {
        bool match = true;
        for (int j = 0; j < pt.k && match; ++j) {
            match = ops[j] == Pauli::I || ops[j] == pt.settings[s][j];
        }
        if (match) {
            num += pt.parity[s][support];
            den += pt.totals[s];
        }
    }
    return num / den;
}

}  // namespace

std::vector<Setting> enumerate_settings(int k) {
    check_tomography_size(static_cast<std::size_t>(k));
    std::size_t count = 1;
    for (int i = 0; i < k; ++i) {
        count *= 3;
    }
    std::vector<Setting> out;
    out.reserve(count);
    for (std::size_t index = 0; index < count; ++index) {
        Setting s(k);
        std::size_t rest = index;
        for (int q = k - 1; q >= 0; --q) {
            s[q] = setting_alphabet[rest % 3];
            rest /= 3;
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::size_t setting_index(const Setting &s) {
    std::size_t index = 0;
    for (Pauli p : s) {
        index = index * 3 + alphabet_index(p);
    }
    return index;
}

std::string setting_str(const Setting &s) {
    std::string out;
    for (Pauli p : s) {
        out += pauli_char(p);
    }
    return out;
}

TomographyPlan TomographyPlan::complete(std::vector<int> subsystem, std::uint64_t shots) {
    TomographyPlan plan;
    plan.settings = enumerate_settings(static_cast<int>(subsystem.size()));
    plan.subsystem = std::move(subsystem);
    plan.shots_per_setting = shots;
    plan.validate();
    return plan;
}

void TomographyPlan::validate() const {
    check_tomography_size(subsystem.size());
    std::vector<int> sorted = subsystem;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 0 || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw UsageError("subsystem qubits must be distinct and non-negative");
    }
    if (settings.empty()) {
        throw UsageError("tomography plan has no settings");
    }
    std::vector<bool> seen(enumerate_settings(static_cast<int>(subsystem.size())).size());
    for (const auto &s : settings) {
        if (s.size() != subsystem.size()) {
            throw UsageError(fmt::format("setting {} does not cover the {}-qubit subsystem", setting_str(s),
                                         subsystem.size()));
        }
        auto i = setting_index(s);
        if (seen[i]) {
            throw UsageError(fmt::format("setting {} appears twice", setting_str(s)));
        }
        seen[i] = true;
    }
    if (shots_per_setting == 0) {
        throw UsageError("shots per setting must be positive");
    }
}

std::vector<Pauli> TomographyPlan::device_basis(std::size_t setting, int n_qubits) const {
    std::vector<Pauli> basis(n_qubits, Pauli::Z);
    const auto &s = settings.at(setting);
    for (std::size_t j = 0; j < subsystem.size(); ++j) {
        if (subsystem[j] >= n_qubits) {
            throw UsageError(fmt::format("subsystem qubit {} outside a {}-qubit register", subsystem[j], n_qubits));
        }
        basis[subsystem[j]] = s[j];
    }
    return basis;
}

std::vector<TomographyPlan> chain_plans(const GraphStateSpec &spec, std::uint64_t shots) {
    if (!is_ring(spec.graph)) {
        throw UsageError("chain tomography plans are defined for ring graphs");
    }
    int n = spec.graph.size();
    std::vector<TomographyPlan> plans;
    for (int i = 0; i < n; ++i) {
        std::vector<int> subsystem;
        for (int d = 0; d < 4; ++d) {
            subsystem.push_back(spec.qubit((i + d) % n));
        }
        plans.push_back(TomographyPlan::complete(std::move(subsystem), shots));
    }
    return plans;
}

void TomographyDataset::validate() const {
    plan.validate();
    for (int q : plan.subsystem) {
        position_of(q);
    }
    if (data.size() != plan.settings.size()) {
        throw IncompleteDataError(
            fmt::format("dataset has {} settings, the plan has {}", data.size(), plan.settings.size()));
    }
    for (std::size_t s = 0; s < data.size(); ++s) {
        const auto &labels = data[s].measured_labels;
        if (labels.size() != measured_qubits.size()) {
            throw IncompleteDataError(fmt::format("setting {} labels {} qubits, {} were measured",
                                                  setting_str(plan.settings[s]), labels.size(),
                                                  measured_qubits.size()));
        }
        for (std::size_t j = 0; j < plan.subsystem.size(); ++j) {
            if (labels[position_of(plan.subsystem[j])] != plan.settings[s][j]) {
                throw IncompleteDataError(
                    fmt::format("data for setting {} was taken in a different basis", setting_str(plan.settings[s])));
            }
        }
        if (data[s].counts.empty()) {
            throw IncompleteDataError(fmt::format("setting {} has no shots", setting_str(plan.settings[s])));
        }
    }
}

int TomographyDataset::position_of(int qubit) const {
    auto it = std::find(measured_qubits.begin(), measured_qubits.end(), qubit);
    if (it == measured_qubits.end()) {
        throw IncompleteDataError(fmt::format("qubit {} was not measured", qubit));
    }
    return static_cast<int>(it - measured_qubits.begin());
}

TomographyDataset simulate_tomography(const Circuit &c, const TomographyPlan &plan, const NoiseModel &noise,
                                      std::uint64_t seed, std::uint64_t plan_index) {
    plan.validate();
    TomographyDataset ds;
    ds.plan = plan;
    ds.measured_qubits.resize(c.n_qubits);
    std::iota(ds.measured_qubits.begin(), ds.measured_qubits.end(), 0);
    ds.data.resize(plan.settings.size());
    parallel_for(plan.settings.size(), [&](std::size_t s) {
        auto basis = plan.device_basis(s, c.n_qubits);
        ds.data[s].counts = sample_shots(c, basis, noise, plan.shots_per_setting, seed,
                                         plan_index * plan.settings.size() + s);
        ds.data[s].measured_labels = std::move(basis);
    });
    return ds;
}

TomographyDataset postselect(const TomographyDataset &ds, const std::map<int, int> &conditions) {
    ds.validate();
    std::uint64_t mask = 0;
    std::uint64_t want = 0;
    for (auto [q, bit] : conditions) {
        if (bit != 0 && bit != 1) {
            throw UsageError(fmt::format("postselection bit for qubit {} must be 0 or 1", q));
        }
        if (std::find(ds.plan.subsystem.begin(), ds.plan.subsystem.end(), q) != ds.plan.subsystem.end()) {
            throw UsageError(fmt::format("cannot postselect on subsystem qubit {}", q));
        }
        int pos = ds.position_of(q);
        for (const auto &d : ds.data) {
            if (d.measured_labels[pos] != Pauli::Z) {
                throw UsageError(fmt::format("qubit {} is not measured in Z in every setting", q));
            }
        }
        mask |= std::uint64_t{1} << pos;
        want |= static_cast<std::uint64_t>(bit) << pos;
    }
    TomographyDataset out = ds;
    Postselection post;
    post.conditions = conditions;
    if (ds.postselection) {
        for (auto [q, bit] : ds.postselection->conditions) {
            post.conditions[q] = bit;
        }
    }
    std::uint64_t kept_total = 0;
    std::uint64_t all_total = 0;
    for (std::size_t s = 0; s < ds.data.size(); ++s) {
        std::vector<Counts::Entry> kept;
        for (auto [key, n] : ds.data[s].counts.entries()) {
            if ((key & mask) == want) {
                kept.emplace_back(key, n);
            }
        }
        out.data[s].counts = Counts::from_entries(std::move(kept));
        std::uint64_t k = out.data[s].counts.total();
        std::uint64_t t = ds.data[s].counts.total();
        if (k == 0) {
            throw DegenerateDataError(
                fmt::format("postselection leaves no shots in setting {}", setting_str(ds.plan.settings[s])));
        }
        if (k < 100) {
            out.warnings.push_back(fmt::format("setting {} keeps only {} shots after postselection",
                                               setting_str(ds.plan.settings[s]), k));
        }
        post.retained_fraction.push_back(static_cast<double>(k) / static_cast<double>(t));
        kept_total += k;
        all_total += t;
    }
    post.overall_fraction = static_cast<double>(kept_total) / static_cast<double>(all_total);
    if (ds.postselection) {
        post.overall_fraction *= ds.postselection->overall_fraction;
    }
    out.postselection = std::move(post);
    return out;
}

double MarginalTable::total(std::size_t s) const {
    const auto &w = weights.at(s);
    return std::accumulate(w.begin(), w.end(), 0.0);
}

MarginalTable marginalize(const TomographyDataset &ds) {
    ds.validate();
    MarginalTable table;
    table.k = static_cast<int>(ds.plan.subsystem.size());
    table.settings = ds.plan.settings;
    std::vector<int> pos;
    for (int q : ds.plan.subsystem) {
        pos.push_back(ds.position_of(q));
    }
    for (const auto &d : ds.data) {
        std::vector<double> w(std::size_t{1} << table.k, 0.0);
        for (auto [key, n] : d.counts.entries()) {
            std::uint64_t sub = 0;
            for (int j = 0; j < table.k; ++j) {
                sub |= ((key >> pos[j]) & 1) << j;
            }
            w[sub] += static_cast<double>(n);
        }
        table.weights.push_back(std::move(w));
    }
    return table;
}

MarginalTable exact_marginals(const DensityMatrix &rho) {
    int k = rho.num_qubits();
    MarginalTable table;
    table.k = k;
    table.settings = enumerate_settings(k);
    const double r = 1 / std::sqrt(2.0);
    Eigen::Matrix2cd hx;
    hx << r, r, r, -r;
    Eigen::Matrix2cd hy;  // H * Sdg
    hy << Complex(r, 0), Complex(0, -r), Complex(r, 0), Complex(0, r);
    std::size_t dim = std::size_t{1} << k;
    for (const auto &s : table.settings) {
        ComplexMatrix u = ComplexMatrix::Identity(1, 1);
        for (Pauli p : s) {
            ComplexMatrix f = p == Pauli::X ? ComplexMatrix(hx)
                              : p == Pauli::Y ? ComplexMatrix(hy)
                                              : ComplexMatrix(ComplexMatrix::Identity(2, 2));
            u = kron(u, f);
        }
        ComplexMatrix rotated = u * rho.matrix() * u.adjoint();
        std::vector<double> w(dim, 0.0);
        for (std::size_t idx = 0; idx < dim; ++idx) {
            std::uint64_t key = 0;
            for (int j = 0; j < k; ++j) {
                key |= ((idx >> (k - 1 - j)) & 1) << j;
            }
            w[key] = std::max(0.0, rotated(idx, idx).real());
        }
        table.weights.push_back(std::move(w));
    }
    return table;
}

double estimate_pauli(const MarginalTable &table, const PauliString &p) {
    if (static_cast<int>(p.size()) != table.k || p.phase_exponent() != 0) {
        throw UsageError(fmt::format("cannot estimate {} on a {}-qubit table", p.str(), table.k));
    }
    return pooled_parity(parity_table(table), p.ops());
}

ComplexMatrix linear_inversion(const MarginalTable &table) {
    auto pt = parity_table(table);
    int k = table.k;
    Eigen::Index dim = Eigen::Index{1} << k;
    // Every setting contributes to the 2^k Pauli strings obtained by
    // replacing a subset of its labels with I. Index strings by 2 bits per
    // qubit.
    std::size_t count = std::size_t{1} << (2 * k);
    std::vector<double> num(count, 0.0);
    std::vector<double> den(count, 0.0);
    for (std::size_t s = 0; s < pt.settings.size(); ++s) {
        for (std::uint64_t support = 0; support < (std::uint64_t{1} << k); ++support) {
            std::size_t code = 0;
            for (int q = 0; q < k; ++q) {
                if ((support >> q) & 1) {
                    code |= static_cast<std::size_t>(pt.settings[s][q]) << (2 * q);
                }
            }
            num[code] += pt.parity[s][support];
            den[code] += pt.totals[s];
        }
    }
    ComplexMatrix mu = ComplexMatrix::Zero(dim, dim);
    PauliString p(static_cast<std::size_t>(k));
    double scale = 1.0 / static_cast<double>(dim);
    for (std::size_t code = 0; code < count; ++code) {
        double e = num[code] / den[code];
        if (e == 0) {
            continue;
        }
        for (int q = 0; q < k; ++q) {
            p.set(q, static_cast<Pauli>((code >> (2 * q)) & 3));
        }
        accumulate_pauli(mu, p, e * scale);
    }
    return (mu + mu.adjoint()) / 2;
}

ComplexMatrix linear_inversion(const TomographyDataset &ds) {
    return linear_inversion(marginalize(ds));
}

Eigen::VectorXd truncate_spectrum(const Eigen::VectorXd &eigenvalues) {
    auto d = eigenvalues.size();
    std::vector<Eigen::Index> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return eigenvalues[a] > eigenvalues[b]; });
    std::vector<double> mu(d);
    for (Eigen::Index j = 0; j < d; ++j) {
        mu[j] = eigenvalues[order[j]];
    }
    std::vector<double> lambda(d, 0.0);
    // Walk up from the smallest eigenvalue, zeroing it while the accumulated
    // deficit, shared by those still alive, would push it below zero.
    Eigen::Index i = d;
    double a = 0;
    while (i > 0 && mu[i - 1] + a / static_cast<double>(i) < 0) {
        a += mu[i - 1];
        --i;
    }
    for (Eigen::Index j = 0; j < i; ++j) {
        lambda[j] = mu[j] + a / static_cast<double>(i);
    }
    Eigen::VectorXd out(d);
    for (Eigen::Index j = 0; j < d; ++j) {
        out[order[j]] = lambda[j];
    }
    return out;
}

DensityMatrix mle_project(const ComplexMatrix &mu) {
    if (mu.rows() != mu.cols()) {
        throw UsageError("MLE projection needs a square matrix");
    }
    qubits_for_dimension(mu.rows());
    if (!is_hermitian(mu, Tolerances::hermitian)) {
        throw UsageError(fmt::format("MLE projection input is not Hermitian (defect {:.3g})", hermiticity_defect(mu)));
    }
    double tr = mu.trace().real();
    if (std::abs(tr - 1) > Tolerances::mle_trace) {
        throw UsageError(fmt::format("MLE projection input has trace {:.9g}, expected 1", tr));
    }
    ComplexMatrix m = (mu + mu.adjoint()) / (2 * tr);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
    Eigen::VectorXd eig = solver.eigenvalues();
    if (eig.minCoeff() >= 0) {
        return DensityMatrix(std::move(m));
    }
    Eigen::VectorXd lambda = truncate_spectrum(eig);
    const auto &v = solver.eigenvectors();
    ComplexMatrix rho = v * lambda.cast<Complex>().asDiagonal() * v.adjoint();
    return DensityMatrix((rho + rho.adjoint()) / 2);
}

ReconstructedState reconstruct(const TomographyDataset &ds, const std::map<int, int> &conditions) {
    const TomographyDataset *source = &ds;
    TomographyDataset selected;
    if (!conditions.empty()) {
        selected = postselect(ds, conditions);
        source = &selected;
    }
    ReconstructedState out{reconstruct_state(marginalize(*source)), ReconstructionMethod::Mle, ds.plan.subsystem,
                           {}, 1.0};
    if (source->postselection) {
        out.postselection = source->postselection->conditions;
        out.retained_fraction = source->postselection->overall_fraction;
    }
    return out;
}

DensityMatrix reconstruct_state(const MarginalTable &table) {
    return mle_project(linear_inversion(table));
}

}  // namespace entverify

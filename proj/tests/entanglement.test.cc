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

#include "entverify/entanglement.h"

#include "gtest/gtest.h"

#include "entverify/compiler.h"
#include "entverify/errors.h"
#include "oracles.h"

using namespace entverify;

static DensityMatrix bell() {
    ComplexVector v = ComplexVector::Zero(4);
    v[0] = v[3] = 1 / std::sqrt(2.0);
    return DensityMatrix::from_pure(v);
}

static DensityMatrix chain_state() {
    int chain[] = {0, 1, 2, 3};
    return reduced_density_matrix(ring_graph(8), chain);
}

// (|0>|+> + |1>|->) / sqrt 2.
static DensityMatrix phi_state() {
    ComplexVector v(4);
    v << 0.5, 0.5, 0.5, -0.5;
    return DensityMatrix::from_pure(v);
}

TEST(partial_transpose, involution_and_trace) {
    std::mt19937_64 rng(59);
    ComplexMatrix rho = oracle::random_density_matrix(4, rng);
    std::vector<int> pos = {0, 2};
    ComplexMatrix once = partial_transpose(rho, pos);
    ASSERT_LT((partial_transpose(once, pos) - rho).cwiseAbs().maxCoeff(), 1e-12);
    ASSERT_NEAR(once.trace().real(), 1.0, 1e-12);
    ASSERT_LT((once - oracle::dense_partial_transpose(rho, pos)).norm(), 1e-14);
    int bad[] = {4};
    ASSERT_THROW(partial_transpose(rho, bad), UsageError);
}

TEST(partial_transpose, bell_and_product) {
    int first[] = {0};
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(partial_transpose(bell().matrix(), first));
    ASSERT_NEAR(solver.eigenvalues().minCoeff(), -0.5, 1e-12);
    std::mt19937_64 rng(61);
    ComplexMatrix product = kron(oracle::random_density_matrix(1, rng), oracle::random_density_matrix(1, rng));
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> psd(partial_transpose(product, first));
    ASSERT_GE(psd.eigenvalues().minCoeff(), -1e-12);
}

TEST(negativity, examples) {
    int first[] = {0};
    ASSERT_NEAR(negativity(bell(), first), 0.5, 1e-12);
    ASSERT_EQ(negativity(DensityMatrix::maximally_mixed(2), first), 0.0);
    ASSERT_NEAR(negativity(phi_state(), first), 0.5, 1e-12);
    int ab[] = {0, 1};
    // Dense-oracle value for the chain state across {A,B}|{C,D}.
    ASSERT_NEAR(negativity(chain_state(), ab), 0.5, 1e-12);
    ASSERT_NEAR(oracle::dense_negativity(chain_state().matrix(), {0, 1}), 0.5, 1e-12);
}

TEST(negativity, invariant_under_local_unitaries) {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 20; ++trial) {
        ComplexMatrix rho = oracle::random_density_matrix(3, rng, 2);
        int cut[] = {0};
        double before = negativity(DensityMatrix(rho), cut);
        ComplexMatrix u = ComplexMatrix::Identity(1, 1);
        for (int q = 0; q < 3; ++q) {
            u = kron(u, ComplexMatrix(oracle::random_unitary2(rng)));
        }
        ComplexMatrix rotated = u * rho * u.adjoint();
        rotated = (rotated + rotated.adjoint()) / 2;
        ASSERT_NEAR(negativity(DensityMatrix(rotated), cut), before, 1e-9);
    }
}

TEST(negativity, separable_states_are_ppt) {
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> unit(0, 1);
    for (int trial = 0; trial < 100; ++trial) {
        ComplexMatrix rho = ComplexMatrix::Zero(16, 16);
        double total = 0;
        for (int term = 0; term < 5; ++term) {
            ComplexVector v = ComplexVector::Ones(1);
            for (int q = 0; q < 4; ++q) {
                ComplexVector s = oracle::random_qubit_state(rng);
                ComplexVector next(v.size() * 2);
                for (Eigen::Index i = 0; i < v.size(); ++i) {
                    next[2 * i] = v[i] * s[0];
                    next[2 * i + 1] = v[i] * s[1];
                }
                v = next;
            }
            double w = unit(rng);
            rho += w * v * v.adjoint();
            total += w;
        }
        rho /= total;
        rho = (rho + rho.adjoint()) / 2;
        DensityMatrix d(rho);
        for (int mask = 1; mask < 15; ++mask) {
            std::vector<int> cut;
            for (int q = 0; q < 4; ++q) {
                if ((mask >> q) & 1) {
                    cut.push_back(q);
                }
            }
            ASSERT_LE(negativity(d, cut), 1e-9);
        }
    }
}

TEST(apply_filters, identity_filters_are_partial_trace) {
    std::mt19937_64 rng(73);
    DensityMatrix rho(oracle::random_density_matrix(3, rng));
    int traced[] = {1};
    auto out = apply_filters(rho, {}, traced);
    ASSERT_LT((out.matrix() - oracle::dense_partial_trace(rho.matrix(), {0, 2})).norm(), 1e-12);
}

TEST(apply_filters, chain_to_maximally_entangled_pair) {
    LocalFilter filters[] = {{0, FilterKind::ZPlus}, {3, FilterKind::ZPlus}};
    int traced[] = {0, 3};
    auto out = apply_filters(chain_state(), filters, traced);
    ASSERT_GE(fidelity(out.matrix(), phi_state().matrix()), 1 - 1e-12);
    // Dense oracle: project with kron'd filters and trace explicitly.
    Eigen::Matrix2cd zp = filter_matrix(FilterKind::ZPlus);
    ComplexMatrix o = kron(kron(kron(zp, ComplexMatrix::Identity(2, 2)), ComplexMatrix::Identity(2, 2)), zp);
    ComplexMatrix f = o * chain_state().matrix() * o.adjoint();
    ComplexMatrix expected = oracle::dense_partial_trace(f / f.trace().real(), {1, 2});
    ASSERT_LT((out.matrix() - expected).norm(), 1e-12);
    ASSERT_LT((expected - phi_state().matrix()).norm(), 1e-12);
}

TEST(apply_filters, annihilation_and_usage) {
    ComplexMatrix one = ComplexMatrix::Zero(2, 2);
    one(1, 1) = 1;
    LocalFilter zp[] = {{0, FilterKind::ZPlus}};
    ASSERT_THROW(apply_filters(DensityMatrix(one), zp, {}), AnnihilationError);
    LocalFilter twice[] = {{0, FilterKind::ZPlus}, {0, FilterKind::XPlus}};
    ASSERT_THROW(apply_filters(DensityMatrix::maximally_mixed(1), twice, {}), UsageError);
    LocalFilter outside[] = {{2, FilterKind::ZPlus}};
    ASSERT_THROW(apply_filters(DensityMatrix::maximally_mixed(1), outside, {}), UsageError);
}

TEST(protocols, ideal_values) {
    ASSERT_NEAR(nn_filter_negativity(chain_state()), 0.5, 1e-12);
    ASSERT_EQ(nn_filter_negativity(DensityMatrix::maximally_mixed(4)), 0.0);
    ASSERT_THROW(nn_filter_negativity(DensityMatrix::maximally_mixed(3)), UsageError);

    // Chain (E,A,B,C,D,F) = vertices 0..5 of an 8-ring; keep A..D after
    // postselecting E = F = 0.
    ComplexVector psi = ideal_statevector(ring_graph(8));
    ComplexMatrix rho = psi * psi.adjoint();
    ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
    p0(0, 0) = 1;
    ComplexMatrix o = ComplexMatrix::Identity(1, 1);
    for (int q = 0; q < 8; ++q) {
        o = kron(o, q == 0 || q == 5 ? p0 : ComplexMatrix(ComplexMatrix::Identity(2, 2)));
    }
    ComplexMatrix post = o * rho * o.adjoint();
    post /= post.trace().real();
    DensityMatrix abcd(oracle::dense_partial_trace(post, {1, 2, 3, 4}));
    ASSERT_NEAR(dist2_negativity(abcd), 0.5, 1e-12);
    ASSERT_NEAR(dist3_negativity(abcd), 0.5, 1e-12);
    ASSERT_NEAR(protocol_negativity(Protocol::Distance2, abcd), 0.5, 1e-12);
    // Without postselection the A-C pair stays separable.
    ASSERT_NEAR(dist2_negativity(chain_state()), 0.0, 1e-12);
}

TEST(protocols, names) {
    for (Protocol p : {Protocol::NearestNeighbor, Protocol::Distance2, Protocol::Distance3}) {
        ASSERT_EQ(protocol_from_name(protocol_name(p)), p);
    }
    ASSERT_THROW(protocol_from_name("dist4"), UsageError);
    ASSERT_EQ(protocol_pair(Protocol::Distance3), std::make_pair(0, 3));
}

TEST(fidelity_upper_bound, ideal_and_mixed_chain) {
    auto spec = GraphStateSpec(ring_graph(8));
    std::vector<ReconstructedState> chains;
    for (int i = 0; i < 8; ++i) {
        std::vector<int> sub = {i, (i + 1) % 8, (i + 2) % 8, (i + 3) % 8};
        chains.push_back({reduced_density_matrix(spec.graph, sub), ReconstructionMethod::Mle, sub, {}, 1.0});
    }
    auto ideal = fidelity_upper_bound(chains, spec);
    ASSERT_NEAR(ideal.bound, 1.0, 1e-9);
    chains[5].rho = DensityMatrix::maximally_mixed(4);
    auto bound = fidelity_upper_bound(chains, spec);
    // Oracle: (tr sqrt(sqrt(I/16) rho sqrt(I/16)))^2 with rho a rank-4
    // projector over 4 gives (4 * sqrt(1/64))^2.
    ASSERT_NEAR(bound.bound, 0.25, 1e-9);
    ASSERT_EQ(bound.weakest, 5u);
    ASSERT_NEAR(fidelity(DensityMatrix::maximally_mixed(4).matrix(), chain_state().matrix()), 0.25, 1e-9);
}

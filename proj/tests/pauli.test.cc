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

#include "entverify/pauli.h"

#include "gtest/gtest.h"

#include "entverify/errors.h"
#include "oracles.h"

using namespace entverify;

TEST(pauli_string, parse_and_print) {
    auto p = PauliString::from_str("-iZXZI");
    ASSERT_EQ(p.size(), 4u);
    ASSERT_EQ(p.phase_exponent(), 3);
    ASSERT_EQ(p[0], Pauli::Z);
    ASSERT_EQ(p[1], Pauli::X);
    ASSERT_EQ(p[3], Pauli::I);
    ASSERT_EQ(p.str(), "-iZXZI");
    ASSERT_EQ(PauliString::from_str("+XY").str(), "XY");
    ASSERT_EQ(PauliString::from_str("i_Z").str(), "iIZ");
    ASSERT_EQ(PauliString::from_str("+iX").phase_exponent(), 1);
    ASSERT_THROW(PauliString::from_str("XQ"), UsageError);
    ASSERT_THROW(PauliString::from_str("--X"), UsageError);
}

TEST(pauli_string, multiply_single_qubit) {
    auto x = PauliString::from_str("X");
    auto y = PauliString::from_str("Y");
    auto z = PauliString::from_str("Z");
    ASSERT_EQ(x * y, PauliString::from_str("iZ"));
    ASSERT_EQ(y * x, PauliString::from_str("-iZ"));
    ASSERT_EQ(y * z, PauliString::from_str("iX"));
    ASSERT_EQ(z * x, PauliString::from_str("iY"));
    ASSERT_EQ(x * x, PauliString::from_str("I"));
}

TEST(pauli_string, multiply_examples) {
    ASSERT_EQ(PauliString::from_str("XZ") * PauliString::from_str("ZX"), PauliString::from_str("YY"));
    ASSERT_THROW(PauliString::from_str("X") * PauliString::from_str("XX"), UsageError);
}

TEST(pauli_string, multiply_matches_dense_exhaustive) {
    std::vector<PauliString> all;
    for (int code = 0; code < 64; ++code) {
        std::vector<Pauli> ops;
        for (int q = 0; q < 3; ++q) {
            ops.push_back(static_cast<Pauli>((code >> (2 * q)) & 3));
        }
        all.emplace_back(ops);
    }
    for (const auto &a : all) {
        for (const auto &b : all) {
            auto product = a * b;
            ComplexMatrix expected = oracle::dense_pauli(a) * oracle::dense_pauli(b);
            ASSERT_LT((oracle::dense_pauli(product) - expected).norm(), 1e-12) << a.str() << " * " << b.str();
            ASSERT_EQ(a.commutes_with(b), (expected - oracle::dense_pauli(b * a)).norm() < 1e-12);
        }
    }
}

TEST(pauli_string, to_matrix) {
    Eigen::Matrix2cd z;
    z << 1, 0, 0, -1;
    ASSERT_EQ(pauli_to_matrix(PauliString::from_str("Z")), ComplexMatrix(z));
    ComplexMatrix xx = pauli_to_matrix(PauliString::from_str("XX"));
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            ASSERT_EQ(xx(i, j), Complex(i + j == 3 ? 1 : 0, 0));
        }
    }
    ComplexMatrix iy = pauli_to_matrix(PauliString::from_str("iY"));
    Eigen::Matrix2cd expected;
    expected << 0, 1, -1, 0;
    ASSERT_EQ(iy, ComplexMatrix(expected));
    ASSERT_THROW(pauli_to_matrix(PauliString(7)), CapacityError);
}

TEST(pauli_string, to_matrix_matches_kron_and_is_hermitian) {
    for (int code = 0; code < 256; ++code) {
        std::vector<Pauli> ops;
        for (int q = 0; q < 4; ++q) {
            ops.push_back(static_cast<Pauli>((code >> (2 * q)) & 3));
        }
        for (int phase : {0, 2}) {
            PauliString p(ops, phase);
            ComplexMatrix m = pauli_to_matrix(p);
            ASSERT_EQ(m, ComplexMatrix(m.adjoint()));
            ASSERT_LT((m - oracle::dense_pauli(p)).norm(), 1e-15);
        }
    }
}

TEST(pauli_string, expectation) {
    DensityMatrix zero(ComplexMatrix::Identity(2, 2));
    ComplexMatrix z0 = ComplexMatrix::Zero(2, 2);
    z0(0, 0) = 1;
    ASSERT_DOUBLE_EQ(expectation(DensityMatrix(z0), PauliString::from_str("Z")), 1.0);
    ASSERT_DOUBLE_EQ(expectation(DensityMatrix::maximally_mixed(1), PauliString::from_str("X")), 0.0);
    ASSERT_THROW(expectation(DensityMatrix::maximally_mixed(1), PauliString::from_str("iX")), UsageError);
    ASSERT_THROW(expectation(DensityMatrix::maximally_mixed(2), PauliString::from_str("X")), UsageError);
}

TEST(pauli_string, expectation_of_identity_is_trace) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        DensityMatrix rho(oracle::random_hermitian(8, rng));
        ASSERT_NEAR(expectation(rho, PauliString::from_str("III")), rho.trace(), 1e-12);
    }
}

TEST(filter_matrix, projectors) {
    Eigen::Matrix2cd zp;
    zp << 1, 0, 0, 0;
    Eigen::Matrix2cd zm;
    zm << 0, 0, 0, 1;
    Eigen::Matrix2cd xp;
    xp << 0.5, 0.5, 0.5, 0.5;
    ASSERT_EQ(filter_matrix(FilterKind::ZPlus), zp);
    ASSERT_EQ(filter_matrix(FilterKind::ZMinus), zm);
    ASSERT_EQ(filter_matrix(FilterKind::XPlus), xp);
    for (auto kind : {FilterKind::ZPlus, FilterKind::ZMinus, FilterKind::XPlus}) {
        Eigen::Matrix2cd f = filter_matrix(kind);
        ASSERT_LT((f * f - f).norm(), 1e-15);
    }
}

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

#include "entverify/device.h"

#include <algorithm>

#include <fmt/format.h>

#include "entverify/errors.h"

namespace entverify {

namespace {

void check_probability(double p, const char *what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw UsageError(fmt::format("{} must lie in [0, 1], got {}", what, p));
    }
}

}  // namespace

void DeviceModel::validate() const {
    if (n_qubits <= 0) {
        throw UsageError("device needs at least one qubit");
    }
    check_probability(error_1q, "error_1q");
    check_probability(error_2q, "error_2q");
    if (static_cast<int>(readout_error.size()) != n_qubits) {
        throw UsageError(fmt::format("readout_error has {} entries for {} qubits", readout_error.size(), n_qubits));
    }
    for (double p : readout_error) {
        check_probability(p, "readout_error");
    }
    for (auto [a, b] : couplings) {
        if (a < 0 || a >= n_qubits || b < 0 || b >= n_qubits || a == b) {
            throw UsageError(fmt::format("coupling {}->{} is invalid for {} qubits", a, b, n_qubits));
        }
    }
    for (const auto &[pair, p] : coupling_error) {
        check_probability(p, "coupling error");
        if (pair.first < 0 || pair.second >= n_qubits || pair.first >= pair.second) {
            throw UsageError(fmt::format("coupling error key ({}, {}) is invalid", pair.first, pair.second));
        }
    }
}

double DeviceModel::two_qubit_error(int a, int b) const {
    auto it = coupling_error.find(std::minmax(a, b));
    return it == coupling_error.end() ? error_2q : it->second;
}

DeviceModel DeviceModel::ibmqx5() {
    DeviceModel d;
    d.n_qubits = 16;
    // Directed CNOT edges of the 2x8 ladder: top row q1..q8, bottom row
    // q0, q15, q14, ..., q9.
    d.couplings = {{1, 0},   {1, 2},   {2, 3},   {3, 4},   {3, 14},  {5, 4},   {6, 5},   {6, 7},
                   {6, 11},  {7, 10},  {8, 7},   {9, 8},   {9, 10},  {11, 10}, {12, 5},  {12, 11},
                   {12, 13}, {13, 4},  {13, 14}, {15, 0},  {15, 2},  {15, 14}};
    d.error_1q = 0.002;
    d.error_2q = 0.04;
    d.readout_error.assign(16, 0.065);
    return d;
}

DeviceModel DeviceModel::fully_connected(int n) {
    DeviceModel d;
    d.n_qubits = n;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a != b) {
                d.couplings.emplace(a, b);
            }
        }
    }
    d.readout_error.assign(n, 0.0);
    return d;
}

}  // namespace entverify

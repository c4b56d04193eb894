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

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace entverify {

/// Directed coupling map plus error rates. A coupling (a, b) allows CNOT with
/// control a and target b.
struct DeviceModel {
    int n_qubits = 0;
    std::set<std::pair<int, int>> couplings;
    double error_1q = 0.0;
    double error_2q = 0.0;
    std::vector<double> readout_error;
    /// Per-pair overrides of error_2q, keyed by the unordered pair (min, max).
    std::map<std::pair<int, int>, double> coupling_error;

    /// Throws UsageError on out-of-range probabilities or qubit indices.
    void validate() const;

    bool coupled(int control, int target) const {
        return couplings.contains({control, target});
    }
    bool coupled_either_way(int a, int b) const {
        return coupled(a, b) || coupled(b, a);
    }
    double two_qubit_error(int a, int b) const;

    /// Built-in description of the 16-qubit ibmqx5 ladder.
    static DeviceModel ibmqx5();

    /// All-to-all coupling in both directions with zero error; used for
    /// tests and for unconstrained synthesis.
    static DeviceModel fully_connected(int n);
};

}  // namespace entverify

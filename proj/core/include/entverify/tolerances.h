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

namespace entverify {

/// Numerical tolerances shared by all modules.
struct Tolerances {
    static constexpr double hermitian = 1e-9;
    static constexpr double trace = 1e-9;
    static constexpr double projector = 1e-12;
    // mle_project renormalizes inputs whose trace is within this distance of 1.
    static constexpr double mle_trace = 1e-6;
    static constexpr double psd = 1e-10;
    static constexpr double annihilation = 1e-12;
    // Partial-transpose eigenvalues smaller than this in magnitude count as zero.
    static constexpr double negativity_dust = 1e-10;
    static constexpr double equivalence = 1e-9;
};

}  // namespace entverify

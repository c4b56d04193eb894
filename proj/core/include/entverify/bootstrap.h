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
#include <functional>
#include <vector>

#include "entverify/entanglement.h"
#include "entverify/rng.h"
#include "entverify/tomography.h"

namespace entverify {

struct BootstrapConfig {
    std::size_t resamples = 1000;
    double level = 0.95;
    std::uint64_t seed = 0;

    void validate() const;
};

struct Estimate {
    double value = 0;
    double stddev = 0;
    double ci_low = 0;
    double ci_high = 0;

    /// The lower confidence bound is strictly positive.
    bool significant() const noexcept {
        return ci_low > 0;
    }
};

/// A copy of `table` with each setting's outcomes redrawn multinomially at
/// the observed frequencies, keeping each setting's shot count.
MarginalTable resample(const MarginalTable &table, SplitMix64 &rng);

using TableStatistic = std::function<double(const MarginalTable &)>;

/// Point value on `table`, standard deviation and percentile interval over
/// cfg.resamples resampled tables. Resample r draws from the stream seeded
/// by (cfg.seed, r). The interval is widened, if needed, to contain the
/// point value.
Estimate bootstrap(const MarginalTable &table, const TableStatistic &statistic, const BootstrapConfig &cfg);

/// Linear-interpolated sample quantile of sorted values, q in [0, 1].
double quantile(const std::vector<double> &sorted, double q);

/// Negativity of a protocol's filtered pair on a 4-qubit chain.
Estimate bootstrap_protocol(const MarginalTable &table, Protocol protocol, const BootstrapConfig &cfg);

/// Negativity of the bipartition (positions | rest) of the reconstruction.
Estimate bootstrap_pt(const MarginalTable &table, std::span<const int> positions, const BootstrapConfig &cfg);

}  // namespace entverify

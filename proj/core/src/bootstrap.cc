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

#include "entverify/bootstrap.h"

#include <algorithm>
#include <cmath>
#include <random>

#include <fmt/format.h>

#include "entverify/errors.h"
#include "entverify/parallel.h"

namespace entverify {

void BootstrapConfig::validate() const {
    if (resamples < 2) {
        throw UsageError("bootstrap needs at least two resamples");
    }
    if (!(level > 0 && level < 1)) {
        throw UsageError(fmt::format("confidence level {} outside (0, 1)", level));
    }
}

MarginalTable resample(const MarginalTable &table, SplitMix64 &rng) {
    MarginalTable out = table;
    for (auto &w : out.weights) {
        double total = 0;
        for (double x : w) {
            total += x;
        }
        auto remaining = static_cast<std::uint64_t>(std::llround(total));
        double mass = total;
        for (double &x : w) {
            double p = x;
            if (remaining == 0 || mass <= 0) {
                x = 0;
                continue;
            }
            double q = std::clamp(p / mass, 0.0, 1.0);
            std::uint64_t draw = q >= 1 ? remaining : std::binomial_distribution<std::uint64_t>(remaining, q)(rng);
            x = static_cast<double>(draw);
            remaining -= draw;
            mass -= p;
        }
    }
    return out;
}

double quantile(const std::vector<double> &sorted, double q) {
    if (sorted.empty()) {
        throw UsageError("quantile of an empty sample");
    }
    double h = q * static_cast<double>(sorted.size() - 1);
    auto lo = static_cast<std::size_t>(std::floor(h));
    auto hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

Estimate bootstrap(const MarginalTable &table, const TableStatistic &statistic, const BootstrapConfig &cfg) {
    cfg.validate();
    Estimate out;
    out.value = statistic(table);
    std::vector<double> values(cfg.resamples);
    parallel_for(cfg.resamples, [&](std::size_t r) {
        SplitMix64 rng(derive_seed(cfg.seed, r));
        values[r] = statistic(resample(table, rng));
    });
    double mean = 0;
    for (double v : values) {
        mean += v;
    }
    mean /= static_cast<double>(values.size());
    double ss = 0;
    for (double v : values) {
        ss += (v - mean) * (v - mean);
    }
    out.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
    std::sort(values.begin(), values.end());
    out.ci_low = std::min(quantile(values, (1 - cfg.level) / 2), out.value);
    out.ci_high = std::max(quantile(values, (1 + cfg.level) / 2), out.value);
    return out;
}

Estimate bootstrap_protocol(const MarginalTable &table, Protocol protocol, const BootstrapConfig &cfg) {
    return bootstrap(
        table, [protocol](const MarginalTable &t) { return protocol_negativity(protocol, reconstruct_state(t)); }, cfg);
}

Estimate bootstrap_pt(const MarginalTable &table, std::span<const int> positions, const BootstrapConfig &cfg) {
    std::vector<int> cut(positions.begin(), positions.end());
    return bootstrap(table, [cut](const MarginalTable &t) { return negativity(reconstruct_state(t), cut); }, cfg);
}

}  // namespace entverify

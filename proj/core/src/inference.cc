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

#include "entverify/inference.h"

#include <algorithm>
#include <set>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "entverify/errors.h"

namespace entverify {

std::string SeparationHypothesis::str() const {
    auto block = [](const std::vector<int> &b) {
        std::vector<std::string> names;
        for (int q : b) {
            names.push_back(fmt::format("q{}", q));
        }
        return fmt::format("{{{}}}", fmt::join(names, ","));
    };
    return block(block_a) + "|" + block(block_b);
}

std::string_view status_name(VerdictStatus s) {
    return s == VerdictStatus::FullyEntangled ? "FullyEntangled" : "Inconclusive";
}

namespace {

// significant[i] refers to the ring edge (ring[i], ring[i+1 mod n]).
std::vector<bool> edge_significance(std::span<const int> ring, std::span<const PairResult> pairs) {
    auto n = ring.size();
    if (n < 4) {
        throw UsageError("rings need at least 4 qubits");
    }
    std::set<int> distinct(ring.begin(), ring.end());
    if (distinct.size() != n) {
        throw UsageError("ring qubits must be distinct");
    }
    std::vector<int> seen(n, 0);
    std::vector<bool> significant(n, false);
    for (const auto &r : pairs) {
        bool found = false;
        for (std::size_t i = 0; i < n; ++i) {
            int a = ring[i];
            int b = ring[(i + 1) % n];
            if ((r.pair.first == a && r.pair.second == b) || (r.pair.first == b && r.pair.second == a)) {
                found = true;
                ++seen[i];
                significant[i] = r.estimate.significant();
            }
        }
        if (!found) {
            throw UsageError(fmt::format("pair (q{}, q{}) is not a ring edge", r.pair.first, r.pair.second));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i] != 1) {
            throw UsageError(fmt::format("{} estimates for ring pair (q{}, q{}), expected one", seen[i], ring[i],
                                         ring[(i + 1) % n]));
        }
    }
    return significant;
}

SeparationHypothesis make_hypothesis(std::span<const int> ring, const std::vector<int> &side) {
    SeparationHypothesis h;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        (side[i] != side[0] ? h.block_a : h.block_b).push_back(ring[i]);
    }
    return h;
}

}  // namespace

std::vector<SeparationHypothesis> ring_hypotheses(std::span<const int> ring, std::span<const PairResult> pairs) {
    auto significant = edge_significance(ring, pairs);
    auto n = ring.size();
    std::vector<std::size_t> cuts;
    for (std::size_t i = 0; i < n; ++i) {
        if (!significant[i]) {
            cuts.push_back(i);
        }
    }
    std::vector<SeparationHypothesis> out;
    std::size_t m = cuts.size();
    if (m < 2) {
        return out;
    }
    if (m > 24) {
        throw CapacityError(fmt::format("{} non-significant pairs give too many hypotheses to list", m));
    }
    // Arc j runs from cuts[j-1]+1 to cuts[j]; the arc containing ring[0]
    // (arc 0, wrapping around) is pinned to block b.
    std::vector<std::size_t> arc_of(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = 0;
        while (j < m && cuts[j] < i) {
            ++j;
        }
        arc_of[i] = j % m;
    }
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
        std::vector<int> side(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t arc = arc_of[i];
            side[i] = arc == 0 ? 0 : static_cast<int>((mask >> (arc - 1)) & 1);
        }
        out.push_back(make_hypothesis(ring, side));
    }
    return out;
}

bool refutes(const AuxTest &aux, const SeparationHypothesis &h) {
    if (!aux.estimate.significant()) {
        return false;
    }
    std::set<int> chain(aux.chain.begin(), aux.chain.end());
    std::set<int> block(aux.block.begin(), aux.block.end());
    std::set<int> in_a;
    for (int q : h.block_a) {
        if (chain.contains(q)) {
            in_a.insert(q);
        }
    }
    if (in_a.empty() || in_a.size() == chain.size()) {
        return false;
    }
    std::set<int> complement;
    std::set_difference(chain.begin(), chain.end(), block.begin(), block.end(),
                        std::inserter(complement, complement.end()));
    return in_a == block || in_a == complement;
}

EntanglementVerdict infer_full_entanglement(std::span<const int> ring, std::span<const PairResult> pairs,
                                            std::span<const AuxTest> aux) {
    for (const auto &a : aux) {
        std::set<int> chain(a.chain.begin(), a.chain.end());
        if (chain.size() != a.chain.size() || a.block.empty() || a.block.size() >= a.chain.size() ||
            !std::all_of(a.block.begin(), a.block.end(), [&](int q) { return chain.contains(q); })) {
            throw UsageError("aux test block must be a proper nonempty subset of its chain");
        }
    }
    EntanglementVerdict verdict;
    std::set<std::size_t> consumed;
    for (auto &h : ring_hypotheses(ring, pairs)) {
        bool refuted = false;
        for (std::size_t a = 0; a < aux.size(); ++a) {
            if (refutes(aux[a], h)) {
                refuted = true;
                consumed.insert(a);
            }
        }
        if (!refuted) {
            verdict.surviving.push_back(std::move(h));
        }
    }
    verdict.aux_consumed.assign(consumed.begin(), consumed.end());
    verdict.status = verdict.surviving.empty() ? VerdictStatus::FullyEntangled : VerdictStatus::Inconclusive;
    auto n = ring.size();
    for (std::size_t k = 0; k < verdict.surviving.size(); ++k) {
        const auto &h = verdict.surviving[k];
        std::set<int> a(h.block_a.begin(), h.block_a.end());
        for (std::size_t i = 0; i < n; ++i) {
            int left = ring[i];
            int right = ring[(i + 1) % n];
            if (a.contains(left) == a.contains(right)) {
                continue;
            }
            SuggestedTest s{k, {}, {}};
            for (std::size_t d = 0; d < 4; ++d) {
                int q = ring[(i + n - 1 + d) % n];
                s.chain.push_back(q);
                if (a.contains(q) == a.contains(left)) {
                    s.block.push_back(q);
                }
            }
            verdict.suggestions.push_back(std::move(s));
            break;
        }
    }
    return verdict;
}

}  // namespace entverify

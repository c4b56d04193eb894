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
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace entverify {

/// Outcome histogram over measured qubits. Keys pack one bit per measured
/// qubit: bit j is the outcome of the j-th measured qubit. Entries are kept
/// sorted by key with nonzero counts.
class Counts {
   public:
    using Entry = std::pair<std::uint64_t, std::uint64_t>;

    Counts() = default;

    /// Histogram of raw samples (any order).
    static Counts from_samples(std::vector<std::uint64_t> samples);
    /// From (key, count) entries in any order; duplicate keys are merged.
    static Counts from_entries(std::vector<Entry> entries);

    const std::vector<Entry> &entries() const noexcept {
        return entries_;
    }
    std::uint64_t total() const noexcept {
        return total_;
    }
    std::uint64_t at(std::uint64_t key) const;
    bool empty() const noexcept {
        return entries_.empty();
    }

    /// Merges another histogram into this one.
    void merge(const Counts &other);

    friend bool operator==(const Counts &, const Counts &) = default;

   private:
    std::vector<Entry> entries_;
    std::uint64_t total_ = 0;
};

/// Text form of a key over n measured qubits, measured qubit 0 leftmost.
std::string bitstring(std::uint64_t key, int n);
/// Inverse of bitstring(); throws ParseError on characters other than 0/1.
std::uint64_t parse_bitstring(std::string_view text);

}  // namespace entverify

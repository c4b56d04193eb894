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

#include "entverify/counts.h"

#include <algorithm>

#include <fmt/format.h>

#include "entverify/errors.h"

namespace entverify {

Counts Counts::from_samples(std::vector<std::uint64_t> samples) {
    std::sort(samples.begin(), samples.end());
    Counts c;
    for (std::size_t i = 0; i < samples.size();) {
        std::size_t j = i;
        while (j < samples.size() && samples[j] == samples[i]) {
            ++j;
        }
        c.entries_.emplace_back(samples[i], j - i);
        i = j;
    }
    c.total_ = samples.size();
    return c;
}

Counts Counts::from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end());
    Counts c;
    for (const auto &[key, n] : entries) {
        if (n == 0) {
            continue;
        }
        if (!c.entries_.empty() && c.entries_.back().first == key) {
            c.entries_.back().second += n;
        } else {
            c.entries_.emplace_back(key, n);
        }
        c.total_ += n;
    }
    return c;
}

std::uint64_t Counts::at(std::uint64_t key) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{key, 0});
    return it != entries_.end() && it->first == key ? it->second : 0;
}

void Counts::merge(const Counts &other) {
    std::vector<Entry> all = entries_;
    all.insert(all.end(), other.entries_.begin(), other.entries_.end());
    *this = from_entries(std::move(all));
}

std::string bitstring(std::uint64_t key, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int j = 0; j < n; ++j) {
        if ((key >> j) & 1) {
            s[j] = '1';
        }
    }
    return s;
}

std::uint64_t parse_bitstring(std::string_view text) {
    if (text.size() > 64) {
        throw ParseError(fmt::format("bitstring of length {} exceeds 64 qubits", text.size()));
    }
    std::uint64_t key = 0;
    for (std::size_t j = 0; j < text.size(); ++j) {
        if (text[j] == '1') {
            key |= std::uint64_t{1} << j;
        } else if (text[j] != '0') {
            throw ParseError(fmt::format("invalid character '{}' in bitstring \"{}\"", text[j], text));
        }
    }
    return key;
}

}  // namespace entverify

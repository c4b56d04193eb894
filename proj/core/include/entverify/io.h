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

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "entverify/circuit.h"
#include "entverify/counts.h"
#include "entverify/device.h"
#include "entverify/graph.h"
#include "entverify/tomography.h"

namespace entverify {

/// Object keys keep insertion order so emitted files are stable and readable.
using Json = nlohmann::ordered_json;

Json graph_to_json(const Graph &g);
Graph graph_from_json(const Json &j);

/// Graph fields plus "qubit_map".
Json spec_to_json(const GraphStateSpec &s);
GraphStateSpec spec_from_json(const Json &j);

Json circuit_to_json(const Circuit &c);
Circuit circuit_from_json(const Json &j);

Json device_to_json(const DeviceModel &d);
DeviceModel device_from_json(const Json &j);

/// One line of a counts file: the outcome histogram of one configuration.
/// Bitstring character j is the outcome of qubits[j].
struct CountsRecord {
    std::vector<Pauli> setting;
    std::vector<int> qubits;
    std::uint64_t shots = 0;
    Counts counts;
    /// Tomography subsystem this configuration belongs to, when known.
    std::optional<std::vector<int>> subsystem;
};

std::string counts_record_line(const CountsRecord &r);
CountsRecord counts_record_from_json(const Json &j);

/// Parses JSON Lines, skipping blank lines. Malformed records raise
/// ParseError carrying the 1-based line number. Records whose counts do not
/// add up to "shots" are kept with their actual totals and reported in
/// `warnings`.
std::vector<CountsRecord> read_counts_jsonl(std::istream &in, std::vector<std::string> *warnings = nullptr);

/// One record per setting of the dataset, tagged with its subsystem.
std::vector<CountsRecord> dataset_records(const TomographyDataset &ds);

/// Assembles a dataset for `plan` from records. A record serves a setting
/// when its labels match the setting on the subsystem and are Z elsewhere
/// and, if it names a subsystem, that subsystem is the plan's. Several
/// matching records are pooled. Throws IncompleteDataError naming the first
/// setting without data.
TomographyDataset dataset_from_records(const TomographyPlan &plan, const std::vector<CountsRecord> &records);

Json reconstruction_to_json(const ReconstructedState &r);
ReconstructedState reconstruction_from_json(const Json &j);

}  // namespace entverify

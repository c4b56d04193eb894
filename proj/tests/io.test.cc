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

#include "entverify/io.h"

#include <sstream>

#include "gtest/gtest.h"

#include "entverify/compiler.h"
#include "entverify/errors.h"

using namespace entverify;

TEST(io, graph_and_spec_round_trip) {
    auto spec = default_ring_spec(8);
    auto j = spec_to_json(spec);
    ASSERT_EQ(j["n"], 8);
    ASSERT_EQ(j["edges"][0], Json({0, 1}));
    auto back = spec_from_json(j);
    ASSERT_EQ(back.graph, spec.graph);
    ASSERT_EQ(back.qubit_map, spec.qubit_map);
    ASSERT_THROW(graph_from_json(Json::parse(R"({"n": 3, "edges": [[0, 0]]})")), UsageError);
    ASSERT_THROW(graph_from_json(Json::parse(R"({"edges": []})")), ParseError);
}

TEST(io, circuit_round_trip) {
    auto c = schedule(optimize(lower(synthesize(default_ring_spec(8), 16), DeviceModel::ibmqx5())));
    auto j = circuit_to_json(c);
    ASSERT_EQ(j["gates"][0]["kind"], "H");
    auto back = circuit_from_json(j);
    ASSERT_EQ(back.gates, c.gates);
    ASSERT_EQ(back.layers, c.layers);
    ASSERT_THROW(circuit_from_json(Json::parse(R"({"n": 2, "gates": [{"kind": "T", "qubits": [0]}]})")),
                 ParseError);
    ASSERT_THROW(circuit_from_json(Json::parse(R"({"n": 2, "gates": [{"kind": "CNOT", "qubits": [0]}]})")),
                 ParseError);
}

TEST(io, device_round_trip) {
    auto d = DeviceModel::ibmqx5();
    d.coupling_error[{10, 11}] = 0.09;
    auto back = device_from_json(device_to_json(d));
    ASSERT_EQ(back.couplings, d.couplings);
    ASSERT_EQ(back.readout_error, d.readout_error);
    ASSERT_EQ(back.coupling_error, d.coupling_error);
    ASSERT_EQ(back.error_2q, d.error_2q);
    auto bad = device_to_json(d);
    bad["error_2q"] = 1.5;
    ASSERT_THROW(device_from_json(bad), ParseError);
}

TEST(io, counts_lines) {
    CountsRecord r{{Pauli::Z, Pauli::X}, {5, 6}, 10, Counts::from_entries({{0b01, 4}, {0b10, 6}}), std::nullopt};
    auto line = counts_record_line(r);
    ASSERT_EQ(line, R"({"setting":["Z","X"],"qubits":[5,6],"shots":10,"counts":{"01":6,"10":4}})");
    std::istringstream in(line + "\n\n" + line + "\n");
    auto records = read_counts_jsonl(in);
    ASSERT_EQ(records.size(), 2u);
    ASSERT_EQ(records[1].counts, r.counts);
    ASSERT_EQ(records[1].setting, r.setting);
}

TEST(io, counts_errors_report_lines) {
    std::string good = R"({"setting":["Z"],"qubits":[0],"shots":2,"counts":{"0":2}})";
    std::istringstream in(good + "\n" + R"({"setting":["Q"],"qubits":[0],"shots":2,"counts":{"0":2}})" + "\n");
    try {
        read_counts_jsonl(in);
        FAIL();
    } catch (const ParseError &e) {
        ASSERT_EQ(e.line(), 2u);
    }
    std::istringstream broken(good + "\n" + good + "\n{not json\n");
    try {
        read_counts_jsonl(broken);
        FAIL();
    } catch (const ParseError &e) {
        ASSERT_EQ(e.line(), 3u);
    }
    std::istringstream width(R"({"setting":["Z"],"qubits":[0],"shots":2,"counts":{"01":2}})");
    ASSERT_THROW(read_counts_jsonl(width), ParseError);
}

TEST(io, counts_total_mismatch_warns) {
    std::istringstream in(R"({"setting":["Z"],"qubits":[0],"shots":5,"counts":{"0":2,"1":1}})");
    std::vector<std::string> warnings;
    auto records = read_counts_jsonl(in, &warnings);
    ASSERT_EQ(records[0].counts.total(), 3u);
    ASSERT_EQ(warnings.size(), 1u);
}

TEST(io, dataset_round_trip) {
    auto c = synthesize(default_ring_spec(8), 16);
    auto plan = TomographyPlan::complete({5, 6, 7, 8}, 64);
    auto ds = simulate_tomography(c, plan, NoiseModel::noiseless(), 1, 0);
    std::ostringstream out;
    for (const auto &r : dataset_records(ds)) {
        out << counts_record_line(r) << "\n";
    }
    std::istringstream in(out.str());
    auto back = dataset_from_records(plan, read_counts_jsonl(in));
    ASSERT_EQ(back.measured_qubits, ds.measured_qubits);
    for (std::size_t s = 0; s < ds.data.size(); ++s) {
        ASSERT_EQ(back.data[s].counts, ds.data[s].counts);
        ASSERT_EQ(back.data[s].measured_labels, ds.data[s].measured_labels);
    }
}

TEST(io, missing_setting_is_named) {
    auto c = synthesize(default_ring_spec(8), 16);
    auto plan = TomographyPlan::complete({5, 6, 7, 8}, 8);
    auto records = dataset_records(simulate_tomography(c, plan, NoiseModel::noiseless(), 1, 0));
    records.erase(records.begin() + 40);
    try {
        dataset_from_records(plan, records);
        FAIL();
    } catch (const IncompleteDataError &e) {
        ASSERT_NE(std::string(e.what()).find(setting_str(plan.settings[40])), std::string::npos);
    }
}

TEST(io, reconstruction_round_trip) {
    int chain[] = {0, 1, 2, 3};
    ReconstructedState r{reduced_density_matrix(ring_graph(8), chain), ReconstructionMethod::Mle, {5, 6, 7, 8},
                         {{4, 0}, {9, 0}}, 0.25};
    auto back = reconstruction_from_json(reconstruction_to_json(r));
    ASSERT_EQ(back.rho.matrix(), r.rho.matrix());
    ASSERT_EQ(back.subsystem, r.subsystem);
    ASSERT_EQ(back.postselection, r.postselection);
    ASSERT_EQ(back.retained_fraction, 0.25);
}

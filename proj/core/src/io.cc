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

#include <algorithm>
#include <cctype>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "entverify/errors.h"

namespace entverify {

namespace {

template <typename T>
T field(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(fmt::format("missing field \"{}\"", key));
    }
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(fmt::format("field \"{}\": {}", key, e.what()));
    }
}

std::string reason(const std::exception &e) {
    return e.what();
}

}  // namespace

Json graph_to_json(const Graph &g) {
    Json edges = Json::array();
    for (auto [a, b] : g.edges()) {
        edges.push_back({a, b});
    }
    return Json{{"n", g.size()}, {"edges", edges}};
}

Graph graph_from_json(const Json &j) {
    auto n = field<int>(j, "n");
    auto raw = field<std::vector<std::vector<int>>>(j, "edges");
    std::vector<Edge> edges;
    for (const auto &e : raw) {
        if (e.size() != 2) {
            throw ParseError("edges must be [a, b] pairs");
        }
        edges.emplace_back(e[0], e[1]);
    }
    return Graph(n, std::move(edges));
}

Json spec_to_json(const GraphStateSpec &s) {
    Json j = graph_to_json(s.graph);
    j["qubit_map"] = s.qubit_map;
    return j;
}

GraphStateSpec spec_from_json(const Json &j) {
    Graph g = graph_from_json(j);
    if (!j.contains("qubit_map")) {
        return GraphStateSpec(std::move(g));
    }
    return GraphStateSpec(std::move(g), field<std::vector<int>>(j, "qubit_map"));
}

Json circuit_to_json(const Circuit &c) {
    Json gates = Json::array();
    for (const auto &g : c.gates) {
        Json qubits = Json::array();
        for (int i = 0; i < g.arity(); ++i) {
            qubits.push_back(g.qubits[i]);
        }
        gates.push_back(Json{{"kind", std::string(gate_name(g.kind))}, {"qubits", qubits}});
    }
    return Json{{"n", c.n_qubits}, {"gates", gates}, {"layers", c.layers}};
}

Circuit circuit_from_json(const Json &j) {
    Circuit c(field<int>(j, "n"));
    if (c.n_qubits <= 0) {
        throw ParseError("circuit width must be positive");
    }
    auto gates = field<Json>(j, "gates");
    if (!gates.is_array()) {
        throw ParseError("\"gates\" must be an array");
    }
    for (const auto &g : gates) {
        GateKind kind;
        try {
            kind = gate_kind_from_name(field<std::string>(g, "kind"));
        } catch (const UsageError &e) {
            throw ParseError(reason(e));
        }
        auto qubits = field<std::vector<int>>(g, "qubits");
        if (static_cast<int>(qubits.size()) != gate_arity(kind)) {
            throw ParseError(fmt::format("{} takes {} qubits", gate_name(kind), gate_arity(kind)));
        }
        try {
            c.append(qubits.size() == 1 ? Gate::single(kind, qubits[0]) : Gate::pair(kind, qubits[0], qubits[1]));
        } catch (const UsageError &e) {
            throw ParseError(reason(e));
        }
    }
    if (j.contains("layers")) {
        c.layers = field<std::vector<std::vector<std::size_t>>>(j, "layers");
        if (!c.layers.empty() && !layers_are_valid(c)) {
            throw ParseError("circuit layers are inconsistent with its gates");
        }
    }
    return c;
}

Json device_to_json(const DeviceModel &d) {
    Json couplings = Json::array();
    for (auto [a, b] : d.couplings) {
        couplings.push_back({a, b});
    }
    Json pair_errors = Json::array();
    for (const auto &[pair, e] : d.coupling_error) {
        pair_errors.push_back({pair.first, pair.second, e});
    }
    return Json{{"n_qubits", d.n_qubits},     {"couplings", couplings},         {"error_1q", d.error_1q},
                {"error_2q", d.error_2q},     {"readout_error", d.readout_error}, {"coupling_error", pair_errors}};
}

DeviceModel device_from_json(const Json &j) {
    DeviceModel d;
    d.n_qubits = field<int>(j, "n_qubits");
    for (const auto &c : field<std::vector<std::vector<int>>>(j, "couplings")) {
        if (c.size() != 2) {
            throw ParseError("couplings must be [control, target] pairs");
        }
        d.couplings.emplace(c[0], c[1]);
    }
    d.error_1q = j.contains("error_1q") ? field<double>(j, "error_1q") : 0.0;
    d.error_2q = j.contains("error_2q") ? field<double>(j, "error_2q") : 0.0;
    if (j.contains("readout_error")) {
        d.readout_error = field<std::vector<double>>(j, "readout_error");
    }
    if (j.contains("coupling_error")) {
        for (const auto &e : field<std::vector<std::vector<double>>>(j, "coupling_error")) {
            if (e.size() != 3) {
                throw ParseError("coupling_error entries must be [a, b, error]");
            }
            auto a = static_cast<int>(e[0]);
            auto b = static_cast<int>(e[1]);
            d.coupling_error[{std::min(a, b), std::max(a, b)}] = e[2];
        }
    }
    try {
        d.validate();
    } catch (const UsageError &e) {
        throw ParseError(reason(e));
    }
    return d;
}

std::string counts_record_line(const CountsRecord &r) {
    Json setting = Json::array();
    for (Pauli p : r.setting) {
        setting.push_back(std::string(1, pauli_char(p)));
    }
    Json counts = Json::object();
    auto n = static_cast<int>(r.qubits.size());
    std::vector<std::pair<std::string, std::uint64_t>> entries;
    for (auto [key, count] : r.counts.entries()) {
        entries.emplace_back(bitstring(key, n), count);
    }
    std::sort(entries.begin(), entries.end());
    for (auto &[bits, count] : entries) {
        counts[bits] = count;
    }
    Json j{{"setting", setting}, {"qubits", r.qubits}, {"shots", r.shots}, {"counts", counts}};
    if (r.subsystem) {
        j["subsystem"] = *r.subsystem;
    }
    return j.dump();
}

CountsRecord counts_record_from_json(const Json &j) {
    CountsRecord r;
    for (const auto &label : field<std::vector<std::string>>(j, "setting")) {
        if (label.size() != 1) {
            throw ParseError(fmt::format("setting label \"{}\" is not a single character", label));
        }
        Pauli p;
        try {
            p = pauli_from_char(label[0]);
        } catch (const UsageError &e) {
            throw ParseError(reason(e));
        }
        if (p == Pauli::I) {
            throw ParseError("setting labels must be X, Y or Z");
        }
        r.setting.push_back(p);
    }
    r.qubits = field<std::vector<int>>(j, "qubits");
    if (r.qubits.size() != r.setting.size()) {
        throw ParseError(
            fmt::format("{} setting labels for {} measured qubits", r.setting.size(), r.qubits.size()));
    }
    if (r.qubits.size() > 64) {
        throw ParseError("records measure at most 64 qubits");
    }
    std::vector<int> sorted = r.qubits;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || (!sorted.empty() && sorted[0] < 0)) {
        throw ParseError("measured qubits must be distinct and non-negative");
    }
    r.shots = field<std::uint64_t>(j, "shots");
    auto counts = field<Json>(j, "counts");
    if (!counts.is_object()) {
        throw ParseError("\"counts\" must be an object of bitstring: count");
    }
    std::vector<Counts::Entry> entries;
    for (const auto &[bits, value] : counts.items()) {
        if (bits.size() != r.qubits.size()) {
            throw ParseError(fmt::format("bitstring \"{}\" has {} bits for {} qubits", bits, bits.size(),
                                         r.qubits.size()));
        }
        if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
            throw ParseError(fmt::format("count for \"{}\" is not a non-negative integer", bits));
        }
        entries.emplace_back(parse_bitstring(bits), value.get<std::uint64_t>());
    }
    r.counts = Counts::from_entries(std::move(entries));
    if (j.contains("subsystem")) {
        r.subsystem = field<std::vector<int>>(j, "subsystem");
    }
    return r;
}

std::vector<CountsRecord> read_counts_jsonl(std::istream &in, std::vector<std::string> *warnings) {
    std::vector<CountsRecord> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) {
            continue;
        }
        CountsRecord r;
        try {
            r = counts_record_from_json(Json::parse(line));
        } catch (const nlohmann::json::exception &e) {
            throw ParseError(fmt::format("line {}: {}", number, e.what()), number);
        } catch (const ParseError &e) {
            throw ParseError(fmt::format("line {}: {}", number, e.what()), number);
        }
        if (r.counts.total() != r.shots && warnings) {
            warnings->push_back(fmt::format("line {}: counts add up to {}, record says {} shots; using {}", number,
                                            r.counts.total(), r.shots, r.counts.total()));
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CountsRecord> dataset_records(const TomographyDataset &ds) {
    std::vector<CountsRecord> out;
    for (const auto &d : ds.data) {
        out.push_back(CountsRecord{d.measured_labels, ds.measured_qubits, d.counts.total(), d.counts, ds.plan.subsystem});
    }
    return out;
}

TomographyDataset dataset_from_records(const TomographyPlan &plan, const std::vector<CountsRecord> &records) {
    plan.validate();
    TomographyDataset ds;
    ds.plan = plan;
    ds.data.resize(plan.settings.size());
    bool have_qubits = false;
    for (std::size_t s = 0; s < plan.settings.size(); ++s) {
        bool found = false;
        for (const auto &r : records) {
            if (r.subsystem && *r.subsystem != plan.subsystem) {
                continue;
            }
            bool match = true;
            for (std::size_t j = 0; j < r.qubits.size() && match; ++j) {
                auto it = std::find(plan.subsystem.begin(), plan.subsystem.end(), r.qubits[j]);
                Pauli want = it == plan.subsystem.end() ? Pauli::Z : plan.settings[s][it - plan.subsystem.begin()];
                match = r.setting[j] == want;
            }
            for (int q : plan.subsystem) {
                match = match && std::find(r.qubits.begin(), r.qubits.end(), q) != r.qubits.end();
            }
            if (!match) {
                continue;
            }
            if (!have_qubits) {
                ds.measured_qubits = r.qubits;
                have_qubits = true;
            } else if (r.qubits != ds.measured_qubits) {
                throw IncompleteDataError(fmt::format("records for setting {} measure a different qubit list",
                                                      setting_str(plan.settings[s])));
            }
            if (!found) {
                ds.data[s].measured_labels = r.setting;
            }
            ds.data[s].counts.merge(r.counts);
            found = true;
        }
        if (!found || ds.data[s].counts.empty()) {
            std::vector<std::string> names;
            for (int q : plan.subsystem) {
                names.push_back(fmt::format("q{}", q));
            }
            throw IncompleteDataError(fmt::format("no data for setting {} on subsystem {}",
                                                  setting_str(plan.settings[s]), fmt::join(names, ",")));
        }
    }
    ds.validate();
    return ds;
}

Json reconstruction_to_json(const ReconstructedState &r) {
    const auto &m = r.rho.matrix();
    Json real = Json::array();
    Json imag = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        std::vector<double> re;
        std::vector<double> im;
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            re.push_back(m(i, k).real());
            im.push_back(m(i, k).imag());
        }
        real.push_back(re);
        imag.push_back(im);
    }
    Json post = Json::object();
    for (auto [q, bit] : r.postselection) {
        post[std::to_string(q)] = bit;
    }
    Json meta{{"subsystem", r.subsystem},
              {"method", r.method == ReconstructionMethod::Mle ? "mle" : "linear_inversion"},
              {"postselection", post},
              {"retained_fraction", r.retained_fraction}};
    return Json{{"real", real}, {"imag", imag}, {"metadata", meta}};
}

ReconstructedState reconstruction_from_json(const Json &j) {
    auto real = field<std::vector<std::vector<double>>>(j, "real");
    auto imag = field<std::vector<std::vector<double>>>(j, "imag");
    auto dim = static_cast<Eigen::Index>(real.size());
    if (imag.size() != real.size()) {
        throw ParseError("real and imag parts differ in shape");
    }
    ComplexMatrix m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        if (static_cast<Eigen::Index>(real[i].size()) != dim || static_cast<Eigen::Index>(imag[i].size()) != dim) {
            throw ParseError("density matrix must be square");
        }
        for (Eigen::Index k = 0; k < dim; ++k) {
            m(i, k) = Complex(real[i][k], imag[i][k]);
        }
    }
    auto meta = field<Json>(j, "metadata");
    std::optional<DensityMatrix> rho;
    try {
        rho.emplace(std::move(m));
    } catch (const Error &e) {
        throw ParseError(reason(e));
    }
    ReconstructedState r{*rho, ReconstructionMethod::Mle, field<std::vector<int>>(meta, "subsystem"), {}, 1.0};
    if (field<std::string>(meta, "method") == "linear_inversion") {
        r.method = ReconstructionMethod::LinearInversion;
    }
    if (meta.contains("postselection")) {
        auto post = field<Json>(meta, "postselection");
        for (const auto &[q, bit] : post.items()) {
            r.postselection[std::stoi(q)] = bit.get<int>();
        }
    }
    if (meta.contains("retained_fraction")) {
        r.retained_fraction = field<double>(meta, "retained_fraction");
    }
    if (static_cast<int>(r.subsystem.size()) != r.rho.num_qubits()) {
        throw ParseError("subsystem size differs from the matrix width");
    }
    return r;
}

}  // namespace entverify

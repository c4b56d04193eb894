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

#include "cli/pipeline.h"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <set>

#include <fmt/chrono.h>
#include <fmt/format.h>

#include "entverify/compiler.h"
#include "entverify/errors.h"
#include "entverify/parallel.h"
#include "entverify/rng.h"
#include "entverify/sampler.h"

namespace entverify::cli {

namespace {

constexpr std::uint64_t kNearestNeighborTag = 1;
constexpr std::uint64_t kDistance2Tag = 2;
constexpr std::uint64_t kDistance3Tag = 3;
constexpr std::uint64_t kAuxTag = 4;

std::uint64_t protocol_tag(Protocol p) {
    switch (p) {
        case Protocol::NearestNeighbor:
            return kNearestNeighborTag;
        case Protocol::Distance2:
            return kDistance2Tag;
        case Protocol::Distance3:
            return kDistance3Tag;
    }
    return 0;
}

int wrap(int i, int n) {
    return ((i % n) + n) % n;
}

BootstrapConfig bootstrap_config(const PipelineConfig &cfg, std::uint64_t seed) {
    BootstrapConfig b;
    b.resamples = cfg.resamples;
    b.level = cfg.level;
    b.seed = seed;
    return b;
}

Json estimate_json(const Estimate &e) {
    return Json{{"value", e.value},
                {"stddev", e.stddev},
                {"ci_low", e.ci_low},
                {"ci_high", e.ci_high},
                {"significant", e.significant()}};
}

std::string pair_label(std::pair<int, int> p) {
    return fmt::format("({},{})", p.first, p.second);
}

void require(const fs::path &path) {
    if (!fs::exists(path)) {
        throw Error(fmt::format("missing input {}", path.string()));
    }
}

fs::path chain_file(const fs::path &dir, std::size_t i) {
    return dir / "reconstructions" / fmt::format("chain_{:02}.json", i);
}

std::string utc_timestamp() {
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    return fmt::format("{:%Y-%m-%dT%H:%M:%SZ}", fmt::gmtime(now));
}

void write_metadata(const fs::path &dir, const std::string &command) {
    Json meta{{"command", command}, {"created", utc_timestamp()}, {"threads", worker_count()}};
    write_json(dir / "metadata.json", meta);
}

void write_text(const fs::path &path, const std::string &text) {
    std::ofstream out(path);
    if (!out) {
        throw Error(fmt::format("cannot write {}", path.string()));
    }
    out << text;
}

}  // namespace

CompiledRing compile_ring(const PipelineConfig &cfg) {
    GraphStateSpec spec = ring_spec(cfg);
    DeviceModel device = resolve_device(cfg);
    if (spec.max_qubit() >= device.n_qubits) {
        throw UsageError(
            fmt::format("qubit {} is not on the {}-qubit device", spec.max_qubit(), device.n_qubits));
    }
    Circuit synthesized = synthesize(spec, device.n_qubits);
    Circuit lowered = lower(synthesized, device);
    Circuit compiled = schedule(optimize(lowered));
    return {std::move(spec), std::move(device), std::move(synthesized), std::move(lowered), std::move(compiled)};
}

std::vector<int> ring_qubits(const GraphStateSpec &spec) {
    return spec.qubit_map;
}

std::vector<TomographyDataset> simulate_chains(const CompiledRing &ring, const PipelineConfig &cfg) {
    NoiseModel noise = NoiseModel::from_device(ring.device);
    auto plans = chain_plans(ring.spec, cfg.shots);
    std::vector<TomographyDataset> out;
    for (std::size_t i = 0; i < plans.size(); i++) {
        out.push_back(simulate_tomography(ring.compiled, plans[i], noise, cfg.seed, i));
    }
    return out;
}

std::vector<ReconstructedState> reconstruct_chains(const std::vector<TomographyDataset> &datasets) {
    std::vector<ReconstructedState> out;
    for (const auto &ds : datasets) {
        out.push_back(reconstruct(ds));
    }
    return out;
}

std::vector<ProtocolRow> analyze_protocol(const std::vector<TomographyDataset> &datasets, const GraphStateSpec &spec,
                                          Protocol protocol, const PipelineConfig &cfg) {
    int n = spec.graph.size();
    if (protocol != Protocol::NearestNeighbor && n < 6) {
        throw UsageError(fmt::format("{} needs a ring of at least 6 qubits, got {}", protocol_name(protocol), n));
    }
    auto [pa, pb] = protocol_pair(protocol);
    std::vector<ProtocolRow> rows;
    for (std::size_t i = 0; i < datasets.size(); i++) {
        const TomographyDataset &ds = datasets[i];
        ProtocolRow row;
        row.plan = i;
        row.chain = ds.plan.subsystem;
        row.pair = {row.chain.at(pa), row.chain.at(pb)};
        MarginalTable table;
        if (protocol == Protocol::NearestNeighbor) {
            table = marginalize(ds);
        } else {
            int e = spec.qubit(wrap(static_cast<int>(i) - 1, n));
            int f = spec.qubit(wrap(static_cast<int>(i) + 4, n));
            TomographyDataset selected = postselect(ds, {{e, 0}, {f, 0}});
            row.retained_fraction = selected.postselection->overall_fraction;
            row.warnings = selected.warnings;
            table = marginalize(selected);
        }
        row.estimate = bootstrap_protocol(table, protocol, bootstrap_config(cfg, derive_seed(cfg.seed, protocol_tag(protocol), i)));
        rows.push_back(std::move(row));
    }
    return rows;
}

VerdictReport analyze_verdict(const std::vector<TomographyDataset> &datasets, const GraphStateSpec &spec,
                              const std::vector<ProtocolRow> &nn, const PipelineConfig &cfg) {
    VerdictReport report;
    for (const auto &row : nn) {
        report.pairs.push_back({row.pair, row.estimate});
    }
    std::vector<int> ring = ring_qubits(spec);
    report.initial_hypotheses = ring_hypotheses(ring, report.pairs).size();
    report.verdict = infer_full_entanglement(ring, report.pairs);
    std::set<std::pair<std::vector<int>, std::vector<int>>> done;
    while (report.verdict.status != VerdictStatus::FullyEntangled) {
        bool ran = false;
        for (const auto &s : report.verdict.suggestions) {
            if (!done.insert({s.chain, s.block}).second) {
                continue;
            }
            auto plan = std::find_if(datasets.begin(), datasets.end(),
                                     [&](const TomographyDataset &ds) { return ds.plan.subsystem == s.chain; });
            if (plan == datasets.end()) {
                continue;
            }
            std::vector<int> positions;
            for (int q : s.block) {
                positions.push_back(static_cast<int>(std::find(s.chain.begin(), s.chain.end(), q) - s.chain.begin()));
            }
            auto seed = derive_seed(cfg.seed, kAuxTag, report.aux.size());
            Estimate e = bootstrap_pt(marginalize(*plan), positions, bootstrap_config(cfg, seed));
            report.aux.push_back({s.chain, s.block, e});
            ran = true;
        }
        if (!ran) {
            break;
        }
        report.verdict = infer_full_entanglement(ring, report.pairs, report.aux);
    }
    return report;
}

Json protocol_json(Protocol protocol, const std::vector<ProtocolRow> &rows, const PipelineConfig &cfg) {
    Json estimates = Json::array();
    for (const auto &row : rows) {
        Json j{{"plan", row.plan}, {"chain", row.chain}, {"pair", {row.pair.first, row.pair.second}}};
        j["negativity"] = estimate_json(row.estimate);
        if (row.retained_fraction) {
            j["retained_fraction"] = *row.retained_fraction;
        }
        if (!row.warnings.empty()) {
            j["warnings"] = row.warnings;
        }
        estimates.push_back(std::move(j));
    }
    return Json{{"protocol", protocol_name(protocol)},
                {"resamples", cfg.resamples},
                {"level", cfg.level},
                {"seed", cfg.seed},
                {"estimates", std::move(estimates)}};
}

std::string protocol_csv(const std::vector<ProtocolRow> &rows) {
    std::string out = "pair,negativity,stddev,ci_low,ci_high,significant\n";
    for (const auto &row : rows) {
        const Estimate &e = row.estimate;
        out += fmt::format("\"{}\",{:.6f},{:.6f},{:.6f},{:.6f},{}\n", pair_label(row.pair), e.value, e.stddev,
                           e.ci_low, e.ci_high, e.significant() ? "yes" : "no");
    }
    return out;
}

Json verdict_json(const VerdictReport &report) {
    Json pairs = Json::array();
    for (const auto &p : report.pairs) {
        pairs.push_back(Json{{"pair", {p.pair.first, p.pair.second}}, {"negativity", estimate_json(p.estimate)}});
    }
    Json aux = Json::array();
    for (std::size_t i = 0; i < report.aux.size(); i++) {
        const auto &a = report.aux[i];
        bool consumed = std::find(report.verdict.aux_consumed.begin(), report.verdict.aux_consumed.end(), i) !=
                        report.verdict.aux_consumed.end();
        aux.push_back(Json{{"chain", a.chain},
                           {"block", a.block},
                           {"negativity", estimate_json(a.estimate)},
                           {"refuted_hypotheses", consumed}});
    }
    Json surviving = Json::array();
    for (const auto &h : report.verdict.surviving) {
        surviving.push_back(Json{{"block_a", h.block_a}, {"block_b", h.block_b}, {"text", h.str()}});
    }
    Json suggestions = Json::array();
    for (const auto &s : report.verdict.suggestions) {
        suggestions.push_back(Json{{"hypothesis", s.hypothesis}, {"chain", s.chain}, {"block", s.block}});
    }
    return Json{{"status", status_name(report.verdict.status)},
                {"pairs", std::move(pairs)},
                {"initial_hypotheses", report.initial_hypotheses},
                {"aux_tests", std::move(aux)},
                {"surviving", std::move(surviving)},
                {"suggestions", std::move(suggestions)}};
}

Json fidelity_json(const FidelityBound &bound, const std::vector<ReconstructedState> &chains) {
    Json per_chain = Json::array();
    for (std::size_t i = 0; i < chains.size(); i++) {
        per_chain.push_back(Json{{"chain", chains[i].subsystem}, {"fidelity", bound.per_chain.at(i)}});
    }
    return Json{{"bound", bound.bound},
                {"weakest_chain", chains.at(bound.weakest).subsystem},
                {"per_chain", std::move(per_chain)}};
}

void write_compiled(const fs::path &dir, const PipelineConfig &cfg, const CompiledRing &ring) {
    fs::create_directories(dir);
    write_json(dir / "config.json", config_to_json(cfg));
    write_json(dir / "graph.json", spec_to_json(ring.spec));
    write_json(dir / "device.json", device_to_json(ring.device));
    write_json(dir / "circuit.synth.json", circuit_to_json(ring.synthesized));
    write_json(dir / "circuit.lowered.json", circuit_to_json(ring.lowered));
    write_json(dir / "circuit.json", circuit_to_json(ring.compiled));
}

GraphStateSpec read_spec(const fs::path &dir) {
    require(dir / "graph.json");
    return spec_from_json(read_json(dir / "graph.json"));
}

CompiledRing read_compiled(const fs::path &dir) {
    for (const char *name : {"graph.json", "device.json", "circuit.synth.json", "circuit.lowered.json", "circuit.json"}) {
        require(dir / name);
    }
    return {spec_from_json(read_json(dir / "graph.json")), device_from_json(read_json(dir / "device.json")),
            circuit_from_json(read_json(dir / "circuit.synth.json")),
            circuit_from_json(read_json(dir / "circuit.lowered.json")),
            circuit_from_json(read_json(dir / "circuit.json"))};
}

void write_counts(const fs::path &dir, const std::vector<TomographyDataset> &datasets) {
    fs::create_directories(dir);
    std::ofstream out(dir / "counts.jsonl");
    if (!out) {
        throw Error(fmt::format("cannot write {}", (dir / "counts.jsonl").string()));
    }
    for (const auto &ds : datasets) {
        for (const auto &r : dataset_records(ds)) {
            out << counts_record_line(r) << "\n";
        }
    }
}

std::vector<TomographyDataset> read_counts(const fs::path &dir, const GraphStateSpec &spec,
                                           std::vector<std::string> *warnings) {
    fs::path path = dir / "counts.jsonl";
    require(path);
    std::ifstream in(path);
    auto records = read_counts_jsonl(in, warnings);
    std::vector<TomographyDataset> out;
    for (const auto &plan : chain_plans(spec)) {
        out.push_back(dataset_from_records(plan, records));
    }
    return out;
}

void write_reconstructions(const fs::path &dir, const std::vector<ReconstructedState> &states) {
    fs::create_directories(dir / "reconstructions");
    for (std::size_t i = 0; i < states.size(); i++) {
        write_json(chain_file(dir, i), reconstruction_to_json(states[i]));
    }
}

std::vector<ReconstructedState> read_reconstructions(const fs::path &dir, std::size_t count) {
    std::vector<ReconstructedState> out;
    for (std::size_t i = 0; i < count; i++) {
        require(chain_file(dir, i));
        out.push_back(reconstruction_from_json(read_json(chain_file(dir, i))));
    }
    return out;
}

void run_synth(const PipelineConfig &cfg) {
    cfg.validate();
    CompiledRing ring = compile_ring(cfg);
    write_compiled(cfg.out, cfg, ring);
    write_metadata(cfg.out, "synth");
}

void run_simulate(const PipelineConfig &cfg) {
    cfg.validate();
    CompiledRing ring = read_compiled(cfg.out);
    ring.device = resolve_device(cfg);
    write_json(fs::path(cfg.out) / "config.json", config_to_json(cfg));
    write_counts(cfg.out, simulate_chains(ring, cfg));
    write_metadata(cfg.out, "simulate");
}

void run_ingest(const PipelineConfig &cfg, const fs::path &counts_path) {
    cfg.validate();
    require(counts_path);
    GraphStateSpec spec = ring_spec(cfg);
    std::ifstream in(counts_path);
    std::vector<std::string> warnings;
    auto records = read_counts_jsonl(in, &warnings);
    std::vector<TomographyDataset> datasets;
    for (const auto &plan : chain_plans(spec, cfg.shots)) {
        datasets.push_back(dataset_from_records(plan, records));
    }
    fs::path dir = cfg.out;
    fs::create_directories(dir);
    write_json(dir / "config.json", config_to_json(cfg));
    write_json(dir / "graph.json", spec_to_json(spec));
    write_counts(dir, datasets);
    write_json(dir / "ingest.json",
               Json{{"source", counts_path.string()}, {"records", records.size()}, {"warnings", warnings}});
    write_metadata(dir, "ingest");
}

void run_reconstruct(const PipelineConfig &cfg) {
    cfg.validate();
    GraphStateSpec spec = read_spec(cfg.out);
    write_reconstructions(cfg.out, reconstruct_chains(read_counts(cfg.out, spec)));
    write_metadata(cfg.out, "reconstruct");
}

void run_analyze(const PipelineConfig &cfg, const std::string &mode) {
    cfg.validate();
    fs::path dir = cfg.out;
    GraphStateSpec spec = read_spec(dir);
    fs::create_directories(dir / "analysis");
    if (mode == "fidelity") {
        auto chains = read_reconstructions(dir, static_cast<std::size_t>(spec.graph.size()));
        write_json(dir / "analysis" / "fidelity.json", fidelity_json(fidelity_upper_bound(chains, spec), chains));
    } else if (mode == "verdict") {
        auto datasets = read_counts(dir, spec);
        auto nn = analyze_protocol(datasets, spec, Protocol::NearestNeighbor, cfg);
        write_json(dir / "analysis" / "verdict.json", verdict_json(analyze_verdict(datasets, spec, nn, cfg)));
    } else {
        Protocol p = protocol_from_name(mode);
        auto rows = analyze_protocol(read_counts(dir, spec), spec, p, cfg);
        write_json(dir / "analysis" / fmt::format("{}.json", mode), protocol_json(p, rows, cfg));
        write_text(dir / "analysis" / fmt::format("{}.csv", mode), protocol_csv(rows));
    }
    write_metadata(dir, fmt::format("analyze {}", mode));
}

Json run_pipeline(const PipelineConfig &cfg) {
    cfg.validate();
    fs::path dir = cfg.out;
    CompiledRing ring = compile_ring(cfg);
    write_compiled(dir, cfg, ring);

    auto datasets = simulate_chains(ring, cfg);
    write_counts(dir, datasets);

    auto chains = reconstruct_chains(datasets);
    write_reconstructions(dir, chains);

    fs::create_directories(dir / "analysis");
    Json report{{"n", cfg.n}, {"ring", ring_qubits(ring.spec)}, {"shots", cfg.shots}, {"seed", cfg.seed}};
    std::vector<ProtocolRow> nn;
    for (Protocol p : {Protocol::NearestNeighbor, Protocol::Distance2, Protocol::Distance3}) {
        std::string name(protocol_name(p));
        if (p != Protocol::NearestNeighbor && cfg.n < 6) {
            report[name] = nullptr;
            continue;
        }
        auto rows = analyze_protocol(datasets, ring.spec, p, cfg);
        write_json(dir / "analysis" / (name + ".json"), protocol_json(p, rows, cfg));
        write_text(dir / "analysis" / (name + ".csv"), protocol_csv(rows));
        Json summary = Json::array();
        for (const auto &row : rows) {
            summary.push_back(Json{{"pair", {row.pair.first, row.pair.second}},
                                   {"negativity", row.estimate.value},
                                   {"ci", {row.estimate.ci_low, row.estimate.ci_high}},
                                   {"significant", row.estimate.significant()}});
        }
        report[name] = std::move(summary);
        if (p == Protocol::NearestNeighbor) {
            nn = std::move(rows);
        }
    }

    VerdictReport verdict = analyze_verdict(datasets, ring.spec, nn, cfg);
    write_json(dir / "analysis" / "verdict.json", verdict_json(verdict));
    Json surviving = Json::array();
    for (const auto &h : verdict.verdict.surviving) {
        surviving.push_back(h.str());
    }
    report["verdict"] = Json{{"status", status_name(verdict.verdict.status)},
                             {"aux_tests", verdict.aux.size()},
                             {"surviving", std::move(surviving)}};

    FidelityBound bound = fidelity_upper_bound(chains, ring.spec);
    write_json(dir / "analysis" / "fidelity.json", fidelity_json(bound, chains));
    report["fidelity_bound"] = bound.bound;
    report["weakest_chain"] = chains.at(bound.weakest).subsystem;

    write_json(dir / "report.json", report);
    write_metadata(dir, "pipeline");
    return report;
}

}  // namespace entverify::cli

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

#include <cstdlib>
#include <filesystem>
#include <iostream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "cli/config.h"
#include "cli/pipeline.h"
#include "entverify/errors.h"

using namespace entverify;
using namespace entverify::cli;

namespace {

struct Overrides {
    std::string config;
    std::optional<int> n;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> shots;
    std::optional<std::size_t> resamples;
    std::optional<double> noise_1q;
    std::optional<double> noise_2q;
    std::optional<double> readout;
    std::optional<std::string> device;
    std::optional<std::string> out;
};

void add_common(CLI::App *cmd, Overrides &o) {
    cmd->add_option("--config", o.config, "JSON config file");
    cmd->add_option("--n", o.n, "ring size");
    cmd->add_option("--seed", o.seed, "master seed");
    cmd->add_option("--shots", o.shots, "shots per setting");
    cmd->add_option("--resamples", o.resamples, "bootstrap resamples");
    cmd->add_option("--noise-1q", o.noise_1q, "single-qubit depolarizing probability");
    cmd->add_option("--noise-2q", o.noise_2q, "two-qubit depolarizing probability");
    cmd->add_option("--readout", o.readout, "readout flip probability");
    cmd->add_option("--device", o.device, "ibmqx5 or a device JSON file");
    cmd->add_option("--out", o.out, "run directory");
}

// Later sources win: defaults, the run directory's config.json (for steps
// that continue an existing run), --config, then flags.
PipelineConfig resolve(const Overrides &o, bool continue_run) {
    PipelineConfig cfg;
    if (o.out) {
        cfg.out = *o.out;
    }
    if (!o.config.empty()) {
        cfg = load_config(o.config, cfg);
    } else if (continue_run && std::filesystem::exists(std::filesystem::path(cfg.out) / "config.json")) {
        cfg = load_config(std::filesystem::path(cfg.out) / "config.json", cfg);
    }
    if (o.out) cfg.out = *o.out;
    if (o.n) cfg.n = *o.n;
    if (o.seed) cfg.seed = *o.seed;
    if (o.shots) cfg.shots = *o.shots;
    if (o.resamples) cfg.resamples = *o.resamples;
    if (o.noise_1q) cfg.noise_1q = *o.noise_1q;
    if (o.noise_2q) cfg.noise_2q = *o.noise_2q;
    if (o.readout) cfg.readout = *o.readout;
    if (o.device) cfg.device = *o.device;
    cfg.validate();
    return cfg;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Graph-state entanglement verification"};
    app.require_subcommand(1);
    Overrides o;

    auto *synth = app.add_subcommand("synth", "compile the ring graph state for the device");
    auto *simulate = app.add_subcommand("simulate", "simulate chain tomography of a compiled run");
    auto *ingest = app.add_subcommand("ingest", "import hardware counts for the configured ring");
    auto *reconstruct = app.add_subcommand("reconstruct", "reconstruct every 4-qubit chain");
    auto *analyze = app.add_subcommand("analyze", "entanglement analysis of a run");
    auto *pipeline = app.add_subcommand("pipeline", "run every step with simulated data");
    for (auto *cmd : {synth, simulate, ingest, reconstruct, analyze, pipeline}) {
        add_common(cmd, o);
    }
    std::string counts_path;
    ingest->add_option("counts", counts_path, "counts JSONL file")->required();
    std::string mode;
    analyze->add_option("--mode", mode, "analysis")
        ->required()
        ->check(CLI::IsMember({"nn", "dist2", "dist3", "verdict", "fidelity"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (synth->parsed()) {
            run_synth(resolve(o, false));
        } else if (simulate->parsed()) {
            run_simulate(resolve(o, true));
        } else if (ingest->parsed()) {
            run_ingest(resolve(o, false), counts_path);
        } else if (reconstruct->parsed()) {
            run_reconstruct(resolve(o, true));
        } else if (analyze->parsed()) {
            run_analyze(resolve(o, true), mode);
        } else if (pipeline->parsed()) {
            PipelineConfig cfg = resolve(o, false);
            Json report = run_pipeline(cfg);
            std::cout << fmt::format("{}: {} (fidelity bound {:.4f})\n", cfg.out,
                                     report["verdict"]["status"].get<std::string>(),
                                     report["fidelity_bound"].get<double>());
        }
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

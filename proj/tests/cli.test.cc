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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

#include "cli/config.h"
#include "cli/pipeline.h"
#include "entverify/errors.h"

using namespace entverify;
using namespace entverify::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string &name) {
    fs::path p = fs::temp_directory_path() / ("entverify-cli-test-" + name);
    fs::remove_all(p);
    return p;
}

PipelineConfig small_run(const fs::path &out) {
    PipelineConfig cfg;
    cfg.n = 6;
    cfg.shots = 256;
    cfg.resamples = 50;
    cfg.seed = 3;
    cfg.out = out.string();
    return cfg;
}

std::string slurp(const fs::path &path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST(config, flags_override_file_values) {
    PipelineConfig base;
    base.seed = 99;
    auto cfg = config_from_json(Json::parse(R"({"n": 10, "noise_2q": 0.01})"), base);
    ASSERT_EQ(cfg.n, 10);
    ASSERT_EQ(cfg.seed, 99u);
    ASSERT_DOUBLE_EQ(*cfg.noise_2q, 0.01);
    ASSERT_FALSE(cfg.readout.has_value());
    ASSERT_EQ(config_from_json(config_to_json(cfg)).n, 10);
}

TEST(config, rejects_bad_values) {
    ASSERT_THROW(config_from_json(Json::parse(R"({"ring": 8})")), ParseError);
    PipelineConfig cfg;
    cfg.n = 7;
    ASSERT_THROW(cfg.validate(), UsageError);
    cfg.n = 8;
    cfg.readout = 1.5;
    ASSERT_THROW(cfg.validate(), UsageError);
    cfg.readout.reset();
    cfg.qubit_map = {1, 2, 3};
    ASSERT_THROW(cfg.validate(), UsageError);
}

TEST(config, overrides_device_noise) {
    PipelineConfig cfg;
    cfg.noise_2q = 0.0;
    cfg.readout = 0.01;
    auto d = resolve_device(cfg);
    ASSERT_EQ(d.error_2q, 0.0);
    ASSERT_TRUE(d.coupling_error.empty());
    ASSERT_EQ(d.readout_error.at(5), 0.01);
}

TEST(pipeline, odd_ring_writes_nothing) {
    auto dir = scratch("odd");
    auto cfg = small_run(dir);
    cfg.n = 5;
    ASSERT_THROW(run_pipeline(cfg), UsageError);
    ASSERT_FALSE(fs::exists(dir));
}

TEST(pipeline, identical_runs_give_identical_reports) {
    auto a = scratch("a");
    auto b = scratch("b");
    Json ra = run_pipeline(small_run(a));
    Json rb = run_pipeline(small_run(b));
    ASSERT_EQ(ra, rb);
    for (const char *name : {"report.json", "analysis/nn.json", "analysis/dist3.csv", "analysis/verdict.json",
                             "counts.jsonl", "reconstructions/chain_05.json"}) {
        ASSERT_EQ(slurp(a / name), slurp(b / name)) << name;
    }
    ASSERT_TRUE(fs::exists(a / "metadata.json"));
    fs::remove_all(a);
    fs::remove_all(b);
}

TEST(pipeline, steps_reproduce_the_pipeline) {
    auto whole = scratch("whole");
    auto steps = scratch("steps");
    run_pipeline(small_run(whole));
    auto cfg = small_run(steps);
    run_synth(cfg);
    run_simulate(cfg);
    run_reconstruct(cfg);
    run_analyze(cfg, "nn");
    run_analyze(cfg, "fidelity");
    ASSERT_EQ(slurp(whole / "counts.jsonl"), slurp(steps / "counts.jsonl"));
    ASSERT_EQ(slurp(whole / "analysis/nn.json"), slurp(steps / "analysis/nn.json"));
    ASSERT_EQ(slurp(whole / "analysis/fidelity.json"), slurp(steps / "analysis/fidelity.json"));
    fs::remove_all(whole);
    fs::remove_all(steps);
}

TEST(pipeline, analysis_names_missing_inputs) {
    auto dir = scratch("missing");
    auto cfg = small_run(dir);
    run_synth(cfg);
    try {
        run_analyze(cfg, "fidelity");
        FAIL();
    } catch (const Error &e) {
        ASSERT_NE(std::string(e.what()).find("chain_00.json"), std::string::npos);
    }
    ASSERT_THROW(run_analyze(cfg, "nn"), Error);
    fs::remove_all(dir);
}

TEST(ingest, names_the_missing_setting) {
    auto src = scratch("src");
    run_pipeline(small_run(src));
    std::ifstream in(src / "counts.jsonl");
    fs::path partial = fs::temp_directory_path() / "entverify-cli-test-partial.jsonl";
    std::ofstream out(partial);
    std::string line;
    for (int i = 0; i < 80 && std::getline(in, line); i++) {
        out << line << "\n";
    }
    out.close();
    auto dst = scratch("dst");
    auto cfg = small_run(dst);
    try {
        run_ingest(cfg, partial);
        FAIL();
    } catch (const IncompleteDataError &e) {
        ASSERT_NE(std::string(e.what()).find("ZZZZ"), std::string::npos) << e.what();
    }
    run_ingest(cfg, src / "counts.jsonl");
    ASSERT_EQ(slurp(src / "counts.jsonl"), slurp(dst / "counts.jsonl"));
    fs::remove_all(src);
    fs::remove_all(dst);
    fs::remove(partial);
}

TEST(pipeline, distance_tests_need_six_qubits) {
    auto dir = scratch("four");
    auto cfg = small_run(dir);
    cfg.n = 4;
    Json report = run_pipeline(cfg);
    ASSERT_TRUE(report["dist2"].is_null());
    ASSERT_EQ(report["nn"].size(), 4u);
    ASSERT_THROW(run_analyze(cfg, "dist2"), UsageError);
    fs::remove_all(dir);
}

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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "entverify/device.h"
#include "entverify/graph.h"
#include "entverify/io.h"
#include "entverify/sampler.h"

namespace entverify::cli {

struct PipelineConfig {
    int n = 8;
    /// Physical qubit per ring vertex; empty selects the default placement.
    std::vector<int> qubit_map;
    /// "ibmqx5" or a path to a device JSON file.
    std::string device = "ibmqx5";
    std::optional<double> noise_1q;
    std::optional<double> noise_2q;
    std::optional<double> readout;
    std::uint64_t shots = 2048;
    std::size_t resamples = 1000;
    double level = 0.95;
    std::uint64_t seed = 2018;
    std::string out = "entverify-run";

    /// Throws UsageError naming the offending field.
    void validate() const;
};

Json config_to_json(const PipelineConfig &cfg);
/// Missing keys keep their defaults; unknown keys are rejected.
PipelineConfig config_from_json(const Json &j, PipelineConfig base = {});
PipelineConfig load_config(const std::filesystem::path &path, PipelineConfig base = {});

GraphStateSpec ring_spec(const PipelineConfig &cfg);
/// The named or loaded device with the config's noise overrides applied.
DeviceModel resolve_device(const PipelineConfig &cfg);

Json read_json(const std::filesystem::path &path);
/// Writes j with two-space indentation and a trailing newline.
void write_json(const std::filesystem::path &path, const Json &j);

}  // namespace entverify::cli

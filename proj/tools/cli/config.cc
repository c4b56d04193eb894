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

#include "cli/config.h"

#include <fstream>

#include <fmt/format.h>

#include "entverify/errors.h"

namespace entverify::cli {

void PipelineConfig::validate() const {
    if (n < 4 || n > 16 || n % 2 != 0) {
        throw UsageError(fmt::format("ring size n = {} must be even and between 4 and 16", n));
    }
    if (!qubit_map.empty() && static_cast<int>(qubit_map.size()) != n) {
        throw UsageError(fmt::format("qubit_map lists {} qubits for a ring of {}", qubit_map.size(), n));
    }
    if (shots < 1) {
        throw UsageError("shots must be at least 1");
    }
    if (resamples < 2) {
        throw UsageError("resamples must be at least 2");
    }
    if (!(level > 0 && level < 1)) {
        throw UsageError(fmt::format("confidence level {} outside (0, 1)", level));
    }
    for (auto [name, value] : {std::pair{"noise_1q", noise_1q}, {"noise_2q", noise_2q}, {"readout", readout}}) {
        if (value && !(*value >= 0 && *value <= 1)) {
            throw UsageError(fmt::format("{} = {} is not a probability", name, *value));
        }
    }
    if (out.empty()) {
        throw UsageError("output directory must not be empty");
    }
}

Json config_to_json(const PipelineConfig &cfg) {
    auto optional = [](const std::optional<double> &v) { return v ? Json(*v) : Json(nullptr); };
    return Json{{"n", cfg.n},
                {"qubit_map", cfg.qubit_map},
                {"device", cfg.device},
                {"noise_1q", optional(cfg.noise_1q)},
                {"noise_2q", optional(cfg.noise_2q)},
                {"readout", optional(cfg.readout)},
                {"shots", cfg.shots},
                {"resamples", cfg.resamples},
                {"level", cfg.level},
                {"seed", cfg.seed},
                {"out", cfg.out}};
}

PipelineConfig config_from_json(const Json &j, PipelineConfig cfg) {
    if (!j.is_object()) {
        throw ParseError("config must be a JSON object");
    }
    auto optional = [](const Json &v) { return v.is_null() ? std::nullopt : std::optional<double>(v.get<double>()); };
    for (const auto &[key, value] : j.items()) {
        try {
            if (key == "n") {
                cfg.n = value.get<int>();
            } else if (key == "qubit_map") {
                cfg.qubit_map = value.get<std::vector<int>>();
            } else if (key == "device") {
                cfg.device = value.get<std::string>();
            } else if (key == "noise_1q") {
                cfg.noise_1q = optional(value);
            } else if (key == "noise_2q") {
                cfg.noise_2q = optional(value);
            } else if (key == "readout") {
                cfg.readout = optional(value);
            } else if (key == "shots") {
                cfg.shots = value.get<std::uint64_t>();
            } else if (key == "resamples") {
                cfg.resamples = value.get<std::size_t>();
            } else if (key == "level") {
                cfg.level = value.get<double>();
            } else if (key == "seed") {
                cfg.seed = value.get<std::uint64_t>();
            } else if (key == "out") {
                cfg.out = value.get<std::string>();
            } else {
                throw ParseError(fmt::format("unknown config key \"{}\"", key));
            }
        } catch (const nlohmann::json::exception &e) {
            throw ParseError(fmt::format("config key \"{}\": {}", key, e.what()));
        }
    }
    return cfg;
}

PipelineConfig load_config(const std::filesystem::path &path, PipelineConfig base) {
    try {
        return config_from_json(read_json(path), std::move(base));
    } catch (const ParseError &e) {
        throw ParseError(fmt::format("{}: {}", path.string(), e.what()));
    }
}

GraphStateSpec ring_spec(const PipelineConfig &cfg) {
    cfg.validate();
    if (cfg.qubit_map.empty()) {
        return default_ring_spec(cfg.n);
    }
    return GraphStateSpec(ring_graph(cfg.n), cfg.qubit_map);
}

DeviceModel resolve_device(const PipelineConfig &cfg) {
    DeviceModel d = cfg.device == "ibmqx5" ? DeviceModel::ibmqx5() : device_from_json(read_json(cfg.device));
    if (cfg.noise_1q) {
        d.error_1q = *cfg.noise_1q;
    }
    if (cfg.noise_2q) {
        d.error_2q = *cfg.noise_2q;
        d.coupling_error.clear();
    }
    if (cfg.readout) {
        d.readout_error.assign(d.n_qubits, *cfg.readout);
    }
    d.validate();
    return d;
}

Json read_json(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(fmt::format("cannot read {}", path.string()));
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(fmt::format("{}: {}", path.string(), e.what()));
    }
}

void write_json(const std::filesystem::path &path, const Json &j) {
    std::ofstream out(path);
    if (!out) {
        throw Error(fmt::format("cannot write {}", path.string()));
    }
    out << j.dump(2) << "\n";
}

}  // namespace entverify::cli

// Copyright 2026 The Mirrorbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mirrorbench/analysis.hpp"
#include "mirrorbench/circuits.hpp"
#include "mirrorbench/noise.hpp"
#include "mirrorbench/suite.hpp"

namespace mirrorbench {

inline constexpr const char *kToolName = "mirrorbench";
inline constexpr const char *kToolVersion = "0.1.0";

using Json = nlohmann::json;

std::string read_text_file(const std::string &path);
/// Writes to `path.tmp` and renames over `path`; creates parent directories.
void write_file_atomic(const std::string &path, const std::string &content);
Json read_json_file(const std::string &path);
/// Pretty-printed with sorted keys and a trailing newline, so equal values
/// give byte-identical files.
std::string dump_json(const Json &j);

/// Header fields carried by every output file.
Json tool_header(uint64_t seed);

struct DeviceConfig {
    std::string name;
    ConnectivityGraph graph;
    GateSet gate_set;
    /// Path to an error-rate file, resolved against the config's directory.
    std::optional<std::string> error_rates_path;
};

/// Throws Config with the JSON path of the offending field, e.g. "edges[2][1]".
DeviceConfig parse_device_config(const Json &j, const std::string &base_dir = "");
DeviceConfig load_device_config(const std::string &path);
Json device_config_to_json(const DeviceConfig &config);

/// Average-gate infidelities (fidelity = "average") are converted to
/// entanglement infidelities on ingestion.
ErrorRateSet parse_error_rates(const Json &j);
ErrorRateSet load_error_rates(const std::string &path);
Json error_rates_to_json(const ErrorRateSet &rates);

Json layer_to_json(const Layer &layer);
Layer layer_from_json(const Json &j, size_t width, const std::string &path);
Json circuit_to_json(const Circuit &circuit);
Circuit circuit_from_json(const Json &j);

/// Circuit file of one suite entry, including construction metadata.
Json suite_circuit_to_json(const SuiteCircuit &sc, uint64_t seed);

/// Minimal view of a circuit file needed downstream.
struct CircuitFile {
    std::string id;
    MirrorGenerator generator = MirrorGenerator::Randomized;
    size_t width = 0;
    size_t depth = 0;
    std::string target;
    Circuit circuit;
};
CircuitFile circuit_file_from_json(const Json &j);

struct SuiteManifest {
    SuiteConfig config;
    DeviceConfig device;
    /// (id, relative file path) for every circuit, in generation order.
    std::vector<std::pair<std::string, std::string>> files;
};

Json manifest_to_json(const SuiteManifest &manifest, const std::vector<SuiteCircuit> &circuits);
SuiteManifest manifest_from_json(const Json &j);

/// Writes circuits/<id>.json for every circuit and manifest.json into `out_dir`.
void write_suite(const std::string &out_dir, const SuiteManifest &manifest, const std::vector<SuiteCircuit> &circuits);
/// Regenerates every circuit listed in the manifest.
std::vector<SuiteCircuit> regenerate_suite(const SuiteManifest &manifest);
/// Loads the circuit files of a suite directory (or manifest path).
std::vector<CircuitFile> load_suite_circuits(const std::string &suite_path);
std::string manifest_path_for(const std::string &suite_path);

Json record_to_json(const CircuitRecord &record);
CircuitRecord record_from_json(const Json &j);
Json counts_file_to_json(const std::vector<CircuitRecord> &records, uint64_t seed, uint64_t shots, int pass);
std::vector<CircuitRecord> load_counts_file(const std::string &path);

struct Prediction {
    std::string id;
    size_t width = 0;
    size_t depth = 0;
    double success_probability = 0;
};
Json predictions_to_json(const std::vector<Prediction> &predictions, const std::string &model, uint64_t seed);
std::vector<Prediction> load_predictions(const std::string &path);

}  // namespace mirrorbench

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

#include "mirrorbench/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "mirrorbench/error.hpp"
#include "oracle.hpp"

using namespace mirrorbench;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string &name) {
    fs::path p = fs::temp_directory_path() / ("mirrorbench-io-" + name + "-" + std::to_string(::getpid()));
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

Json line_device() {
    return Json::parse(R"({"name": "line", "qubits": ["a", "b", "c"], "edges": [["a", "b"], ["b", "c"]]})");
}

std::string config_error(const Json &j) {
    try {
        parse_device_config(j);
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::Config);
        return e.what();
    }
    ADD_FAILURE() << "config accepted: " << j.dump();
    return "";
}

}  // namespace

TEST(DeviceConfig, parses_defaults) {
    DeviceConfig c = parse_device_config(line_device());
    EXPECT_EQ(c.name, "line");
    EXPECT_EQ(c.graph.num_qubits(), 3u);
    EXPECT_EQ(c.gate_set.two_qubit_gate, TwoQubitKind::CNOT);
    EXPECT_FALSE(c.gate_set.is_restricted());
    EXPECT_FALSE(c.error_rates_path);
    Json round = device_config_to_json(c);
    DeviceConfig again = parse_device_config(round);
    EXPECT_EQ(again.graph.qubits(), c.graph.qubits());
    EXPECT_EQ(again.graph.undirected_edges(), c.graph.undirected_edges());
}

TEST(DeviceConfig, gate_lists_and_rates_path) {
    Json j = line_device();
    j["two_qubit_gate"] = "CZ";
    j["one_qubit_gates"] = {"H", "S", 5};
    j["error_rates"] = "rates.json";
    DeviceConfig c = parse_device_config(j, "/tmp/dev");
    EXPECT_EQ(c.gate_set.two_qubit_gate, TwoQubitKind::CZ);
    EXPECT_TRUE(c.gate_set.is_restricted());
    EXPECT_EQ(c.gate_set.one_qubit_gates.size(), 4u);
    EXPECT_NO_THROW(c.gate_set.validate());
    EXPECT_EQ(fs::path(*c.error_rates_path), fs::path("/tmp/dev") / "rates.json");
}

TEST(DeviceConfig, errors_name_field_path) {
    Json j = line_device();
    j["edges"][1][1] = "z";
    EXPECT_NE(config_error(j).find("edges[1][1]"), std::string::npos);
    j = line_device();
    j["edges"][0] = {"a"};
    EXPECT_NE(config_error(j).find("edges[0]"), std::string::npos);
    j = line_device();
    j.erase("qubits");
    EXPECT_NE(config_error(j).find("qubits"), std::string::npos);
    j = line_device();
    j["two_qubit_gate"] = "SWAP";
    EXPECT_NE(config_error(j).find("two_qubit_gate"), std::string::npos);
    j = line_device();
    j["one_qubit_gates"] = {"H", "T"};
    EXPECT_NE(config_error(j).find("one_qubit_gates[1]"), std::string::npos);
    j = line_device();
    j["one_qubit_gates"] = {"H", "H"};
    config_error(j);
}

TEST(ErrorRates, parse_and_convert) {
    Json j = Json::parse(R"({
        "fidelity": "average",
        "one_qubit": [{"qubit": "a", "gate": "*", "rate": 0.01}],
        "two_qubit": [{"gate": "CNOT", "qubits": ["a", "b"], "rate": 0.02}],
        "readout": {"a": 0.03}
    })");
    ErrorRateSet r = parse_error_rates(j);
    EXPECT_NEAR(r.one_qubit_rate(7, "a"), 1 - fe_from_fa(0.99, 1), 1e-15);
    EXPECT_NEAR(r.one_qubit_rate(7, "a"), 0.015, 1e-15);
    EXPECT_NEAR(r.two_qubit_rate(TwoQubitKind::CNOT, "a", "b"), 1 - fe_from_fa(0.98, 2), 1e-15);
    EXPECT_EQ(r.readout_rate("a"), 0.03);

    j["fidelity"] = "entanglement";
    ErrorRateSet e = parse_error_rates(j);
    EXPECT_EQ(e.one_qubit_rate(7, "a"), 0.01);
    ErrorRateSet back = parse_error_rates(error_rates_to_json(e));
    EXPECT_EQ(back.one_qubit, e.one_qubit);
    EXPECT_EQ(back.two_qubit, e.two_qubit);
    EXPECT_EQ(back.readout, e.readout);

    j["readout"]["a"] = 2.0;
    EXPECT_THROW(parse_error_rates(j), Error);
}

TEST(CircuitJson, round_trip) {
    Rng rng(4);
    auto g = ConnectivityGraph::ring(4);
    for (int i = 0; i < 20; i++) {
        auto m = sample_randomized_mirror_circuit(8, EdgeSampler::edge_grab(0.25), GateSet::full(TwoQubitKind::CZ), g, rng);
        Json j = circuit_to_json(m.circuit);
        ASSERT_EQ(circuit_from_json(Json::parse(dump_json(j))), m.circuit);
    }
    Json bad = circuit_to_json(Circuit(CircuitKind::FICO, {"a", "b"}, {Layer::idle(2)}));
    bad["layers"][0]["one_qubit"][1] = 99;
    EXPECT_THROW(circuit_from_json(bad), Error);
}

TEST(Files, atomic_write_and_parse_errors) {
    fs::path dir = fresh_dir("files");
    std::string path = (dir / "nested" / "x.json").string();
    write_file_atomic(path, "{\"a\": 1}\n");
    EXPECT_EQ(read_json_file(path)["a"], 1);
    EXPECT_FALSE(fs::exists(path + ".tmp"));
    write_file_atomic(path, "{broken");
    try {
        read_json_file(path);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::Parse);
    }
    EXPECT_THROW(read_text_file((dir / "missing").string()), Error);
    Json h = tool_header(42);
    EXPECT_EQ(h["tool"], kToolName);
    EXPECT_EQ(h["version"], kToolVersion);
    EXPECT_EQ(h["seed"], 42);
    fs::remove_all(dir);
}

TEST(Suite, manifest_regeneration_is_byte_identical) {
    fs::path dir = fresh_dir("suite");
    DeviceConfig device = parse_device_config(line_device());
    SuiteManifest manifest;
    manifest.device = device;
    manifest.config = plan_suite(device.graph, device.gate_set.two_qubit_gate, SuiteKind::Exp2, 77, 2);
    manifest.config.grid.depths = {0, 4, 8};
    auto circuits = generate_suite(manifest.config, device.graph, device.gate_set);
    write_suite((dir / "a").string(), manifest, circuits);

    SuiteManifest loaded = manifest_from_json(read_json_file((dir / "a" / "manifest.json").string()));
    EXPECT_EQ(loaded.files.size(), circuits.size());
    write_suite((dir / "b").string(), loaded, regenerate_suite(loaded));
    size_t compared = 0;
    for (const auto &entry : fs::recursive_directory_iterator(dir / "a")) {
        if (!entry.is_regular_file()) {
            continue;
        }
        fs::path rel = fs::relative(entry.path(), dir / "a");
        ASSERT_EQ(read_text_file(entry.path().string()), read_text_file((dir / "b" / rel).string())) << rel;
        compared++;
    }
    EXPECT_EQ(compared, circuits.size() + 1);

    auto files = load_suite_circuits((dir / "a").string());
    ASSERT_EQ(files.size(), circuits.size());
    for (size_t i = 0; i < files.size(); i++) {
        EXPECT_EQ(files[i].id, circuits[i].id);
        EXPECT_EQ(files[i].circuit, circuits[i].mirror.circuit);
        EXPECT_EQ(files[i].target, circuits[i].mirror.target);
    }
    EXPECT_EQ(manifest_path_for((dir / "a").string()), ((dir / "a") / "manifest.json").string());
    fs::remove_all(dir);
}

TEST(Records, counts_file_round_trip_and_validation) {
    std::mt19937_64 e(1);
    std::vector<CircuitRecord> records;
    for (int i = 0; i < 4; i++) {
        records.push_back(oracle::binomial_record("r" + std::to_string(i), 2, 4, 0.8, 100, e));
    }
    fs::path dir = fresh_dir("records");
    std::string path = (dir / "counts.json").string();
    write_file_atomic(path, dump_json(counts_file_to_json(records, 3, 100, 1)));
    auto loaded = load_counts_file(path);
    ASSERT_EQ(loaded.size(), records.size());
    for (size_t i = 0; i < loaded.size(); i++) {
        EXPECT_EQ(loaded[i].id, records[i].id);
        EXPECT_EQ(loaded[i].counts, records[i].counts);
        EXPECT_EQ(loaded[i].shots, 100u);
        EXPECT_EQ(loaded[i].target, records[i].target);
    }
    Json bad = record_to_json(records[0]);
    bad["shots"] = 99;
    EXPECT_THROW(record_from_json(bad), Error);

    std::vector<Prediction> preds = {{"r0", 2, 4, 0.75}};
    std::string ppath = (dir / "pred.json").string();
    write_file_atomic(ppath, dump_json(predictions_to_json(preds, "global-dep", 3)));
    auto p = load_predictions(ppath);
    ASSERT_EQ(p.size(), 1u);
    EXPECT_EQ(p[0].id, "r0");
    EXPECT_EQ(p[0].success_probability, 0.75);
    fs::remove_all(dir);
}

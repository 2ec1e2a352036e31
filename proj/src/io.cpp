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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mirrorbench/error.hpp"

namespace fs = std::filesystem;

namespace mirrorbench {

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::Config, "cannot read file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file_atomic(const std::string &path, const std::string &content) {
    fs::path p(path);
    if (p.has_parent_path()) {
        fs::create_directories(p.parent_path());
    }
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error(ErrorCode::Config, "cannot write file '" + tmp + "'");
        }
        out << content;
        if (!out.flush()) {
            throw Error(ErrorCode::Config, "failed writing '" + tmp + "'");
        }
    }
    fs::rename(tmp, path);
}

Json read_json_file(const std::string &path) {
    std::string text = read_text_file(path);
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw Error(ErrorCode::Parse, path + ": " + e.what());
    }
}

std::string dump_json(const Json &j) {
    return j.dump(2) + "\n";
}

Json tool_header(uint64_t seed) {
    return Json{{"tool", kToolName}, {"version", kToolVersion}, {"seed", seed}};
}

namespace {

[[noreturn]] void config_error(const std::string &path, const std::string &what) {
    throw Error(ErrorCode::Config, path + ": " + what);
}

const Json &field(const Json &j, const std::string &key, const std::string &path) {
    if (!j.is_object()) {
        config_error(path, "expected an object");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        config_error(path.empty() ? key : path + "." + key, "missing field");
    }
    return *it;
}

std::string get_string(const Json &j, const std::string &path) {
    if (!j.is_string()) {
        config_error(path, "expected a string");
    }
    return j.get<std::string>();
}

double get_number(const Json &j, const std::string &path) {
    if (!j.is_number()) {
        config_error(path, "expected a number");
    }
    return j.get<double>();
}

uint64_t get_uint(const Json &j, const std::string &path) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<int64_t>() >= 0)) {
        config_error(path, "expected a non-negative integer");
    }
    return j.get<uint64_t>();
}

const Json &get_array(const Json &j, const std::string &path) {
    if (!j.is_array()) {
        config_error(path, "expected an array");
    }
    return j;
}

std::string join_path(const std::string &base, const std::string &key) {
    return base.empty() ? key : base + "." + key;
}

std::string index_path(const std::string &base, size_t i) {
    return base + "[" + std::to_string(i) + "]";
}

int parse_one_qubit_gate(const Json &j, const std::string &path) {
    if (j.is_number_integer()) {
        int v = j.get<int>();
        if (v < 0 || v >= clifford1q::kCount) {
            config_error(path, "gate index out of range");
        }
        return v;
    }
    auto g = clifford1q::parse_name(get_string(j, path));
    if (!g) {
        config_error(path, "unknown one-qubit gate '" + j.get<std::string>() + "'");
    }
    return *g;
}

}  // namespace

DeviceConfig parse_device_config(const Json &j, const std::string &base_dir) {
    DeviceConfig c;
    c.name = j.contains("name") ? get_string(j["name"], "name") : "device";
    std::vector<std::string> qubits;
    const Json &qs = get_array(field(j, "qubits", ""), "qubits");
    for (size_t i = 0; i < qs.size(); i++) {
        qubits.push_back(get_string(qs[i], index_path("qubits", i)));
    }
    if (qubits.empty()) {
        config_error("qubits", "at least one qubit is required");
    }
    std::vector<Edge> edges;
    if (j.contains("edges")) {
        const Json &es = get_array(j["edges"], "edges");
        for (size_t i = 0; i < es.size(); i++) {
            std::string p = index_path("edges", i);
            if (!es[i].is_array() || es[i].size() != 2) {
                config_error(p, "expected a pair of qubit labels");
            }
            uint32_t ends[2];
            for (size_t k = 0; k < 2; k++) {
                std::string label = get_string(es[i][k], index_path(p, k));
                auto it = std::find(qubits.begin(), qubits.end(), label);
                if (it == qubits.end()) {
                    config_error(index_path(p, k), "unknown qubit '" + label + "'");
                }
                ends[k] = static_cast<uint32_t>(it - qubits.begin());
            }
            if (ends[0] == ends[1]) {
                config_error(p, "self-loop");
            }
            edges.push_back({ends[0], ends[1]});
        }
    }
    c.graph = ConnectivityGraph(qubits, edges);

    std::string two = j.contains("two_qubit_gate") ? get_string(j["two_qubit_gate"], "two_qubit_gate") : "CNOT";
    auto kind = parse_two_qubit_kind(two);
    if (!kind) {
        config_error("two_qubit_gate", "unsupported two-qubit gate '" + two + "'");
    }
    if (!j.contains("one_qubit_gates") || (j["one_qubit_gates"].is_string() && j["one_qubit_gates"] == "all")) {
        c.gate_set = GateSet::full(*kind);
    } else {
        const Json &gs = get_array(j["one_qubit_gates"], "one_qubit_gates");
        c.gate_set.two_qubit_gate = *kind;
        for (size_t i = 0; i < gs.size(); i++) {
            int g = parse_one_qubit_gate(gs[i], index_path("one_qubit_gates", i));
            if (c.gate_set.contains_one_qubit(g)) {
                config_error(index_path("one_qubit_gates", i), "duplicate gate");
            }
            c.gate_set.one_qubit_gates.push_back(g);
        }
        // The idle gate is always available.
        if (!c.gate_set.contains_one_qubit(clifford1q::identity())) {
            c.gate_set.one_qubit_gates.insert(c.gate_set.one_qubit_gates.begin(), clifford1q::identity());
        }
    }
    c.gate_set.validate();
    if (j.contains("error_rates") && !j["error_rates"].is_null()) {
        std::string p = get_string(j["error_rates"], "error_rates");
        fs::path rp(p);
        if (rp.is_relative() && !base_dir.empty()) {
            rp = fs::path(base_dir) / rp;
        }
        c.error_rates_path = rp.string();
    }
    return c;
}

DeviceConfig load_device_config(const std::string &path) {
    Json j = read_json_file(path);
    return parse_device_config(j, fs::path(path).parent_path().string());
}

Json device_config_to_json(const DeviceConfig &config) {
    Json j;
    j["name"] = config.name;
    j["qubits"] = config.graph.qubits();
    Json edges = Json::array();
    for (auto [a, b] : config.graph.directed_edges()) {
        edges.push_back({config.graph.qubits()[a], config.graph.qubits()[b]});
    }
    j["edges"] = edges;
    j["two_qubit_gate"] = std::string(two_qubit_kind_name(config.gate_set.two_qubit_gate));
    if (config.gate_set.is_restricted()) {
        j["one_qubit_gates"] = config.gate_set.one_qubit_gates;
    } else {
        j["one_qubit_gates"] = "all";
    }
    if (config.error_rates_path) {
        j["error_rates"] = *config.error_rates_path;
    }
    return j;
}

ErrorRateSet parse_error_rates(const Json &j) {
    ErrorRateSet r;
    std::string fidelity = j.contains("fidelity") ? get_string(j["fidelity"], "fidelity") : "entanglement";
    if (fidelity != "entanglement" && fidelity != "average") {
        config_error("fidelity", "expected 'entanglement' or 'average'");
    }
    bool average = fidelity == "average";
    auto rate = [&](const Json &v, const std::string &path, size_t w) {
        double x = get_number(v, path);
        if (!(x >= 0 && x <= 1)) {
            config_error(path, "rate outside [0, 1]");
        }
        if (average) {
            bool bad = false;
            x = 1 - fe_from_fa(1 - x, w, &bad);
            if (bad) {
                config_error(path, "average infidelity converts outside [0, 1]");
            }
        }
        return x;
    };
    if (j.contains("one_qubit")) {
        const Json &a = get_array(j["one_qubit"], "one_qubit");
        for (size_t i = 0; i < a.size(); i++) {
            std::string p = index_path("one_qubit", i);
            std::string q = get_string(field(a[i], "qubit", p), join_path(p, "qubit"));
            int gate = ErrorRateSet::kAnyGate;
            if (a[i].contains("gate") && !(a[i]["gate"].is_string() && a[i]["gate"] == "*")) {
                gate = parse_one_qubit_gate(a[i]["gate"], join_path(p, "gate"));
            }
            r.one_qubit[{gate, q}] = rate(field(a[i], "rate", p), join_path(p, "rate"), 1);
        }
    }
    if (j.contains("two_qubit")) {
        const Json &a = get_array(j["two_qubit"], "two_qubit");
        for (size_t i = 0; i < a.size(); i++) {
            std::string p = index_path("two_qubit", i);
            std::string g = a[i].contains("gate") ? get_string(a[i]["gate"], join_path(p, "gate")) : "CNOT";
            auto kind = parse_two_qubit_kind(g);
            if (!kind) {
                config_error(join_path(p, "gate"), "unsupported two-qubit gate '" + g + "'");
            }
            const Json &qs = field(a[i], "qubits", p);
            if (!qs.is_array() || qs.size() != 2) {
                config_error(join_path(p, "qubits"), "expected a pair of qubit labels");
            }
            r.two_qubit[{*kind, get_string(qs[0], join_path(p, "qubits[0]")), get_string(qs[1], join_path(p, "qubits[1]"))}] =
                rate(field(a[i], "rate", p), join_path(p, "rate"), 2);
        }
    }
    if (j.contains("readout")) {
        if (!j["readout"].is_object()) {
            config_error("readout", "expected an object of qubit -> rate");
        }
        for (auto it = j["readout"].begin(); it != j["readout"].end(); ++it) {
            double x = get_number(it.value(), "readout." + it.key());
            if (!(x >= 0 && x <= 1)) {
                config_error("readout." + it.key(), "rate outside [0, 1]");
            }
            r.readout[it.key()] = x;
        }
    }
    if (j.contains("idle")) {
        if (!j["idle"].is_object()) {
            config_error("idle", "expected an object of qubit -> rate");
        }
        for (auto it = j["idle"].begin(); it != j["idle"].end(); ++it) {
            r.idle[it.key()] = rate(it.value(), "idle." + it.key(), 1);
        }
    }
    r.validate();
    return r;
}

ErrorRateSet load_error_rates(const std::string &path) {
    return parse_error_rates(read_json_file(path));
}

Json error_rates_to_json(const ErrorRateSet &rates) {
    Json j;
    j["fidelity"] = "entanglement";
    Json one = Json::array();
    for (const auto &[key, rate] : rates.one_qubit) {
        Json e{{"qubit", key.second}, {"rate", rate}};
        e["gate"] = key.first == ErrorRateSet::kAnyGate ? std::string("*") : clifford1q::name(key.first);
        one.push_back(e);
    }
    j["one_qubit"] = one;
    Json two = Json::array();
    for (const auto &[key, rate] : rates.two_qubit) {
        two.push_back(
            {{"gate", std::string(two_qubit_kind_name(std::get<0>(key)))},
             {"qubits", {std::get<1>(key), std::get<2>(key)}},
             {"rate", rate}});
    }
    j["two_qubit"] = two;
    j["readout"] = rates.readout;
    j["idle"] = rates.idle;
    return j;
}

Json layer_to_json(const Layer &layer) {
    Json one = Json::array();
    for (uint8_t g : layer.one_qubit) {
        if (g == Layer::kInPair) {
            one.push_back(nullptr);
        } else {
            one.push_back(static_cast<int>(g));
        }
    }
    Json two = Json::array();
    for (const auto &g : layer.two_qubit) {
        two.push_back({std::string(two_qubit_kind_name(g.kind)), g.first, g.second});
    }
    return Json{{"one_qubit", one}, {"two_qubit", two}};
}

Layer layer_from_json(const Json &j, size_t width, const std::string &path) {
    Layer layer = Layer::idle(width);
    const Json &two = get_array(field(j, "two_qubit", path), join_path(path, "two_qubit"));
    for (size_t i = 0; i < two.size(); i++) {
        std::string p = index_path(join_path(path, "two_qubit"), i);
        if (!two[i].is_array() || two[i].size() != 3) {
            config_error(p, "expected [gate, first, second]");
        }
        auto kind = parse_two_qubit_kind(get_string(two[i][0], p));
        if (!kind) {
            config_error(p, "unsupported two-qubit gate");
        }
        uint64_t a = get_uint(two[i][1], p);
        uint64_t b = get_uint(two[i][2], p);
        if (a >= width || b >= width || a == b || layer.one_qubit[a] == Layer::kInPair ||
            layer.one_qubit[b] == Layer::kInPair) {
            config_error(p, "invalid or overlapping qubits");
        }
        layer.place_two_qubit({*kind, static_cast<uint32_t>(a), static_cast<uint32_t>(b)});
    }
    const Json &one = get_array(field(j, "one_qubit", path), join_path(path, "one_qubit"));
    if (one.size() != width) {
        config_error(join_path(path, "one_qubit"), "expected " + std::to_string(width) + " entries");
    }
    for (size_t q = 0; q < width; q++) {
        std::string p = index_path(join_path(path, "one_qubit"), q);
        if (one[q].is_null()) {
            if (layer.one_qubit[q] != Layer::kInPair) {
                config_error(p, "null entry on a qubit without a two-qubit gate");
            }
            continue;
        }
        if (layer.one_qubit[q] == Layer::kInPair) {
            config_error(p, "qubit is covered by a two-qubit gate");
        }
        layer.one_qubit[q] = static_cast<uint8_t>(parse_one_qubit_gate(one[q], p));
    }
    return layer;
}

Json circuit_to_json(const Circuit &circuit) {
    Json layers = Json::array();
    for (const auto &layer : circuit.layers) {
        layers.push_back(layer_to_json(layer));
    }
    return Json{
        {"kind", circuit.kind == CircuitKind::FICO ? "fico" : "qiqo"}, {"qubits", circuit.qubits}, {"layers", layers}};
}

Circuit circuit_from_json(const Json &j) {
    Circuit c;
    std::string kind = get_string(field(j, "kind", "circuit"), "circuit.kind");
    if (kind != "fico" && kind != "qiqo") {
        config_error("circuit.kind", "expected 'fico' or 'qiqo'");
    }
    c.kind = kind == "fico" ? CircuitKind::FICO : CircuitKind::QIQO;
    const Json &qs = get_array(field(j, "qubits", "circuit"), "circuit.qubits");
    for (size_t i = 0; i < qs.size(); i++) {
        c.qubits.push_back(get_string(qs[i], index_path("circuit.qubits", i)));
    }
    const Json &ls = get_array(field(j, "layers", "circuit"), "circuit.layers");
    for (size_t i = 0; i < ls.size(); i++) {
        c.layers.push_back(layer_from_json(ls[i], c.width(), index_path("circuit.layers", i)));
    }
    c.validate();
    return c;
}

Json suite_circuit_to_json(const SuiteCircuit &sc, uint64_t seed) {
    Json j = tool_header(seed);
    const MirrorCircuit &m = sc.mirror;
    j["id"] = sc.id;
    j["generator"] = std::string(mirror_generator_name(sc.generator));
    j["width"] = sc.width;
    j["benchmark_depth"] = m.benchmark_depth;
    j["full_depth"] = m.circuit.full_depth();
    j["source_depth"] = m.source_depth;
    j["embedding"] = sc.embedding;
    j["index"] = sc.index;
    j["substream"] = {static_cast<int>(sc.generator), sc.width, sc.depth, sc.embedding, sc.index};
    j["qubit_positions"] = sc.qubits;
    j["target"] = m.target;
    j["policy"] = std::string(m.policy.name());
    j["q0"] = m.q0.str().substr(1);
    Json l0 = Json::array();
    for (uint8_t g : m.l0.one_qubit) {
        l0.push_back(static_cast<int>(g));
    }
    j["l0"] = l0;
    Json quasi = Json::array();
    for (const auto &q : m.quasi_paulis) {
        quasi.push_back(q.str().substr(1));
    }
    j["quasi_paulis"] = quasi;
    if (sc.generator == MirrorGenerator::Periodic) {
        j["germ_depth"] = sc.germ_depth;
    }
    j["two_qubit_density"] = m.benchmark_depth > 0 ? two_qubit_gate_density(m.circuit, m.benchmark_depth) : 0.0;
    j["circuit"] = circuit_to_json(m.circuit);
    return j;
}

CircuitFile circuit_file_from_json(const Json &j) {
    CircuitFile f;
    f.id = get_string(field(j, "id", ""), "id");
    auto g = parse_mirror_generator(get_string(field(j, "generator", ""), "generator"));
    if (!g) {
        config_error("generator", "unknown generator");
    }
    f.generator = *g;
    f.width = get_uint(field(j, "width", ""), "width");
    f.depth = get_uint(field(j, "benchmark_depth", ""), "benchmark_depth");
    f.target = get_string(field(j, "target", ""), "target");
    f.circuit = circuit_from_json(field(j, "circuit", ""));
    if (f.circuit.width() != f.width || f.target.size() != f.width) {
        config_error("circuit", "width does not match the header");
    }
    return f;
}

Json manifest_to_json(const SuiteManifest &manifest, const std::vector<SuiteCircuit> &circuits) {
    const SuiteConfig &c = manifest.config;
    Json j = tool_header(c.seed);
    j["kind"] = std::string(suite_kind_name(c.kind));
    j["circuits_per_shape"] = c.circuits_per_shape;
    j["expected_density"] = c.expected_density;
    j["device"] = device_config_to_json(manifest.device);
    j["restricted_gate_set"] = manifest.device.gate_set.is_restricted();
    Json exclusions = Json::array();
    for (auto [w, d] : c.grid.exclusions) {
        exclusions.push_back({w, d});
    }
    j["grid"] = {{"widths", c.grid.widths}, {"depths", c.grid.depths}, {"exclusions", exclusions}};
    Json embeddings = Json::array();
    const auto &labels = manifest.device.graph.qubits();
    for (const auto &[w, sets] : c.embeddings) {
        Json js = Json::array();
        for (const auto &s : sets) {
            Json names = Json::array();
            for (uint32_t q : s) {
                names.push_back(labels[q]);
            }
            js.push_back(names);
        }
        embeddings.push_back({{"width", w}, {"qubit_sets", js}});
    }
    j["embeddings"] = embeddings;
    Json list = Json::array();
    for (const auto &sc : circuits) {
        list.push_back(
            {{"id", sc.id},
             {"file", "circuits/" + sc.id + ".json"},
             {"generator", std::string(mirror_generator_name(sc.generator))},
             {"width", sc.width},
             {"depth", sc.depth},
             {"embedding", sc.embedding},
             {"index", sc.index},
             {"substream", {static_cast<int>(sc.generator), sc.width, sc.depth, sc.embedding, sc.index}}});
    }
    j["circuits"] = list;
    return j;
}

SuiteManifest manifest_from_json(const Json &j) {
    SuiteManifest m;
    m.device = parse_device_config(field(j, "device", ""));
    SuiteConfig &c = m.config;
    auto kind = parse_suite_kind(get_string(field(j, "kind", ""), "kind"));
    if (!kind) {
        config_error("kind", "unknown suite kind");
    }
    c.kind = *kind;
    c.seed = get_uint(field(j, "seed", ""), "seed");
    c.circuits_per_shape = get_uint(field(j, "circuits_per_shape", ""), "circuits_per_shape");
    c.expected_density = get_number(field(j, "expected_density", ""), "expected_density");
    const Json &grid = field(j, "grid", "");
    for (const auto &w : get_array(field(grid, "widths", "grid"), "grid.widths")) {
        c.grid.widths.push_back(get_uint(w, "grid.widths"));
    }
    for (const auto &d : get_array(field(grid, "depths", "grid"), "grid.depths")) {
        c.grid.depths.push_back(get_uint(d, "grid.depths"));
    }
    for (const auto &e : get_array(field(grid, "exclusions", "grid"), "grid.exclusions")) {
        c.grid.exclusions.insert({get_uint(e.at(0), "grid.exclusions"), get_uint(e.at(1), "grid.exclusions")});
    }
    const auto &emb = get_array(field(j, "embeddings", ""), "embeddings");
    for (size_t i = 0; i < emb.size(); i++) {
        std::string p = index_path("embeddings", i);
        size_t w = get_uint(field(emb[i], "width", p), join_path(p, "width"));
        auto &sets = c.embeddings[w];
        for (const auto &s : get_array(field(emb[i], "qubit_sets", p), join_path(p, "qubit_sets"))) {
            std::vector<uint32_t> positions;
            for (const auto &label : s) {
                auto idx = m.device.graph.index_of(get_string(label, join_path(p, "qubit_sets")));
                if (!idx) {
                    config_error(join_path(p, "qubit_sets"), "unknown qubit");
                }
                positions.push_back(*idx);
            }
            sets.push_back(positions);
        }
    }
    const auto &list = get_array(field(j, "circuits", ""), "circuits");
    for (size_t i = 0; i < list.size(); i++) {
        std::string p = index_path("circuits", i);
        m.files.push_back(
            {get_string(field(list[i], "id", p), join_path(p, "id")),
             get_string(field(list[i], "file", p), join_path(p, "file"))});
    }
    return m;
}

void write_suite(const std::string &out_dir, const SuiteManifest &manifest, const std::vector<SuiteCircuit> &circuits) {
    for (const auto &sc : circuits) {
        write_file_atomic(
            (fs::path(out_dir) / "circuits" / (sc.id + ".json")).string(),
            dump_json(suite_circuit_to_json(sc, manifest.config.seed)));
    }
    write_file_atomic((fs::path(out_dir) / "manifest.json").string(), dump_json(manifest_to_json(manifest, circuits)));
}

std::vector<SuiteCircuit> regenerate_suite(const SuiteManifest &manifest) {
    return generate_suite(manifest.config, manifest.device.graph, manifest.device.gate_set);
}

std::string manifest_path_for(const std::string &suite_path) {
    if (fs::is_directory(suite_path)) {
        return (fs::path(suite_path) / "manifest.json").string();
    }
    return suite_path;
}

std::vector<CircuitFile> load_suite_circuits(const std::string &suite_path) {
    std::string mpath = manifest_path_for(suite_path);
    SuiteManifest m = manifest_from_json(read_json_file(mpath));
    fs::path base = fs::path(mpath).parent_path();
    std::vector<CircuitFile> out;
    for (const auto &[id, file] : m.files) {
        CircuitFile f = circuit_file_from_json(read_json_file((base / file).string()));
        if (f.id != id) {
            throw Error(ErrorCode::Pairing, "circuit file " + file + " has id " + f.id + ", manifest says " + id);
        }
        out.push_back(std::move(f));
    }
    return out;
}

Json record_to_json(const CircuitRecord &r) {
    return Json{
        {"id", r.id},
        {"generator", std::string(mirror_generator_name(r.generator))},
        {"width", r.width},
        {"depth", r.depth},
        {"qubits", r.qubits},
        {"target", r.target},
        {"shots", r.shots},
        {"pass", r.pass},
        {"counts", r.counts}};
}

CircuitRecord record_from_json(const Json &j) {
    CircuitRecord r;
    r.id = get_string(field(j, "id", "record"), "record.id");
    std::string p = "record " + r.id;
    auto g = parse_mirror_generator(get_string(field(j, "generator", p), p + ".generator"));
    if (!g) {
        config_error(p + ".generator", "unknown generator");
    }
    r.generator = *g;
    r.width = get_uint(field(j, "width", p), p + ".width");
    r.depth = get_uint(field(j, "depth", p), p + ".depth");
    for (const auto &q : get_array(field(j, "qubits", p), p + ".qubits")) {
        r.qubits.push_back(get_string(q, p + ".qubits"));
    }
    r.target = get_string(field(j, "target", p), p + ".target");
    r.shots = get_uint(field(j, "shots", p), p + ".shots");
    r.pass = j.contains("pass") ? static_cast<int>(get_uint(j["pass"], p + ".pass")) : 1;
    const Json &counts = field(j, "counts", p);
    if (!counts.is_object()) {
        config_error(p + ".counts", "expected an object");
    }
    for (auto it = counts.begin(); it != counts.end(); ++it) {
        r.counts[it.key()] = get_uint(it.value(), p + ".counts." + it.key());
    }
    try {
        r.validate();
    } catch (const Error &e) {
        config_error(p, e.what());
    }
    return r;
}

Json counts_file_to_json(const std::vector<CircuitRecord> &records, uint64_t seed, uint64_t shots, int pass) {
    Json j = tool_header(seed);
    j["shots"] = shots;
    j["pass"] = pass;
    Json list = Json::array();
    for (const auto &r : records) {
        list.push_back(record_to_json(r));
    }
    j["records"] = list;
    return j;
}

std::vector<CircuitRecord> load_counts_file(const std::string &path) {
    Json j = read_json_file(path);
    std::vector<CircuitRecord> out;
    for (const auto &r : get_array(field(j, "records", path), path + ".records")) {
        out.push_back(record_from_json(r));
    }
    return out;
}

Json predictions_to_json(const std::vector<Prediction> &predictions, const std::string &model, uint64_t seed) {
    Json j = tool_header(seed);
    j["model"] = model;
    Json list = Json::array();
    for (const auto &p : predictions) {
        list.push_back(
            {{"id", p.id}, {"width", p.width}, {"depth", p.depth}, {"success_probability", p.success_probability}});
    }
    j["predictions"] = list;
    return j;
}

std::vector<Prediction> load_predictions(const std::string &path) {
    Json j = read_json_file(path);
    std::vector<Prediction> out;
    const auto &list = get_array(field(j, "predictions", path), path + ".predictions");
    for (size_t i = 0; i < list.size(); i++) {
        std::string p = index_path("predictions", i);
        Prediction pr;
        pr.id = get_string(field(list[i], "id", p), join_path(p, "id"));
        pr.width = get_uint(field(list[i], "width", p), join_path(p, "width"));
        pr.depth = get_uint(field(list[i], "depth", p), join_path(p, "depth"));
        pr.success_probability = get_number(field(list[i], "success_probability", p), join_path(p, "success_probability"));
        out.push_back(pr);
    }
    return out;
}

}  // namespace mirrorbench

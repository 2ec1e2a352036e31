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

#include "mirrorbench/circuits.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <sstream>

#include "mirrorbench/error.hpp"

namespace mirrorbench {

std::string_view two_qubit_kind_name(TwoQubitKind kind) {
    return kind == TwoQubitKind::CNOT ? "CNOT" : "CZ";
}

std::optional<TwoQubitKind> parse_two_qubit_kind(std::string_view text) {
    if (text == "CNOT" || text == "CX") {
        return TwoQubitKind::CNOT;
    }
    if (text == "CZ" || text == "CPHASE") {
        return TwoQubitKind::CZ;
    }
    return std::nullopt;
}

ConnectivityGraph::ConnectivityGraph(std::vector<std::string> qubits, std::vector<Edge> directed_edges)
    : qubits_(std::move(qubits)) {
    std::set<std::string> seen;
    for (const auto &q : qubits_) {
        if (!seen.insert(q).second) {
            throw Error(ErrorCode::Config, "duplicate qubit label '" + q + "'");
        }
    }
    std::set<Edge> undirected;
    for (auto [a, b] : directed_edges) {
        if (a >= qubits_.size() || b >= qubits_.size()) {
            throw Error(ErrorCode::Config, "edge endpoint outside the declared qubits");
        }
        if (a == b) {
            throw Error(ErrorCode::Config, "self-loop on qubit '" + qubits_[a] + "'");
        }
        if (directed_set_.insert({a, b}).second) {
            directed_edges_.push_back({a, b});
        }
        undirected.insert({std::min(a, b), std::max(a, b)});
    }
    undirected_edges_.assign(undirected.begin(), undirected.end());
}

ConnectivityGraph ConnectivityGraph::from_labels(
    std::vector<std::string> qubits, const std::vector<std::pair<std::string, std::string>> &edges) {
    std::map<std::string, uint32_t> index;
    for (uint32_t i = 0; i < qubits.size(); i++) {
        index[qubits[i]] = i;
    }
    std::vector<Edge> resolved;
    for (const auto &[a, b] : edges) {
        auto ia = index.find(a);
        auto ib = index.find(b);
        if (ia == index.end() || ib == index.end()) {
            throw Error(ErrorCode::Config, "edge (" + a + ", " + b + ") references an undeclared qubit");
        }
        resolved.push_back({ia->second, ib->second});
    }
    return ConnectivityGraph(std::move(qubits), std::move(resolved));
}

static std::vector<std::string> numbered_labels(uint32_t n) {
    std::vector<std::string> labels;
    for (uint32_t i = 0; i < n; i++) {
        labels.push_back(std::to_string(i));
    }
    return labels;
}

ConnectivityGraph ConnectivityGraph::path(uint32_t n) {
    std::vector<Edge> edges;
    for (uint32_t i = 0; i + 1 < n; i++) {
        edges.push_back({i, i + 1});
    }
    return ConnectivityGraph(numbered_labels(n), edges);
}

ConnectivityGraph ConnectivityGraph::ring(uint32_t n) {
    std::vector<Edge> edges;
    for (uint32_t i = 0; i + 1 < n; i++) {
        edges.push_back({i, i + 1});
    }
    if (n > 2) {
        edges.push_back({n - 1, 0});
    }
    return ConnectivityGraph(numbered_labels(n), edges);
}

ConnectivityGraph ConnectivityGraph::complete(uint32_t n) {
    std::vector<Edge> edges;
    for (uint32_t i = 0; i < n; i++) {
        for (uint32_t j = i + 1; j < n; j++) {
            edges.push_back({i, j});
        }
    }
    return ConnectivityGraph(numbered_labels(n), edges);
}

std::optional<uint32_t> ConnectivityGraph::index_of(std::string_view label) const {
    for (uint32_t i = 0; i < qubits_.size(); i++) {
        if (qubits_[i] == label) {
            return i;
        }
    }
    return std::nullopt;
}

bool ConnectivityGraph::has_directed_edge(uint32_t a, uint32_t b) const {
    return directed_set_.count({a, b}) > 0;
}

bool ConnectivityGraph::adjacent(uint32_t a, uint32_t b) const {
    return has_directed_edge(a, b) || has_directed_edge(b, a);
}

bool ConnectivityGraph::allows(TwoQubitKind kind, uint32_t first, uint32_t second) const {
    return is_symmetric(kind) ? adjacent(first, second) : has_directed_edge(first, second);
}

std::vector<Edge> ConnectivityGraph::orientations(TwoQubitKind kind, uint32_t a, uint32_t b) const {
    std::vector<Edge> out;
    if (is_symmetric(kind)) {
        if (adjacent(a, b)) {
            out.push_back({std::min(a, b), std::max(a, b)});
        }
        return out;
    }
    if (has_directed_edge(a, b)) {
        out.push_back({a, b});
    }
    if (has_directed_edge(b, a)) {
        out.push_back({b, a});
    }
    return out;
}

ConnectivityGraph ConnectivityGraph::induced(const std::vector<uint32_t> &subset) const {
    std::map<uint32_t, uint32_t> pos;
    std::vector<std::string> labels;
    for (uint32_t i = 0; i < subset.size(); i++) {
        pos[subset[i]] = i;
        labels.push_back(qubits_.at(subset[i]));
    }
    std::vector<Edge> edges;
    for (auto [a, b] : directed_edges_) {
        auto ia = pos.find(a);
        auto ib = pos.find(b);
        if (ia != pos.end() && ib != pos.end()) {
            edges.push_back({ia->second, ib->second});
        }
    }
    return ConnectivityGraph(std::move(labels), std::move(edges));
}

bool ConnectivityGraph::is_connected_subset(const std::vector<uint32_t> &subset) const {
    if (subset.empty()) {
        return false;
    }
    std::set<uint32_t> members(subset.begin(), subset.end());
    std::set<uint32_t> reached{subset[0]};
    std::deque<uint32_t> queue{subset[0]};
    while (!queue.empty()) {
        uint32_t q = queue.front();
        queue.pop_front();
        for (auto [a, b] : undirected_edges_) {
            uint32_t other;
            if (a == q) {
                other = b;
            } else if (b == q) {
                other = a;
            } else {
                continue;
            }
            if (members.count(other) && reached.insert(other).second) {
                queue.push_back(other);
            }
        }
    }
    return reached.size() == members.size();
}

bool ConnectivityGraph::is_connected() const {
    std::vector<uint32_t> all(qubits_.size());
    for (uint32_t i = 0; i < all.size(); i++) {
        all[i] = i;
    }
    return is_connected_subset(all);
}

GateSet GateSet::full(TwoQubitKind two_qubit) {
    GateSet g;
    for (int k = 0; k < clifford1q::kCount; k++) {
        g.one_qubit_gates.push_back(k);
    }
    g.two_qubit_gate = two_qubit;
    return g;
}

bool GateSet::contains_one_qubit(int gate) const {
    return std::find(one_qubit_gates.begin(), one_qubit_gates.end(), gate) != one_qubit_gates.end();
}

void GateSet::validate() const {
    if (!contains_one_qubit(clifford1q::identity())) {
        throw Error(ErrorCode::Config, "gate set must contain the idle gate");
    }
    std::set<int> seen;
    for (int g : one_qubit_gates) {
        if (g < 0 || g >= clifford1q::kCount) {
            throw Error(ErrorCode::Config, "one-qubit gate index out of range: " + std::to_string(g));
        }
        if (!seen.insert(g).second) {
            throw Error(ErrorCode::Config, "duplicate one-qubit gate index: " + std::to_string(g));
        }
    }
}

Layer Layer::idle(size_t width) {
    Layer layer;
    layer.one_qubit.assign(width, static_cast<uint8_t>(clifford1q::identity()));
    return layer;
}

Layer Layer::from_one_qubit(std::vector<uint8_t> gates) {
    Layer layer;
    layer.one_qubit = std::move(gates);
    return layer;
}

void Layer::place_two_qubit(TwoQubitGate gate) {
    if (gate.first >= width() || gate.second >= width() || gate.first == gate.second) {
        throw Error(ErrorCode::ContractViolation, "two-qubit gate on invalid qubits");
    }
    if (one_qubit[gate.first] == kInPair || one_qubit[gate.second] == kInPair) {
        throw Error(ErrorCode::ContractViolation, "two-qubit gates in a layer must be disjoint");
    }
    one_qubit[gate.first] = kInPair;
    one_qubit[gate.second] = kInPair;
    two_qubit.push_back(gate);
}

void Layer::validate() const {
    std::vector<int> covered(width(), 0);
    for (const auto &g : two_qubit) {
        if (g.first >= width() || g.second >= width() || g.first == g.second) {
            throw Error(ErrorCode::ContractViolation, "two-qubit gate on invalid qubits");
        }
        covered[g.first]++;
        covered[g.second]++;
    }
    for (size_t q = 0; q < width(); q++) {
        bool in_pair = one_qubit[q] == kInPair;
        if (covered[q] > 1) {
            throw Error(ErrorCode::ContractViolation, "qubit " + std::to_string(q) + " acted on by two gates");
        }
        if (in_pair != (covered[q] == 1)) {
            throw Error(ErrorCode::ContractViolation, "qubit " + std::to_string(q) + " gate assignment inconsistent");
        }
        if (!in_pair && one_qubit[q] >= clifford1q::kCount) {
            throw Error(ErrorCode::UnsupportedGate, "one-qubit gate index " + std::to_string(one_qubit[q]));
        }
    }
}

Layer Layer::inverse() const {
    Layer inv = *this;
    for (auto &g : inv.one_qubit) {
        if (g != kInPair) {
            g = static_cast<uint8_t>(clifford1q::inverse(g));
        }
    }
    return inv;
}

Circuit::Circuit(CircuitKind kind, std::vector<std::string> qubits, std::vector<Layer> layers)
    : kind(kind), qubits(std::move(qubits)), layers(std::move(layers)) {
}

size_t Circuit::count_two_qubit_gates() const {
    size_t n = 0;
    for (const auto &layer : layers) {
        n += layer.num_two_qubit_gates();
    }
    return n;
}

void Circuit::validate() const {
    if (qubits.empty()) {
        throw Error(ErrorCode::ContractViolation, "circuit width must be at least 1");
    }
    for (size_t i = 0; i < layers.size(); i++) {
        if (layers[i].width() != width()) {
            throw Error(ErrorCode::ContractViolation, "layer " + std::to_string(i) + " has the wrong width");
        }
        layers[i].validate();
    }
}

bool layer_in_set(const Layer &layer, const LayerSet &set) {
    if (layer.width() != set.connectivity.num_qubits()) {
        throw Error(
            ErrorCode::ContractViolation,
            "layer width " + std::to_string(layer.width()) + " does not match the layer set width " +
                std::to_string(set.connectivity.num_qubits()));
    }
    try {
        layer.validate();
    } catch (const Error &) {
        return false;
    }
    for (uint8_t g : layer.one_qubit) {
        if (g != Layer::kInPair && !set.gate_set.contains_one_qubit(g)) {
            return false;
        }
    }
    for (const auto &g : layer.two_qubit) {
        if (g.kind != set.gate_set.two_qubit_gate || !set.connectivity.allows(g.kind, g.first, g.second)) {
            return false;
        }
    }
    return true;
}

double two_qubit_gate_density(const Circuit &circuit, size_t benchmark_depth) {
    if (benchmark_depth == 0) {
        throw Error(ErrorCode::UndefinedDensity, "two-qubit gate density needs a positive benchmark depth");
    }
    return 2.0 * static_cast<double>(circuit.count_two_qubit_gates()) /
           (static_cast<double>(circuit.width()) * static_cast<double>(benchmark_depth));
}

std::string serialize_circuit(const Circuit &circuit) {
    std::ostringstream out;
    out << "circuit " << (circuit.kind == CircuitKind::FICO ? "fico" : "qiqo") << " " << circuit.width();
    for (const auto &q : circuit.qubits) {
        out << " " << q;
    }
    out << "\n";
    for (const auto &layer : circuit.layers) {
        bool any = false;
        for (size_t q = 0; q < layer.width(); q++) {
            uint8_t g = layer.one_qubit[q];
            if (g == Layer::kInPair || g == clifford1q::identity()) {
                continue;
            }
            out << (any ? " " : "") << clifford1q::name(g) << ":" << q;
            any = true;
        }
        for (const auto &g : layer.two_qubit) {
            out << (any ? " " : "") << two_qubit_kind_name(g.kind) << ":" << g.first << "," << g.second;
            any = true;
        }
        out << (any ? "" : "-") << "\n";
    }
    return out.str();
}

namespace {

struct TextCursor {
    std::string_view line;
    size_t line_no;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string &what) const {
        throw Error(
            ErrorCode::Parse, "line " + std::to_string(line_no) + ", column " + std::to_string(pos + 1) + ": " + what);
    }
    void skip_spaces() {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) {
            pos++;
        }
    }
    bool done() {
        skip_spaces();
        return pos >= line.size();
    }
    std::string_view token() {
        skip_spaces();
        size_t start = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') {
            pos++;
        }
        return line.substr(start, pos - start);
    }
};

uint32_t parse_uint(TextCursor &cur, std::string_view text, size_t column) {
    uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        cur.pos = column;
        cur.fail("expected a qubit index, got '" + std::string(text) + "'");
    }
    return v;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
    std::vector<std::string_view> lines;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            if (start < text.size()) {
                lines.push_back(text.substr(start));
            }
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    if (lines.empty()) {
        throw Error(ErrorCode::Parse, "line 1, column 1: empty circuit text");
    }

    TextCursor head{lines[0], 1};
    if (head.token() != "circuit") {
        head.pos = 0;
        head.fail("expected 'circuit' header");
    }
    size_t kind_col = head.pos;
    auto kind_text = head.token();
    CircuitKind kind;
    if (kind_text == "fico") {
        kind = CircuitKind::FICO;
    } else if (kind_text == "qiqo") {
        kind = CircuitKind::QIQO;
    } else {
        head.pos = kind_col + 1;
        head.fail("unknown circuit kind '" + std::string(kind_text) + "'");
    }
    size_t width_col = head.pos + 1;
    uint32_t width = parse_uint(head, head.token(), width_col);
    std::vector<std::string> labels;
    while (!head.done()) {
        labels.emplace_back(head.token());
    }
    if (labels.size() != width || width == 0) {
        head.fail("expected " + std::to_string(width) + " qubit labels, got " + std::to_string(labels.size()));
    }

    Circuit circuit(kind, labels);
    for (size_t i = 1; i < lines.size(); i++) {
        TextCursor cur{lines[i], i + 1};
        Layer layer = Layer::idle(width);
        if (cur.done()) {
            cur.fail("empty line; write '-' for an all-idle layer");
        }
        while (!cur.done()) {
            size_t col = cur.pos;
            auto tok = cur.token();
            if (tok == "-") {
                continue;
            }
            size_t colon = tok.find(':');
            if (colon == std::string_view::npos) {
                cur.pos = col;
                cur.fail("expected NAME:qubit, got '" + std::string(tok) + "'");
            }
            auto name = tok.substr(0, colon);
            auto args = tok.substr(colon + 1);
            if (auto two = parse_two_qubit_kind(name)) {
                size_t comma = args.find(',');
                if (comma == std::string_view::npos) {
                    cur.pos = col + colon + 1;
                    cur.fail("two-qubit gate needs 'a,b'");
                }
                uint32_t a = parse_uint(cur, args.substr(0, comma), col + colon + 1);
                uint32_t b = parse_uint(cur, args.substr(comma + 1), col + colon + comma + 2);
                if (a >= width || b >= width || a == b || layer.one_qubit[a] != clifford1q::identity() ||
                    layer.one_qubit[b] != clifford1q::identity()) {
                    cur.pos = col;
                    cur.fail("invalid or overlapping two-qubit gate '" + std::string(tok) + "'");
                }
                layer.place_two_qubit({*two, a, b});
                continue;
            }
            auto gate = clifford1q::parse_name(name);
            if (!gate) {
                cur.pos = col;
                cur.fail("unknown gate '" + std::string(name) + "'");
            }
            uint32_t q = parse_uint(cur, args, col + colon + 1);
            if (q >= width || layer.one_qubit[q] != clifford1q::identity()) {
                cur.pos = col;
                cur.fail("invalid or repeated qubit in '" + std::string(tok) + "'");
            }
            layer.one_qubit[q] = static_cast<uint8_t>(*gate);
        }
        circuit.layers.push_back(std::move(layer));
    }
    return circuit;
}

}  // namespace mirrorbench

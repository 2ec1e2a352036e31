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

#include "mirrorbench/noise.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "mirrorbench/error.hpp"
#include "mirrorbench/rng.hpp"
#include "mirrorbench/sampling.hpp"

namespace mirrorbench {

double fe_from_fa(double fa, size_t w, bool *out_of_range) {
    double inv = std::ldexp(1.0, -static_cast<int>(w));
    double fe = (1 + inv) * fa - inv;
    if (out_of_range) {
        *out_of_range = fe < 0 || fe > 1;
    }
    return fe;
}

double fa_from_fe(double fe, size_t w, bool *out_of_range) {
    double inv = std::ldexp(1.0, -static_cast<int>(w));
    double fa = (fe + inv) / (1 + inv);
    if (out_of_range) {
        *out_of_range = fa < 0 || fa > 1;
    }
    return fa;
}

PauliChannel PauliChannel::depolarizing(size_t width, double eps) {
    if (width > 16) {
        throw Error(ErrorCode::ContractViolation, "explicit Pauli channels are limited to 16 qubits");
    }
    PauliChannel c;
    c.width = width;
    uint64_t n = uint64_t{1} << (2 * width);
    c.probabilities[0] = 1 - eps;
    for (uint64_t p = 1; p < n; p++) {
        c.probabilities[p] = eps / static_cast<double>(n - 1);
    }
    return c;
}

double PauliChannel::probability(uint64_t pauli) const {
    auto it = probabilities.find(pauli);
    return it == probabilities.end() ? 0.0 : it->second;
}

double PauliChannel::entanglement_infidelity() const {
    double s = 0;
    for (const auto &[p, prob] : probabilities) {
        if (p != 0) {
            s += prob;
        }
    }
    return s;
}

void PauliChannel::validate() const {
    double total = 0;
    for (const auto &[p, prob] : probabilities) {
        if (prob < 0) {
            throw Error(ErrorCode::ContractViolation, "negative Pauli channel probability");
        }
        if (width < 32 && p >= (uint64_t{1} << (2 * width))) {
            throw Error(ErrorCode::ContractViolation, "Pauli index outside the channel width");
        }
        total += prob;
    }
    if (std::abs(total - 1) > 1e-12) {
        throw Error(ErrorCode::ContractViolation, "Pauli channel probabilities sum to " + std::to_string(total));
    }
}

ErrorRateSet ErrorRateSet::uniform(
    const ConnectivityGraph &graph, TwoQubitKind kind, double one_qubit_rate, double two_qubit_rate,
    double readout_rate) {
    ErrorRateSet r;
    for (const auto &q : graph.qubits()) {
        r.one_qubit[{kAnyGate, q}] = one_qubit_rate;
        r.readout[q] = readout_rate;
    }
    for (auto [a, b] : graph.directed_edges()) {
        r.two_qubit[{kind, graph.qubits()[a], graph.qubits()[b]}] = two_qubit_rate;
    }
    return r;
}

double ErrorRateSet::one_qubit_rate(int gate, const std::string &qubit) const {
    auto it = one_qubit.find({gate, qubit});
    if (it != one_qubit.end()) {
        return it->second;
    }
    if (gate == clifford1q::identity()) {
        auto idle_it = idle.find(qubit);
        return idle_it == idle.end() ? 0.0 : idle_it->second;
    }
    it = one_qubit.find({kAnyGate, qubit});
    if (it != one_qubit.end()) {
        return it->second;
    }
    throw Error(ErrorCode::MissingRate, "no rate for gate " + clifford1q::name(gate) + " on qubit " + qubit);
}

double ErrorRateSet::two_qubit_rate(TwoQubitKind kind, const std::string &first, const std::string &second) const {
    auto it = two_qubit.find({kind, first, second});
    if (it != two_qubit.end()) {
        return it->second;
    }
    if (is_symmetric(kind)) {
        it = two_qubit.find({kind, second, first});
        if (it != two_qubit.end()) {
            return it->second;
        }
    }
    throw Error(
        ErrorCode::MissingRate,
        "no rate for gate " + std::string(two_qubit_kind_name(kind)) + " on (" + first + ", " + second + ")");
}

double ErrorRateSet::readout_rate(const std::string &qubit) const {
    auto it = readout.find(qubit);
    if (it == readout.end()) {
        throw Error(ErrorCode::MissingRate, "no readout rate for qubit " + qubit);
    }
    return it->second;
}

std::vector<double> ErrorRateSet::layer_rates(const Layer &layer, const std::vector<std::string> &labels) const {
    std::vector<double> out;
    for (size_t q = 0; q < layer.width(); q++) {
        if (layer.one_qubit[q] != Layer::kInPair) {
            out.push_back(one_qubit_rate(layer.one_qubit[q], labels[q]));
        }
    }
    for (const auto &g : layer.two_qubit) {
        out.push_back(two_qubit_rate(g.kind, labels[g.first], labels[g.second]));
    }
    return out;
}

double ErrorRateSet::mean_one_qubit_rate(const std::vector<std::string> &qubits) const {
    double sum = 0;
    size_t n = 0;
    for (const auto &[key, rate] : one_qubit) {
        if (key.first != clifford1q::identity() &&
            std::find(qubits.begin(), qubits.end(), key.second) != qubits.end()) {
            sum += rate;
            n++;
        }
    }
    if (n == 0) {
        throw Error(ErrorCode::MissingRate, "no one-qubit gate rates for the selected qubits");
    }
    return sum / static_cast<double>(n);
}

std::optional<double> ErrorRateSet::mean_two_qubit_rate(const ConnectivityGraph &graph, TwoQubitKind kind) const {
    double sum = 0;
    size_t n = 0;
    const auto &labels = graph.qubits();
    if (is_symmetric(kind)) {
        for (auto [a, b] : graph.undirected_edges()) {
            sum += two_qubit_rate(kind, labels[a], labels[b]);
            n++;
        }
    } else {
        for (auto [a, b] : graph.directed_edges()) {
            sum += two_qubit_rate(kind, labels[a], labels[b]);
            n++;
        }
    }
    if (n == 0) {
        return std::nullopt;
    }
    return sum / static_cast<double>(n);
}

void ErrorRateSet::validate() const {
    auto check = [](double r, const std::string &what) {
        if (!(r >= 0 && r <= 1)) {
            throw Error(ErrorCode::Config, what + " rate " + std::to_string(r) + " outside [0, 1]");
        }
    };
    for (const auto &[k, r] : one_qubit) {
        check(r, "one-qubit gate on " + k.second);
    }
    for (const auto &[k, r] : two_qubit) {
        check(r, "two-qubit gate on (" + std::get<1>(k) + ", " + std::get<2>(k) + ")");
    }
    for (const auto &[k, r] : readout) {
        check(r, "readout on " + k);
    }
    for (const auto &[k, r] : idle) {
        check(r, "idle on " + k);
    }
}

double readout_success(const Circuit &circuit, const ErrorRateSet &rates) {
    double s = 1;
    for (const auto &q : circuit.qubits) {
        s *= 1 - rates.readout_rate(q);
    }
    return s;
}

double predict_simple(const Circuit &circuit, const ErrorRateSet &rates) {
    double s = readout_success(circuit, rates);
    for (const auto &layer : circuit.layers) {
        for (double e : rates.layer_rates(layer, circuit.qubits)) {
            s *= 1 - e;
        }
    }
    return s;
}

double global_depolarizing_lambda(size_t w, double fidelity_product) {
    double four_w = std::ldexp(1.0, 2 * static_cast<int>(w));
    return (1 - four_w * fidelity_product) / (1 - four_w);
}

double predict_global_dep(const Circuit &circuit, const ErrorRateSet &rates) {
    size_t w = circuit.width();
    double floor = std::ldexp(1.0, -static_cast<int>(w));
    double decay = 1;
    for (const auto &layer : circuit.layers) {
        double f = 1;
        for (double e : rates.layer_rates(layer, circuit.qubits)) {
            f *= 1 - e;
        }
        decay *= global_depolarizing_lambda(w, f);
    }
    return floor + (readout_success(circuit, rates) - floor) * decay;
}

namespace {

struct NoisyGate {
    enum Kind : uint8_t { One, CNOT, CZ } kind;
    uint8_t gate;
    uint32_t a;
    uint32_t b;
    double eps;
};

struct CompiledCircuit {
    size_t width;
    std::vector<std::vector<NoisyGate>> layers;
    std::vector<double> readout;
    uint64_t target;
};

struct LetterTable {
    uint8_t map[clifford1q::kCount][4];
    LetterTable() {
        for (int g = 0; g < clifford1q::kCount; g++) {
            for (int l = 0; l < 4; l++) {
                map[g][l] = static_cast<uint8_t>(clifford1q::conjugate(g, static_cast<Letter>(l)).letter);
            }
        }
    }
};

const LetterTable &letter_table() {
    static const LetterTable t;
    return t;
}

CompiledCircuit compile(const Circuit &circuit, const std::string &target, const ErrorRateSet &rates) {
    size_t w = circuit.width();
    if (w == 0 || w > 64) {
        throw Error(ErrorCode::ContractViolation, "Pauli-frame simulation supports 1..64 qubits");
    }
    if (target.size() != w) {
        throw Error(ErrorCode::ContractViolation, "target length does not match the circuit width");
    }
    CompiledCircuit c;
    c.width = w;
    c.target = 0;
    for (size_t q = 0; q < w; q++) {
        if (target[q] == '1') {
            c.target |= uint64_t{1} << q;
        } else if (target[q] != '0') {
            throw Error(ErrorCode::ContractViolation, "target must be a bit string");
        }
        c.readout.push_back(rates.readout_rate(circuit.qubits[q]));
    }
    for (const auto &layer : circuit.layers) {
        std::vector<NoisyGate> gates;
        for (size_t q = 0; q < w; q++) {
            uint8_t g = layer.one_qubit[q];
            if (g == Layer::kInPair) {
                continue;
            }
            gates.push_back(
                {NoisyGate::One, g, static_cast<uint32_t>(q), 0, rates.one_qubit_rate(g, circuit.qubits[q])});
        }
        for (const auto &g : layer.two_qubit) {
            gates.push_back(
                {g.kind == TwoQubitKind::CNOT ? NoisyGate::CNOT : NoisyGate::CZ, 0, g.first, g.second,
                 rates.two_qubit_rate(g.kind, circuit.qubits[g.first], circuit.qubits[g.second])});
        }
        c.layers.push_back(std::move(gates));
    }
    return c;
}

inline uint64_t bit(uint64_t word, uint32_t q) {
    return (word >> q) & 1;
}

/// One shot; returns the measured outcome as a bit mask.
uint64_t run_shot(const CompiledCircuit &c, const LetterTable &table, Rng &rng) {
    uint64_t fx = 0;
    uint64_t fz = 0;
    for (const auto &layer : c.layers) {
        if (fx | fz) {
            for (const auto &g : layer) {
                uint32_t a = g.a;
                uint32_t b = g.b;
                switch (g.kind) {
                    case NoisyGate::One: {
                        uint64_t l = bit(fx, a) | (bit(fz, a) << 1);
                        if (l) {
                            uint64_t n = table.map[g.gate][l];
                            fx = (fx & ~(uint64_t{1} << a)) | ((n & 1) << a);
                            fz = (fz & ~(uint64_t{1} << a)) | (((n >> 1) & 1) << a);
                        }
                        break;
                    }
                    case NoisyGate::CNOT:
                        fx ^= bit(fx, a) << b;
                        fz ^= bit(fz, b) << a;
                        break;
                    case NoisyGate::CZ:
                        fz ^= (bit(fx, b) << a) ^ (bit(fx, a) << b);
                        break;
                }
            }
        }
        for (const auto &g : layer) {
            if (g.eps > 0 && rng.uniform() < g.eps) {
                if (g.kind == NoisyGate::One) {
                    uint64_t l = 1 + rng.uniform_index(3);
                    fx ^= (l & 1) << g.a;
                    fz ^= ((l >> 1) & 1) << g.a;
                } else {
                    uint64_t l = 1 + rng.uniform_index(15);
                    uint64_t la = l & 3;
                    uint64_t lb = l >> 2;
                    fx ^= ((la & 1) << g.a) ^ ((lb & 1) << g.b);
                    fz ^= (((la >> 1) & 1) << g.a) ^ (((lb >> 1) & 1) << g.b);
                }
            }
        }
    }
    uint64_t out = c.target ^ fx;
    for (size_t q = 0; q < c.width; q++) {
        if (c.readout[q] > 0 && rng.uniform() < c.readout[q]) {
            out ^= uint64_t{1} << q;
        }
    }
    return out;
}

std::unordered_map<uint64_t, uint64_t> run_block(
    const CompiledCircuit &c, const SimulationOptions &options, size_t block) {
    const LetterTable &table = letter_table();
    Rng rng = Rng::substream(options.seed, {options.stream, block});
    size_t begin = block * options.block_size;
    size_t end = std::min(options.shots, begin + options.block_size);
    std::unordered_map<uint64_t, uint64_t> counts;
    for (size_t s = begin; s < end; s++) {
        counts[run_shot(c, table, rng)]++;
    }
    return counts;
}

Counts to_counts(const std::vector<std::unordered_map<uint64_t, uint64_t>> &blocks, size_t w) {
    Counts out;
    for (const auto &block : blocks) {
        for (const auto &[mask, n] : block) {
            std::string key(w, '0');
            for (size_t q = 0; q < w; q++) {
                if ((mask >> q) & 1) {
                    key[q] = '1';
                }
            }
            out[key] += n;
        }
    }
    return out;
}

size_t num_blocks(const SimulationOptions &options) {
    if (options.shots == 0 || options.block_size == 0) {
        throw Error(ErrorCode::ContractViolation, "shots and block size must be positive");
    }
    return (options.shots + options.block_size - 1) / options.block_size;
}

}  // namespace

Counts simulate_local_dep_serial(
    const Circuit &circuit, const std::string &target, const ErrorRateSet &rates, const SimulationOptions &options) {
    CompiledCircuit c = compile(circuit, target, rates);
    size_t nb = num_blocks(options);
    std::vector<std::unordered_map<uint64_t, uint64_t>> blocks;
    for (size_t b = 0; b < nb; b++) {
        blocks.push_back(run_block(c, options, b));
    }
    return to_counts(blocks, c.width);
}

Counts simulate_local_dep(
    const Circuit &circuit, const std::string &target, const ErrorRateSet &rates, const SimulationOptions &options) {
    CompiledCircuit c = compile(circuit, target, rates);
    size_t nb = num_blocks(options);
    std::vector<std::unordered_map<uint64_t, uint64_t>> blocks(nb);
#pragma omp parallel for schedule(static)
    for (long b = 0; b < static_cast<long>(nb); b++) {
        blocks[b] = run_block(c, options, static_cast<size_t>(b));
    }
    return to_counts(blocks, c.width);
}

double predicted_crossing_depth(size_t w, double xi, double s_readout, double eps1, std::optional<double> eps2) {
    double floor = std::ldexp(1.0, -static_cast<int>(w));
    double l1 = 1 - 4 * eps1 / 3;
    double l2 = eps2 ? 1 - 16 * *eps2 / 15 : 1.0;
    double amplitude = s_readout - floor;
    if (amplitude <= 0) {
        return -INFINITY;
    }
    if (l1 <= 0 || l2 <= 0) {
        return -INFINITY;
    }
    double num = std::log(std::exp(-1.0) * (1 - floor) / amplitude);
    double den = (static_cast<double>(w) - xi) * std::log(l1) + (xi / 2) * std::log(l2);
    if (den == 0) {
        return num < 0 ? INFINITY : (num == 0 ? 0.0 : -INFINITY);
    }
    return num / den;
}

std::vector<QubitSetScore> rank_qubit_sets_from_rates(
    const ConnectivityGraph &graph, TwoQubitKind kind, const ErrorRateSet &rates, size_t w, double xi) {
    if (w == 0 || w > graph.num_qubits()) {
        throw Error(ErrorCode::Embedding, "width " + std::to_string(w) + " outside the device");
    }
    auto subsets = connected_subsets(graph, w);
    if (subsets.empty()) {
        throw Error(ErrorCode::Embedding, "no connected set of " + std::to_string(w) + " qubits");
    }
    std::vector<QubitSetScore> scores;
    for (auto &s : subsets) {
        ConnectivityGraph sub = graph.induced(s);
        double s_readout = 1;
        for (const auto &q : sub.qubits()) {
            s_readout *= 1 - rates.readout_rate(q);
        }
        double eps1 = rates.mean_one_qubit_rate(sub.qubits());
        auto eps2 = rates.mean_two_qubit_rate(sub, kind);
        scores.push_back({std::move(s), predicted_crossing_depth(w, xi, s_readout, eps1, eps2)});
    }
    std::stable_sort(scores.begin(), scores.end(), [](const QubitSetScore &a, const QubitSetScore &b) {
        return a.crossing_depth > b.crossing_depth;
    });
    return scores;
}

QubitSetScore select_best_qubits_from_rates(
    const ConnectivityGraph &graph, TwoQubitKind kind, const ErrorRateSet &rates, size_t w, double xi) {
    return rank_qubit_sets_from_rates(graph, kind, rates, w, xi).front();
}

}  // namespace mirrorbench

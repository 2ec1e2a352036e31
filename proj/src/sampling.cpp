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

#include "mirrorbench/sampling.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <functional>

#include "mirrorbench/error.hpp"

namespace mirrorbench {

std::vector<Edge> sample_edges_chi1(const ConnectivityGraph &graph, Rng &rng) {
    const auto &edges = graph.undirected_edges();
    if (edges.empty() || rng.uniform_index(2) == 0) {
        return {};
    }
    return {edges[rng.uniform_index(edges.size())]};
}

std::vector<Edge> sample_candidate_edges(const ConnectivityGraph &graph, Rng &rng) {
    std::vector<Edge> remaining = graph.undirected_edges();
    std::vector<Edge> chosen;
    while (!remaining.empty()) {
        Edge e = remaining[rng.uniform_index(remaining.size())];
        chosen.push_back(e);
        std::erase_if(remaining, [&](const Edge &f) {
            return f.first == e.first || f.first == e.second || f.second == e.first || f.second == e.second;
        });
    }
    return chosen;
}

static double inclusion_probability(size_t w, double xi_bar, size_t candidates) {
    if (xi_bar == 0) {
        return 0;
    }
    if (candidates == 0) {
        return INFINITY;
    }
    return static_cast<double>(w) * xi_bar / static_cast<double>(candidates);
}

std::vector<Edge> sample_edges_edgegrab(const ConnectivityGraph &graph, double xi_bar, Rng &rng) {
    if (xi_bar < 0) {
        throw Error(ErrorCode::InfeasibleDensity, "expected density must be non-negative");
    }
    std::vector<Edge> candidates = sample_candidate_edges(graph, rng);
    // Edgeless graphs (w = 1) have nothing to include.
    if (candidates.empty()) {
        return {};
    }
    double p = inclusion_probability(graph.num_qubits(), xi_bar, candidates.size());
    if (p > 1) {
        throw Error(
            ErrorCode::InfeasibleDensity,
            "candidate set of size " + std::to_string(candidates.size()) + " gives inclusion probability " +
                std::to_string(p) + " > 1");
    }
    std::vector<Edge> out;
    for (const auto &e : candidates) {
        if (rng.bernoulli(p)) {
            out.push_back(e);
        }
    }
    return out;
}

size_t min_candidate_set_size(const ConnectivityGraph &graph) {
    const auto &edges = graph.undirected_edges();
    size_t m = edges.size();
    if (m == 0) {
        return 0;
    }
    if (m <= 20) {
        // The greedy matching reaches exactly the maximal matchings.
        size_t best = m;
        for (uint32_t mask = 1; mask < (uint32_t{1} << m); mask++) {
            size_t size = std::popcount(mask);
            if (size >= best) {
                continue;
            }
            std::vector<bool> used(graph.num_qubits(), false);
            bool matching = true;
            for (size_t k = 0; k < m && matching; k++) {
                if (mask >> k & 1) {
                    auto [a, b] = edges[k];
                    matching = !used[a] && !used[b];
                    used[a] = used[b] = true;
                }
            }
            if (!matching) {
                continue;
            }
            bool maximal = true;
            for (size_t k = 0; k < m && maximal; k++) {
                maximal = used[edges[k].first] || used[edges[k].second];
            }
            if (maximal) {
                best = size;
            }
        }
        return best;
    }
    Rng rng(0x6d6174636869ULL);
    size_t best = m;
    for (int i = 0; i < 10000; i++) {
        best = std::min(best, sample_candidate_edges(graph, rng).size());
    }
    return best;
}

void check_edgegrab_feasible(const ConnectivityGraph &graph, double xi_bar) {
    if (xi_bar < 0) {
        throw Error(ErrorCode::InfeasibleDensity, "expected density must be non-negative");
    }
    if (xi_bar == 0) {
        return;
    }
    size_t smallest = min_candidate_set_size(graph);
    if (smallest == 0) {
        return;
    }
    double p = inclusion_probability(graph.num_qubits(), xi_bar, smallest);
    if (p > 1) {
        throw Error(
            ErrorCode::InfeasibleDensity,
            "candidate set of size " + std::to_string(smallest) + " on " + std::to_string(graph.num_qubits()) +
                " qubits gives inclusion probability " + std::to_string(p) + " > 1");
    }
}

static TwoQubitGate orient(const ConnectivityGraph &graph, TwoQubitKind kind, const Edge &e, Rng &rng) {
    auto options = graph.orientations(kind, e.first, e.second);
    if (options.empty()) {
        throw Error(ErrorCode::ContractViolation, "no allowed orientation for sampled edge");
    }
    Edge o = options.size() == 1 ? options[0] : options[rng.uniform_index(options.size())];
    return {kind, o.first, o.second};
}

Layer sample_omega_layer(
    const EdgeSampler &sampler, const GateSet &gate_set, const ConnectivityGraph &graph, Rng &rng) {
    if (gate_set.one_qubit_gates.empty()) {
        throw Error(ErrorCode::Config, "gate set has no one-qubit gates");
    }
    std::vector<Edge> edges = sampler.kind == EdgeSampler::Kind::Chi1
                                  ? sample_edges_chi1(graph, rng)
                                  : sample_edges_edgegrab(graph, sampler.expected_density, rng);
    Layer layer = Layer::idle(graph.num_qubits());
    for (const auto &e : edges) {
        layer.place_two_qubit(orient(graph, gate_set.two_qubit_gate, e, rng));
    }
    for (auto &g : layer.one_qubit) {
        if (g != Layer::kInPair) {
            g = static_cast<uint8_t>(gate_set.one_qubit_gates[rng.uniform_index(gate_set.one_qubit_gates.size())]);
        }
    }
    return layer;
}

MirrorCircuit sample_randomized_mirror_circuit(
    size_t d, const EdgeSampler &sampler, const GateSet &gate_set, const ConnectivityGraph &graph, Rng &rng) {
    if (d % 4 != 0) {
        throw Error(ErrorCode::InvalidDepth, "randomized mirror circuits need d divisible by 4, got " + std::to_string(d));
    }
    size_t w = graph.num_qubits();
    if (w == 0) {
        throw Error(ErrorCode::ContractViolation, "empty qubit set");
    }
    Layer l0 = random_local_clifford_layer(w, rng);
    std::vector<Layer> first;
    std::vector<PauliOp> paulis;
    first.reserve(d / 2);
    for (size_t j = 0; j < d / 4; j++) {
        PauliOp p = random_pauli(w, rng);
        first.push_back(pauli_layer(p));
        paulis.push_back(p);
        first.push_back(sample_omega_layer(sampler, gate_set, graph, rng));
    }
    PauliOp q0 = random_pauli(w, rng);
    std::vector<Layer> second;
    std::vector<PauliOp> quasi(first.size(), PauliOp(w));
    second.reserve(d / 2);
    for (size_t j = d / 4; j-- > 0;) {
        second.push_back(first[2 * j + 1].inverse());
        PauliOp resampled = random_pauli(w, rng);
        second.push_back(pauli_layer(resampled));
        // U(P) U(P') = U(P P'), so the resampled layer is a quasi-inverse.
        quasi[2 * j] = pauli_compose(paulis[j], resampled);
        quasi[2 * j].set_phase(0);
    }
    return assemble_mirror(
        graph.qubits(), MirrorGenerator::Randomized, l0, first, q0, second, QuasiInversePolicy::uniform_pauli(),
        std::move(quasi));
}

size_t sample_truncated_power_of_two(size_t cap, Rng &rng) {
    size_t v = 1;
    while (v < cap && rng.uniform_index(2) == 1) {
        v *= 2;
    }
    return std::min(v, cap);
}

Germ sample_germ(const GateSet &gate_set, const ConnectivityGraph &graph, Rng &rng) {
    size_t w = graph.num_qubits();
    if (w == 0) {
        throw Error(ErrorCode::ContractViolation, "empty qubit set");
    }
    if (gate_set.one_qubit_gates.empty()) {
        throw Error(ErrorCode::Config, "gate set has no one-qubit gates");
    }
    Germ germ;
    germ.germ_depth = sample_truncated_power_of_two(8, rng);
    size_t dg = germ.germ_depth;
    std::vector<Layer> layers(dg, Layer::idle(w));
    for (size_t q = 0; q < w; q++) {
        size_t dl = sample_truncated_power_of_two(dg, rng);
        germ.local_depths.push_back(dl);
        std::vector<uint8_t> local(dl);
        for (auto &g : local) {
            g = static_cast<uint8_t>(gate_set.one_qubit_gates[rng.uniform_index(gate_set.one_qubit_gates.size())]);
        }
        for (size_t l = 0; l < dg; l++) {
            layers[l].one_qubit[q] = local[l % dl];
        }
    }

    if (w > 1) {
        // Smallest r with 2 / (r dg w) < 1/8.
        size_t r = 16 / (dg * w) + 1;
        germ.repetitions = r;
        std::vector<Layer> repeated;
        repeated.reserve(r * dg);
        for (size_t k = 0; k < r; k++) {
            repeated.insert(repeated.end(), layers.begin(), layers.end());
        }
        layers = std::move(repeated);

        std::vector<std::pair<size_t, Edge>> positions;
        for (size_t l = 0; l < layers.size(); l++) {
            for (const auto &e : sample_candidate_edges(graph, rng)) {
                positions.push_back({l, e});
            }
        }
        size_t n = std::min(r * dg * w / 16, positions.size());
        // Partial Fisher-Yates: the first n entries are a uniform n-subset.
        for (size_t k = 0; k < n; k++) {
            size_t j = k + rng.uniform_index(positions.size() - k);
            std::swap(positions[k], positions[j]);
        }
        positions.resize(n);
        std::sort(positions.begin(), positions.end());
        for (const auto &[l, e] : positions) {
            TwoQubitGate g = orient(graph, gate_set.two_qubit_gate, e, rng);
            layers[l].place_two_qubit(g);
            germ.placed.push_back({l, g});
        }
    }
    germ.circuit = Circuit(CircuitKind::QIQO, graph.qubits(), std::move(layers));
    return germ;
}

MirrorCircuit build_periodic_mirror_circuit(const Germ &germ, size_t d, Rng &rng) {
    if (d % 2 != 0) {
        throw Error(ErrorCode::InvalidDepth, "periodic mirror circuits need even d, got " + std::to_string(d));
    }
    size_t w = germ.circuit.width();
    size_t D = germ.depth();
    if (D == 0 && d > 0) {
        throw Error(ErrorCode::ContractViolation, "empty germ");
    }
    Layer l0 = random_local_clifford_layer(w, rng);
    std::vector<Layer> first;
    first.reserve(d / 2);
    for (size_t l = 0; l < d / 2; l++) {
        first.push_back(germ.circuit.layers[l % D]);
    }
    PauliOp q0 = random_pauli(w, rng);
    std::vector<Layer> second;
    second.reserve(d / 2);
    for (size_t k = first.size(); k-- > 0;) {
        second.push_back(first[k].inverse());
    }
    return assemble_mirror(
        germ.circuit.qubits, MirrorGenerator::Periodic, l0, first, q0, second, QuasiInversePolicy::exact(),
        std::vector<PauliOp>(first.size(), PauliOp(w)));
}

std::vector<std::pair<size_t, size_t>> ShapeGrid::shapes() const {
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t w : widths) {
        for (size_t d : depths) {
            if (!excluded(w, d)) {
                out.push_back({w, d});
            }
        }
    }
    return out;
}

const std::vector<size_t> &exp1_depths() {
    static const std::vector<size_t> depths = {0, 4, 8, 12, 20, 28, 40, 56, 80, 112, 160, 224, 316};
    return depths;
}

const std::vector<size_t> &exp2_depths() {
    static const std::vector<size_t> depths = {0, 4, 8, 16, 32, 64, 128, 256, 512};
    return depths;
}

ShapeGrid choose_shapes(size_t n, Experiment experiment) {
    if (n == 0) {
        throw Error(ErrorCode::ContractViolation, "choose_shapes needs n >= 1");
    }
    ShapeGrid grid;
    if (experiment == Experiment::Exp1) {
        for (size_t w = 1; w <= n; w *= 2) {
            grid.widths.push_back(w);
        }
        if (grid.widths.back() != n) {
            grid.widths.push_back(n);
        }
        grid.depths = exp1_depths();
    } else {
        for (size_t w = 1; w <= n; w++) {
            grid.widths.push_back(w);
        }
        grid.depths = exp2_depths();
    }
    return grid;
}

namespace {

std::vector<std::vector<uint32_t>> neighbor_lists(const ConnectivityGraph &graph) {
    std::vector<std::vector<uint32_t>> nbrs(graph.num_qubits());
    for (auto [a, b] : graph.undirected_edges()) {
        nbrs[a].push_back(b);
        nbrs[b].push_back(a);
    }
    for (auto &v : nbrs) {
        std::sort(v.begin(), v.end());
    }
    return nbrs;
}

}  // namespace

std::vector<std::vector<uint32_t>> connected_subsets(const ConnectivityGraph &graph, size_t w) {
    size_t n = graph.num_qubits();
    std::vector<std::vector<uint32_t>> out;
    if (w == 0 || w > n) {
        return out;
    }
    auto nbrs = neighbor_lists(graph);
    // ESU enumeration: each connected w-subset is produced exactly once,
    // rooted at its smallest member.
    std::vector<uint32_t> sub;
    std::vector<char> in_sub(n, 0);
    std::vector<int> near(n, 0);  // number of members of sub adjacent to (or equal to) a vertex
    std::function<void(std::vector<uint32_t>, uint32_t)> extend = [&](std::vector<uint32_t> ext, uint32_t root) {
        if (sub.size() == w) {
            auto s = sub;
            std::sort(s.begin(), s.end());
            out.push_back(std::move(s));
            return;
        }
        while (!ext.empty()) {
            uint32_t v = ext.back();
            ext.pop_back();
            std::vector<uint32_t> next = ext;
            for (uint32_t u : nbrs[v]) {
                if (u > root && near[u] == 0) {
                    next.push_back(u);
                }
            }
            sub.push_back(v);
            in_sub[v] = 1;
            near[v]++;
            for (uint32_t u : nbrs[v]) {
                near[u]++;
            }
            extend(next, root);
            sub.pop_back();
            in_sub[v] = 0;
            near[v]--;
            for (uint32_t u : nbrs[v]) {
                near[u]--;
            }
        }
    };
    for (uint32_t root = 0; root < n; root++) {
        sub = {root};
        in_sub[root] = 1;
        near[root]++;
        for (uint32_t u : nbrs[root]) {
            near[u]++;
        }
        std::vector<uint32_t> ext;
        for (uint32_t u : nbrs[root]) {
            if (u > root) {
                ext.push_back(u);
            }
        }
        extend(ext, root);
        in_sub[root] = 0;
        near[root]--;
        for (uint32_t u : nbrs[root]) {
            near[u]--;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<uint32_t>> select_embeddings_exp1(const ConnectivityGraph &graph, size_t w) {
    size_t n = graph.num_qubits();
    if (w == 0 || w > n) {
        throw Error(ErrorCode::Embedding, "width " + std::to_string(w) + " outside 1.." + std::to_string(n));
    }
    if (!graph.is_connected()) {
        throw Error(ErrorCode::Embedding, "connectivity graph is not connected");
    }
    if (n <= 5) {
        return connected_subsets(graph, w);
    }
    auto nbrs = neighbor_lists(graph);
    std::vector<char> covered(n, 0);
    std::vector<std::vector<uint32_t>> sets;
    while (true) {
        auto seed = std::find(covered.begin(), covered.end(), 0);
        if (seed == covered.end()) {
            break;
        }
        std::vector<uint32_t> set{static_cast<uint32_t>(seed - covered.begin())};
        std::vector<char> member(n, 0);
        member[set[0]] = 1;
        while (set.size() < w) {
            // Frontier of the current set; prefer uncovered qubits, then the
            // one closest to the seed in insertion order, then lowest index.
            std::optional<uint32_t> pick;
            for (int want_uncovered = 1; want_uncovered >= 0 && !pick; want_uncovered--) {
                for (uint32_t v : set) {
                    for (uint32_t u : nbrs[v]) {
                        if (!member[u] && (covered[u] == 0) == (want_uncovered == 1)) {
                            pick = u;
                            break;
                        }
                    }
                    if (pick) {
                        break;
                    }
                }
            }
            if (!pick) {
                throw Error(ErrorCode::Embedding, "cannot grow a connected set of size " + std::to_string(w));
            }
            member[*pick] = 1;
            set.push_back(*pick);
        }
        for (uint32_t v : set) {
            covered[v] = 1;
        }
        std::sort(set.begin(), set.end());
        sets.push_back(std::move(set));
    }
    return sets;
}

}  // namespace mirrorbench

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
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mirrorbench/circuits.hpp"
#include "mirrorbench/mirroring.hpp"
#include "mirrorbench/rng.hpp"

namespace mirrorbench {

struct EdgeSampler {
    enum class Kind : uint8_t { Chi1, EdgeGrab };
    Kind kind = Kind::Chi1;
    /// Expected two-qubit gate density of the resulting mirror circuits (edge grab only).
    double expected_density = 0.0;

    static EdgeSampler chi1() {
        return {Kind::Chi1, 0.0};
    }
    static EdgeSampler edge_grab(double xi_bar) {
        return {Kind::EdgeGrab, xi_bar};
    }
};

/// Empty with probability 1/2, otherwise one uniformly random undirected edge.
/// Graphs without edges always give the empty set. Edges come back as (min, max).
std::vector<Edge> sample_edges_chi1(const ConnectivityGraph &graph, Rng &rng);

/// First step of the edge grab: greedy random maximal matching.
std::vector<Edge> sample_candidate_edges(const ConnectivityGraph &graph, Rng &rng);

/// Full edge grab. Throws InfeasibleDensity if the drawn candidate set is too
/// small for w * xi_bar / |E| <= 1.
std::vector<Edge> sample_edges_edgegrab(const ConnectivityGraph &graph, double xi_bar, Rng &rng);

/// Smallest candidate-set size the greedy matching can produce: exact over
/// all edge subsets for at most 20 edges, else the minimum over 10^4 draws.
size_t min_candidate_set_size(const ConnectivityGraph &graph);

/// Throws InfeasibleDensity naming the offending candidate-set size when some
/// reachable candidate set E has w * xi_bar / |E| > 1.
void check_edgegrab_feasible(const ConnectivityGraph &graph, double xi_bar);

/// Two-qubit gates on sampled edges (orientation uniform among the allowed
/// ones), independent uniform draws from the one-qubit gate set elsewhere.
Layer sample_omega_layer(
    const EdgeSampler &sampler, const GateSet &gate_set, const ConnectivityGraph &graph, Rng &rng);

/// Randomized mirror circuit of benchmark depth d (a multiple of 4) on the
/// qubits of `graph` (already restricted to the w benchmarked qubits).
MirrorCircuit sample_randomized_mirror_circuit(
    size_t d, const EdgeSampler &sampler, const GateSet &gate_set, const ConnectivityGraph &graph, Rng &rng);

struct PlacedGate {
    size_t layer;
    TwoQubitGate gate;
};

struct Germ {
    /// QI/QO circuit of depth germ_depth * repetitions.
    Circuit circuit;
    size_t germ_depth = 1;
    size_t repetitions = 1;
    std::vector<size_t> local_depths;
    std::vector<PlacedGate> placed;

    size_t depth() const {
        return circuit.depth();
    }
};

/// 2^x with probability 2^-(x+1), truncated at `cap` (a power of two).
size_t sample_truncated_power_of_two(size_t cap, Rng &rng);

Germ sample_germ(const GateSet &gate_set, const ConnectivityGraph &graph, Rng &rng);

/// Periodic mirror circuit of even benchmark depth d from `germ`; only the
/// L0 and central Pauli draws consume `rng`.
MirrorCircuit build_periodic_mirror_circuit(const Germ &germ, size_t d, Rng &rng);

enum class Experiment : uint8_t { Exp1, Exp2 };

struct ShapeGrid {
    std::vector<size_t> widths;
    std::vector<size_t> depths;
    std::set<std::pair<size_t, size_t>> exclusions;

    bool excluded(size_t w, size_t d) const {
        return exclusions.count({w, d}) > 0;
    }
    std::vector<std::pair<size_t, size_t>> shapes() const;
};

const std::vector<size_t> &exp1_depths();
const std::vector<size_t> &exp2_depths();
ShapeGrid choose_shapes(size_t n, Experiment experiment);

/// Every w-subset (sorted positions) inducing a connected subgraph, in
/// lexicographic order.
std::vector<std::vector<uint32_t>> connected_subsets(const ConnectivityGraph &graph, size_t w);

/// n <= 5: all connected w-subsets. n > 5: a greedy cover of ceil(n/w)
/// connected w-subsets (more when the graph's shape forces overlap).
std::vector<std::vector<uint32_t>> select_embeddings_exp1(const ConnectivityGraph &graph, size_t w);

}  // namespace mirrorbench

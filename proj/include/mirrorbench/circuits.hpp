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
#include <string_view>
#include <utility>
#include <vector>

#include "mirrorbench/clifford1q.hpp"

namespace mirrorbench {

enum class TwoQubitKind : uint8_t { CNOT, CZ };

std::string_view two_qubit_kind_name(TwoQubitKind kind);
std::optional<TwoQubitKind> parse_two_qubit_kind(std::string_view text);

/// CZ is symmetric; CNOT is directed (control, target).
constexpr bool is_symmetric(TwoQubitKind kind) {
    return kind == TwoQubitKind::CZ;
}

using Edge = std::pair<uint32_t, uint32_t>;

/// Directed connectivity graph over labelled physical qubits. Qubits are
/// addressed by their position in `qubits()`.
class ConnectivityGraph {
   public:
    ConnectivityGraph() = default;
    ConnectivityGraph(std::vector<std::string> qubits, std::vector<Edge> directed_edges);

    /// Convenience constructor resolving labelled edges.
    static ConnectivityGraph from_labels(
        std::vector<std::string> qubits, const std::vector<std::pair<std::string, std::string>> &edges);
    /// Unlabelled helpers ("0", "1", ...), mostly for tests and examples.
    static ConnectivityGraph path(uint32_t n);
    static ConnectivityGraph ring(uint32_t n);
    static ConnectivityGraph complete(uint32_t n);

    size_t num_qubits() const {
        return qubits_.size();
    }
    const std::vector<std::string> &qubits() const {
        return qubits_;
    }
    const std::vector<Edge> &directed_edges() const {
        return directed_edges_;
    }
    /// Each undirected edge once, as (min, max).
    const std::vector<Edge> &undirected_edges() const {
        return undirected_edges_;
    }
    std::optional<uint32_t> index_of(std::string_view label) const;

    bool has_directed_edge(uint32_t a, uint32_t b) const;
    bool adjacent(uint32_t a, uint32_t b) const;
    /// Whether the gate may act on (first, second) with first as control for CNOT.
    bool allows(TwoQubitKind kind, uint32_t first, uint32_t second) const;
    /// Orientations of undirected edge {a, b} on which `kind` may be applied.
    std::vector<Edge> orientations(TwoQubitKind kind, uint32_t a, uint32_t b) const;

    /// Induced subgraph on `subset` (positions), relabelled 0..|subset|-1 in
    /// the given order; labels are carried over.
    ConnectivityGraph induced(const std::vector<uint32_t> &subset) const;
    bool is_connected() const;
    bool is_connected_subset(const std::vector<uint32_t> &subset) const;

   private:
    std::vector<std::string> qubits_;
    std::vector<Edge> directed_edges_;
    std::vector<Edge> undirected_edges_;
    std::set<Edge> directed_set_;
};

struct GateSet {
    /// Canonical clifford1q indices; always includes the identity.
    std::vector<int> one_qubit_gates;
    TwoQubitKind two_qubit_gate = TwoQubitKind::CNOT;

    /// All 24 single-qubit Cliffords plus `two_qubit`.
    static GateSet full(TwoQubitKind two_qubit);
    bool contains_one_qubit(int gate) const;
    /// True when the one-qubit gates are a strict subset of the 24 Cliffords.
    bool is_restricted() const {
        return one_qubit_gates.size() < static_cast<size_t>(clifford1q::kCount);
    }
    void validate() const;
};

struct TwoQubitGate {
    TwoQubitKind kind;
    uint32_t first;   // control for CNOT
    uint32_t second;  // target for CNOT

    bool operator==(const TwoQubitGate &) const = default;
};

/// A w-qubit layer. `one_qubit[q]` is the clifford1q index acting on q, or
/// kInPair when q is covered by an entry of `two_qubit`.
struct Layer {
    static constexpr uint8_t kInPair = 0xFF;

    std::vector<uint8_t> one_qubit;
    std::vector<TwoQubitGate> two_qubit;

    static Layer idle(size_t width);
    static Layer from_one_qubit(std::vector<uint8_t> gates);

    size_t width() const {
        return one_qubit.size();
    }
    size_t num_two_qubit_gates() const {
        return two_qubit.size();
    }
    /// Adds a two-qubit gate, marking both qubits as covered.
    void place_two_qubit(TwoQubitGate gate);
    /// Throws ContractViolation when a qubit is covered twice or not at all.
    void validate() const;
    /// Exact inverse layer: each gate inverted (both two-qubit gates are self-inverse).
    Layer inverse() const;

    bool operator==(const Layer &) const = default;
};

enum class CircuitKind : uint8_t {
    /// Quantum input / quantum output subroutine.
    QIQO,
    /// Fixed input / classical output: implicit initialization before the
    /// first layer and readout after the last.
    FICO,
};

struct Circuit {
    CircuitKind kind = CircuitKind::QIQO;
    /// Physical labels for circuit positions 0..w-1.
    std::vector<std::string> qubits;
    std::vector<Layer> layers;

    Circuit() = default;
    Circuit(CircuitKind kind, std::vector<std::string> qubits, std::vector<Layer> layers = {});

    size_t width() const {
        return qubits.size();
    }
    /// Number of unitary layers (I and R excluded).
    size_t depth() const {
        return layers.size();
    }
    /// Full depth d0: layers plus I and R for FI/CO circuits.
    size_t full_depth() const {
        return layers.size() + (kind == CircuitKind::FICO ? 2 : 0);
    }
    size_t count_two_qubit_gates() const;
    void validate() const;

    bool operator==(const Circuit &) const = default;
};

/// Canonical layer set for (gate set, connectivity) with no parallelization
/// constraint.
struct LayerSet {
    GateSet gate_set;
    ConnectivityGraph connectivity;
};

bool layer_in_set(const Layer &layer, const LayerSet &set);

/// 2*alpha / (w*d) where alpha counts two-qubit gates in the non-overhead
/// layers; for mirror circuits the five overhead layers never hold two-qubit
/// gates so the whole circuit can be counted.
double two_qubit_gate_density(const Circuit &circuit, size_t benchmark_depth);

/// Line-oriented text form:
///
///     circuit fico 3 Q0 Q1 Q2
///     H:0 CNOT:1,2
///     ...
///
/// Header: kind (qiqo|fico), width, labels. Then one layer per line; qubits
/// not mentioned are idle. An empty layer is written as "-".
std::string serialize_circuit(const Circuit &circuit);
Circuit parse_circuit(std::string_view text);

}  // namespace mirrorbench

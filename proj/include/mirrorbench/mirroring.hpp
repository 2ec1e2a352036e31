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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mirrorbench/circuits.hpp"
#include "mirrorbench/rng.hpp"
#include "mirrorbench/stabilizer.hpp"

namespace mirrorbench {

enum class QuasiInverseMode : uint8_t {
    /// Q_i = identity, so the quasi-inverse is the exact inverse layer.
    Exact,
    /// Q_i uniform over the Paulis supported on the single-qubit gates of L_i.
    UniformPauli,
};

struct QuasiInversePolicy {
    QuasiInverseMode mode = QuasiInverseMode::Exact;

    static QuasiInversePolicy exact() {
        return {QuasiInverseMode::Exact};
    }
    static QuasiInversePolicy uniform_pauli() {
        return {QuasiInverseMode::UniformPauli};
    }
    std::string_view name() const {
        return mode == QuasiInverseMode::Exact ? "exact" : "uniform-pauli";
    }
    static std::optional<QuasiInversePolicy> parse(std::string_view text);

    bool operator==(const QuasiInversePolicy &) const = default;
};

enum class MirrorGenerator : uint8_t { SCC, Randomized, Periodic };
std::string_view mirror_generator_name(MirrorGenerator g);
std::optional<MirrorGenerator> parse_mirror_generator(std::string_view text);

/// A FI/CO mirror circuit with its construction record. Layout of
/// `circuit.layers`: L0, the d_src source layers, the central Pauli layer,
/// the d_src quasi-inverse layers (reversed), L0^-1.
struct MirrorCircuit {
    Circuit circuit;
    MirrorGenerator generator = MirrorGenerator::SCC;
    size_t source_depth = 0;
    Layer l0;
    PauliOp q0;
    QuasiInversePolicy policy;
    /// quasi_paulis[i] is the Q_i used to invert source layer i.
    std::vector<PauliOp> quasi_paulis;
    std::string target;
    size_t benchmark_depth = 0;

    size_t width() const {
        return circuit.width();
    }
    /// Source layer i (0-based, time order).
    const Layer &source_layer(size_t i) const {
        return circuit.layers[1 + i];
    }
    /// Quasi-inverse of source layer i.
    const Layer &inverse_layer(size_t i) const {
        return circuit.layers[circuit.layers.size() - 2 - i];
    }
    const Layer &central_layer() const {
        return circuit.layers[1 + source_depth];
    }
};

/// The layer L~^-1 with U(L) U(L~^-1) = U(Q) up to global phase. Two-qubit
/// gates stay on their edge; Q must act trivially on their support since a
/// correction there cannot be folded into the same layer.
Layer quasi_inverse_layer(const Layer &layer, const PauliOp &q);

/// Layer of single-qubit Pauli gates implementing `p` (phase dropped).
Layer pauli_layer(const PauliOp &p);
PauliOp random_pauli(size_t width, Rng &rng);
/// Uniform over the Paulis acting trivially on every two-qubit gate of `layer`.
PauliOp random_local_pauli(const Layer &layer, Rng &rng);
/// Independent uniform single-qubit Clifford on every qubit.
Layer random_local_clifford_layer(size_t width, Rng &rng);

/// Assembles circuit, target and bookkeeping from the parts. `second_half`
/// is in time order (quasi-inverse of the last source layer first).
MirrorCircuit assemble_mirror(
    std::vector<std::string> qubits,
    MirrorGenerator generator,
    const Layer &l0,
    const std::vector<Layer> &first_half,
    const PauliOp &q0,
    const std::vector<Layer> &second_half,
    QuasiInversePolicy policy,
    std::vector<PauliOp> quasi_paulis);

/// SCC mirroring of a QI/QO Clifford circuit: R L0^-1 C~^-1 Q0 C L0 I.
/// Draw order from `rng`: L0, Q0, then Q_i for source layers in time order.
MirrorCircuit scc_mirror(const Circuit &source, const QuasiInversePolicy &policy, Rng &rng);

}  // namespace mirrorbench

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

#include "mirrorbench/mirroring.hpp"

#include "mirrorbench/error.hpp"

namespace mirrorbench {

std::optional<QuasiInversePolicy> QuasiInversePolicy::parse(std::string_view text) {
    if (text == "exact") {
        return exact();
    }
    if (text == "uniform-pauli") {
        return uniform_pauli();
    }
    return std::nullopt;
}

std::string_view mirror_generator_name(MirrorGenerator g) {
    switch (g) {
        case MirrorGenerator::SCC:
            return "scc";
        case MirrorGenerator::Randomized:
            return "randomized";
        case MirrorGenerator::Periodic:
            return "periodic";
    }
    return "scc";
}

std::optional<MirrorGenerator> parse_mirror_generator(std::string_view text) {
    for (auto g : {MirrorGenerator::SCC, MirrorGenerator::Randomized, MirrorGenerator::Periodic}) {
        if (mirror_generator_name(g) == text) {
            return g;
        }
    }
    return std::nullopt;
}

Layer quasi_inverse_layer(const Layer &layer, const PauliOp &q) {
    if (layer.width() != q.width()) {
        throw Error(ErrorCode::ContractViolation, "quasi_inverse_layer: width mismatch");
    }
    Layer out = layer;
    for (size_t i = 0; i < layer.width(); i++) {
        uint8_t g = layer.one_qubit[i];
        Letter l = q.letter(i);
        if (g == Layer::kInPair) {
            if (l != Letter::I) {
                throw Error(
                    ErrorCode::PolicyInfeasible,
                    "Pauli correction on qubit " + std::to_string(i) +
                        " lies on a two-qubit gate and cannot be absorbed into the same layer");
            }
            continue;
        }
        if (g >= clifford1q::kCount) {
            throw Error(ErrorCode::UnsupportedGate, "gate index " + std::to_string(g));
        }
        // U(g) U(h) = U(P)  =>  U(h) = U(g)^dag U(P).
        out.one_qubit[i] = static_cast<uint8_t>(clifford1q::compose(clifford1q::inverse(g), clifford1q::pauli(l)));
    }
    return out;
}

Layer pauli_layer(const PauliOp &p) {
    Layer layer = Layer::idle(p.width());
    for (size_t i = 0; i < p.width(); i++) {
        layer.one_qubit[i] = static_cast<uint8_t>(clifford1q::pauli(p.letter(i)));
    }
    return layer;
}

PauliOp random_pauli(size_t width, Rng &rng) {
    PauliOp p(width);
    for (size_t i = 0; i < width; i++) {
        p.set(i, static_cast<Letter>(rng.uniform_index(4)));
    }
    return p;
}

PauliOp random_local_pauli(const Layer &layer, Rng &rng) {
    PauliOp p(layer.width());
    for (size_t i = 0; i < layer.width(); i++) {
        if (layer.one_qubit[i] != Layer::kInPair) {
            p.set(i, static_cast<Letter>(rng.uniform_index(4)));
        }
    }
    return p;
}

Layer random_local_clifford_layer(size_t width, Rng &rng) {
    Layer layer = Layer::idle(width);
    for (auto &g : layer.one_qubit) {
        g = static_cast<uint8_t>(rng.uniform_index(clifford1q::kCount));
    }
    return layer;
}

MirrorCircuit assemble_mirror(
    std::vector<std::string> qubits,
    MirrorGenerator generator,
    const Layer &l0,
    const std::vector<Layer> &first_half,
    const PauliOp &q0,
    const std::vector<Layer> &second_half,
    QuasiInversePolicy policy,
    std::vector<PauliOp> quasi_paulis) {
    if (first_half.size() != second_half.size()) {
        throw Error(ErrorCode::ContractViolation, "mirror halves differ in depth");
    }
    MirrorCircuit m;
    m.generator = generator;
    m.source_depth = first_half.size();
    m.l0 = l0;
    m.q0 = q0;
    m.q0.set_phase(0);
    m.policy = policy;
    m.quasi_paulis = std::move(quasi_paulis);
    m.benchmark_depth = 2 * first_half.size();

    Circuit &c = m.circuit;
    c.kind = CircuitKind::FICO;
    c.qubits = std::move(qubits);
    c.layers.reserve(2 * first_half.size() + 3);
    c.layers.push_back(l0);
    c.layers.insert(c.layers.end(), first_half.begin(), first_half.end());
    c.layers.push_back(pauli_layer(q0));
    c.layers.insert(c.layers.end(), second_half.begin(), second_half.end());
    c.layers.push_back(l0.inverse());
    c.validate();
    m.target = target_bitstring(c);
    return m;
}

MirrorCircuit scc_mirror(const Circuit &source, const QuasiInversePolicy &policy, Rng &rng) {
    source.validate();
    size_t w = source.width();
    for (const auto &layer : source.layers) {
        clifford_from_layer(layer);
    }
    Layer l0 = random_local_clifford_layer(w, rng);
    PauliOp q0 = random_pauli(w, rng);
    size_t d = source.depth();
    std::vector<PauliOp> quasi;
    quasi.reserve(d);
    for (const auto &layer : source.layers) {
        quasi.push_back(policy.mode == QuasiInverseMode::Exact ? PauliOp(w) : random_local_pauli(layer, rng));
    }
    std::vector<Layer> second;
    second.reserve(d);
    for (size_t k = 0; k < d; k++) {
        size_t i = d - 1 - k;
        second.push_back(quasi_inverse_layer(source.layers[i], quasi[i]));
    }
    return assemble_mirror(source.qubits, MirrorGenerator::SCC, l0, source.layers, q0, second, policy, std::move(quasi));
}

}  // namespace mirrorbench

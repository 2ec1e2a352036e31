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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mirrorbench/circuits.hpp"
#include "mirrorbench/mirroring.hpp"
#include "mirrorbench/noise.hpp"
#include "mirrorbench/sampling.hpp"

namespace mirrorbench {

enum class SuiteKind : uint8_t {
    Exp1Randomized,
    Exp2Randomized,
    Exp2Periodic,
    /// Randomized and periodic circuits over the same shapes and qubits.
    Exp2,
};

std::string_view suite_kind_name(SuiteKind kind);
std::optional<SuiteKind> parse_suite_kind(std::string_view text);
Experiment suite_experiment(SuiteKind kind);
std::vector<MirrorGenerator> suite_generators(SuiteKind kind);

struct SuiteConfig {
    SuiteKind kind = SuiteKind::Exp2;
    ShapeGrid grid;
    /// Width -> qubit sets (positions in the device graph) to benchmark on.
    std::map<size_t, std::vector<std::vector<uint32_t>>> embeddings;
    size_t circuits_per_shape = 40;
    uint64_t seed = 0;
    double expected_density = 0.125;
};

/// One generated circuit with the keys of the rng substream that produced it:
/// (seed, generator, width, depth, embedding, index).
struct SuiteCircuit {
    std::string id;
    MirrorGenerator generator = MirrorGenerator::Randomized;
    size_t width = 0;
    size_t depth = 0;
    size_t embedding = 0;
    size_t index = 0;
    std::vector<uint32_t> qubits;
    MirrorCircuit mirror;
    /// Depth of the sampled germ for periodic circuits, else 0.
    size_t germ_depth = 0;
};

/// Standard suite on a device: the experiment's shape grid, exp1 embeddings
/// covering the device, and for exp2 one qubit set per width (the best
/// predicted set when `rates` is given, else the first connected subset).
SuiteConfig plan_suite(
    const ConnectivityGraph &device,
    TwoQubitKind two_qubit_kind,
    SuiteKind kind,
    uint64_t seed,
    size_t circuits_per_shape,
    const ErrorRateSet *rates = nullptr);

std::string suite_circuit_id(MirrorGenerator g, size_t w, size_t d, size_t embedding, size_t index);

/// Generates a single suite entry from its substream; the building block of
/// both suite generators and of regeneration from a manifest.
SuiteCircuit generate_suite_circuit(
    const SuiteConfig &config,
    const ConnectivityGraph &device,
    const GateSet &gate_set,
    MirrorGenerator generator,
    size_t width,
    size_t depth,
    size_t embedding,
    size_t index);

/// OpenMP-parallel over circuits. Output order and content match
/// generate_suite_serial exactly.
std::vector<SuiteCircuit> generate_suite(
    const SuiteConfig &config, const ConnectivityGraph &device, const GateSet &gate_set);
std::vector<SuiteCircuit> generate_suite_serial(
    const SuiteConfig &config, const ConnectivityGraph &device, const GateSet &gate_set);

}  // namespace mirrorbench

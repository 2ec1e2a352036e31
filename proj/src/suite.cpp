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

#include "mirrorbench/suite.hpp"

#include <exception>

#include "mirrorbench/error.hpp"

namespace mirrorbench {

std::string_view suite_kind_name(SuiteKind kind) {
    switch (kind) {
        case SuiteKind::Exp1Randomized:
            return "exp1-randomized";
        case SuiteKind::Exp2Randomized:
            return "exp2-randomized";
        case SuiteKind::Exp2Periodic:
            return "exp2-periodic";
        case SuiteKind::Exp2:
            return "exp2";
    }
    return "exp2";
}

std::optional<SuiteKind> parse_suite_kind(std::string_view text) {
    for (auto k : {SuiteKind::Exp1Randomized, SuiteKind::Exp2Randomized, SuiteKind::Exp2Periodic, SuiteKind::Exp2}) {
        if (suite_kind_name(k) == text) {
            return k;
        }
    }
    return std::nullopt;
}

Experiment suite_experiment(SuiteKind kind) {
    return kind == SuiteKind::Exp1Randomized ? Experiment::Exp1 : Experiment::Exp2;
}

std::vector<MirrorGenerator> suite_generators(SuiteKind kind) {
    switch (kind) {
        case SuiteKind::Exp1Randomized:
        case SuiteKind::Exp2Randomized:
            return {MirrorGenerator::Randomized};
        case SuiteKind::Exp2Periodic:
            return {MirrorGenerator::Periodic};
        case SuiteKind::Exp2:
            return {MirrorGenerator::Randomized, MirrorGenerator::Periodic};
    }
    return {};
}

SuiteConfig plan_suite(
    const ConnectivityGraph &device,
    TwoQubitKind two_qubit_kind,
    SuiteKind kind,
    uint64_t seed,
    size_t circuits_per_shape,
    const ErrorRateSet *rates) {
    SuiteConfig config;
    config.kind = kind;
    config.seed = seed;
    config.circuits_per_shape = circuits_per_shape;
    Experiment experiment = suite_experiment(kind);
    config.grid = choose_shapes(device.num_qubits(), experiment);
    for (size_t w : config.grid.widths) {
        if (experiment == Experiment::Exp1) {
            config.embeddings[w] = select_embeddings_exp1(device, w);
            continue;
        }
        if (rates) {
            double xi = w == 1 ? 0.0 : config.expected_density;
            config.embeddings[w] = {select_best_qubits_from_rates(device, two_qubit_kind, *rates, w, xi).qubits};
        } else {
            auto subsets = connected_subsets(device, w);
            if (subsets.empty()) {
                throw Error(ErrorCode::Embedding, "no connected qubit set of width " + std::to_string(w));
            }
            config.embeddings[w] = {subsets.front()};
        }
    }
    return config;
}

std::string suite_circuit_id(MirrorGenerator g, size_t w, size_t d, size_t embedding, size_t index) {
    return std::string(g == MirrorGenerator::Periodic ? "per" : g == MirrorGenerator::Randomized ? "rand" : "scc") +
           "-w" + std::to_string(w) + "-d" + std::to_string(d) + "-e" + std::to_string(embedding) + "-k" +
           std::to_string(index);
}

SuiteCircuit generate_suite_circuit(
    const SuiteConfig &config,
    const ConnectivityGraph &device,
    const GateSet &gate_set,
    MirrorGenerator generator,
    size_t width,
    size_t depth,
    size_t embedding,
    size_t index) {
    auto it = config.embeddings.find(width);
    if (it == config.embeddings.end() || embedding >= it->second.size()) {
        throw Error(ErrorCode::Embedding, "no qubit set " + std::to_string(embedding) + " for width " + std::to_string(width));
    }
    SuiteCircuit sc;
    sc.id = suite_circuit_id(generator, width, depth, embedding, index);
    sc.generator = generator;
    sc.width = width;
    sc.depth = depth;
    sc.embedding = embedding;
    sc.index = index;
    sc.qubits = it->second[embedding];
    ConnectivityGraph graph = device.induced(sc.qubits);
    Rng rng = Rng::substream(config.seed, {static_cast<uint64_t>(generator), width, depth, embedding, index});
    if (generator == MirrorGenerator::Periodic) {
        Germ germ = sample_germ(gate_set, graph, rng);
        sc.germ_depth = germ.germ_depth;
        sc.mirror = build_periodic_mirror_circuit(germ, depth, rng);
    } else {
        EdgeSampler sampler = suite_experiment(config.kind) == Experiment::Exp1
                                  ? EdgeSampler::chi1()
                                  : EdgeSampler::edge_grab(config.expected_density);
        sc.mirror = sample_randomized_mirror_circuit(depth, sampler, gate_set, graph, rng);
    }
    return sc;
}

namespace {

struct Task {
    MirrorGenerator generator;
    size_t width;
    size_t depth;
    size_t embedding;
    size_t index;
};

std::vector<Task> plan(const SuiteConfig &config, const ConnectivityGraph &device) {
    std::vector<Task> tasks;
    for (MirrorGenerator g : suite_generators(config.kind)) {
        for (auto [w, d] : config.grid.shapes()) {
            auto it = config.embeddings.find(w);
            if (it == config.embeddings.end()) {
                throw Error(ErrorCode::Embedding, "no qubit sets supplied for width " + std::to_string(w));
            }
            if (g == MirrorGenerator::Randomized && d % 4 != 0) {
                throw Error(ErrorCode::InvalidDepth, "depth " + std::to_string(d) + " is not a multiple of 4");
            }
            if (g == MirrorGenerator::Periodic && d % 2 != 0) {
                throw Error(ErrorCode::InvalidDepth, "depth " + std::to_string(d) + " is not even");
            }
            for (size_t e = 0; e < it->second.size(); e++) {
                for (size_t k = 0; k < config.circuits_per_shape; k++) {
                    tasks.push_back({g, w, d, e, k});
                }
            }
        }
    }
    // Edge-grab feasibility once per qubit set instead of once per layer.
    if (suite_experiment(config.kind) == Experiment::Exp2) {
        for (const auto &[w, sets] : config.embeddings) {
            for (const auto &s : sets) {
                check_edgegrab_feasible(device.induced(s), config.expected_density);
            }
        }
    }
    return tasks;
}

}  // namespace

std::vector<SuiteCircuit> generate_suite_serial(
    const SuiteConfig &config, const ConnectivityGraph &device, const GateSet &gate_set) {
    std::vector<SuiteCircuit> out;
    for (const Task &t : plan(config, device)) {
        out.push_back(generate_suite_circuit(config, device, gate_set, t.generator, t.width, t.depth, t.embedding, t.index));
    }
    return out;
}

std::vector<SuiteCircuit> generate_suite(
    const SuiteConfig &config, const ConnectivityGraph &device, const GateSet &gate_set) {
    std::vector<Task> tasks = plan(config, device);
    std::vector<SuiteCircuit> out(tasks.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(tasks.size()); i++) {
        try {
            const Task &t = tasks[i];
            out[i] = generate_suite_circuit(config, device, gate_set, t.generator, t.width, t.depth, t.embedding, t.index);
        } catch (...) {
#pragma omp critical
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return out;
}

}  // namespace mirrorbench

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

// Serial reference vs OpenMP kernels: Pauli-frame simulation, parametric
// bootstrap and suite generation.

#include <benchmark/benchmark.h>

#include "mirrorbench/analysis.hpp"
#include "mirrorbench/noise.hpp"
#include "mirrorbench/suite.hpp"

using namespace mirrorbench;

namespace {

struct SimFixture {
    ConnectivityGraph graph = ConnectivityGraph::ring(6);
    MirrorCircuit mirror;
    ErrorRateSet rates;

    SimFixture() {
        Rng rng = Rng::substream(7, {1});
        mirror = sample_randomized_mirror_circuit(
            64, EdgeSampler::edge_grab(0.125), GateSet::full(TwoQubitKind::CNOT), graph, rng);
        rates = ErrorRateSet::uniform(graph, TwoQubitKind::CNOT, 0.001, 0.01, 0.02);
    }
};

const SimFixture &sim_fixture() {
    static SimFixture f;
    return f;
}

template <bool Parallel>
void BM_SimulateLocalDep(benchmark::State &state) {
    const SimFixture &f = sim_fixture();
    SimulationOptions opt;
    opt.shots = static_cast<size_t>(state.range(0));
    opt.seed = 3;
    for (auto _ : state) {
        Counts c = Parallel ? simulate_local_dep(f.mirror.circuit, f.mirror.target, f.rates, opt)
                            : simulate_local_dep_serial(f.mirror.circuit, f.mirror.target, f.rates, opt);
        benchmark::DoNotOptimize(c);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateLocalDep<false>)->Arg(1 << 14)->Name("simulate/serial");
BENCHMARK(BM_SimulateLocalDep<true>)->Arg(1 << 14)->Name("simulate/openmp");

std::vector<PredictedCircuit> bootstrap_input() {
    std::vector<PredictedCircuit> preds;
    for (size_t w = 1; w <= 4; w++) {
        for (size_t d : exp2_depths()) {
            for (size_t k = 0; k < 40; k++) {
                preds.push_back({{w, d}, 0.3 + 0.6 / static_cast<double>(1 + k % 7)});
            }
        }
    }
    return preds;
}

template <bool Parallel>
void BM_Bootstrap(benchmark::State &state) {
    static const auto preds = bootstrap_input();
    size_t replicates = static_cast<size_t>(state.range(0));
    for (auto _ : state) {
        auto r = Parallel ? bootstrap_predicted_minimum(preds, 1024, replicates, 11)
                          : bootstrap_predicted_minimum_serial(preds, 1024, replicates, 11);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_Bootstrap<false>)->Arg(100)->Name("bootstrap/serial");
BENCHMARK(BM_Bootstrap<true>)->Arg(100)->Name("bootstrap/openmp");

template <bool Parallel>
void BM_GenerateSuite(benchmark::State &state) {
    ConnectivityGraph graph = ConnectivityGraph::ring(4);
    SuiteConfig config = plan_suite(graph, TwoQubitKind::CNOT, SuiteKind::Exp2, 5, 4);
    GateSet gates = GateSet::full(TwoQubitKind::CNOT);
    for (auto _ : state) {
        auto suite = Parallel ? generate_suite(config, graph, gates) : generate_suite_serial(config, graph, gates);
        benchmark::DoNotOptimize(suite);
    }
}
BENCHMARK(BM_GenerateSuite<false>)->Name("suite/serial");
BENCHMARK(BM_GenerateSuite<true>)->Name("suite/openmp");

}  // namespace

BENCHMARK_MAIN();

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

#include <gtest/gtest.h>

#include "mirrorbench/error.hpp"
#include "mirrorbench/rng.hpp"
#include "mirrorbench/sampling.hpp"

using namespace mirrorbench;

namespace {

ErrorCode code_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "no mirrorbench::Error thrown";
    return ErrorCode::Config;
}

Layer cnot_layer(size_t w, uint32_t c, uint32_t t) {
    Layer l = Layer::idle(w);
    l.place_two_qubit({TwoQubitKind::CNOT, c, t});
    return l;
}

}  // namespace

TEST(ConnectivityGraph, rejects_bad_edges) {
    EXPECT_EQ(code_of([] { ConnectivityGraph({"a", "b"}, {{0, 0}}); }), ErrorCode::Config);
    EXPECT_EQ(code_of([] { ConnectivityGraph({"a", "b"}, {{0, 2}}); }), ErrorCode::Config);
    EXPECT_EQ(code_of([] { ConnectivityGraph({"a", "a"}, {}); }), ErrorCode::Config);
}

TEST(ConnectivityGraph, orientation_rules) {
    ConnectivityGraph g({"a", "b", "c"}, {{0, 1}});
    EXPECT_TRUE(g.allows(TwoQubitKind::CNOT, 0, 1));
    EXPECT_FALSE(g.allows(TwoQubitKind::CNOT, 1, 0));
    EXPECT_TRUE(g.allows(TwoQubitKind::CZ, 1, 0));
    EXPECT_FALSE(g.allows(TwoQubitKind::CZ, 0, 2));
    EXPECT_EQ(g.orientations(TwoQubitKind::CNOT, 0, 1).size(), 1u);
    EXPECT_EQ(g.orientations(TwoQubitKind::CZ, 1, 0).size(), 1u);
    EXPECT_EQ(g.undirected_edges().size(), 1u);
    EXPECT_EQ(g.index_of("c"), 2u);
    EXPECT_FALSE(g.index_of("d"));
}

TEST(ConnectivityGraph, connectivity_and_induced) {
    auto path = ConnectivityGraph::path(4);
    EXPECT_TRUE(path.is_connected());
    EXPECT_TRUE(path.is_connected_subset({1, 2}));
    EXPECT_FALSE(path.is_connected_subset({0, 2}));
    auto sub = path.induced({2, 3});
    EXPECT_EQ(sub.num_qubits(), 2u);
    EXPECT_EQ(sub.qubits()[0], "2");
    EXPECT_TRUE(sub.adjacent(0, 1));
}

TEST(GateSet, requires_identity) {
    GateSet g;
    g.one_qubit_gates = {0, 1};
    EXPECT_THROW(g.validate(), Error);
    EXPECT_NO_THROW(GateSet::full(TwoQubitKind::CZ).validate());
    EXPECT_FALSE(GateSet::full(TwoQubitKind::CZ).is_restricted());
}

TEST(LayerInSet, idle_layer_always_allowed) {
    LayerSet set{GateSet::full(TwoQubitKind::CNOT), ConnectivityGraph::path(3)};
    EXPECT_TRUE(layer_in_set(Layer::idle(3), set));
    GateSet only_idle;
    only_idle.one_qubit_gates = {clifford1q::identity()};
    EXPECT_TRUE(layer_in_set(Layer::idle(3), {only_idle, ConnectivityGraph::path(3)}));
}

TEST(LayerInSet, non_adjacent_pair_rejected) {
    LayerSet set{GateSet::full(TwoQubitKind::CNOT), ConnectivityGraph::path(3)};
    EXPECT_FALSE(layer_in_set(cnot_layer(3, 0, 2), set));
    EXPECT_TRUE(layer_in_set(cnot_layer(3, 0, 1), set));
}

TEST(LayerInSet, directed_edge_orientation) {
    LayerSet set{GateSet::full(TwoQubitKind::CNOT), ConnectivityGraph({"0", "1"}, {{0, 1}})};
    EXPECT_TRUE(layer_in_set(cnot_layer(2, 0, 1), set));
    EXPECT_FALSE(layer_in_set(cnot_layer(2, 1, 0), set));
}

TEST(LayerInSet, gate_outside_subset_and_width_mismatch) {
    GateSet g;
    g.one_qubit_gates = {clifford1q::identity()};
    LayerSet set{g, ConnectivityGraph::path(2)};
    EXPECT_FALSE(layer_in_set(Layer::from_one_qubit({0, 2}), set));
    EXPECT_EQ(code_of([&] { layer_in_set(Layer::idle(3), set); }), ErrorCode::ContractViolation);
}

TEST(LayerInSet, inverse_layers_stay_in_set) {
    Rng rng(11);
    auto graph = ConnectivityGraph::ring(5);
    for (TwoQubitKind kind : {TwoQubitKind::CNOT, TwoQubitKind::CZ}) {
        LayerSet set{GateSet::full(kind), graph};
        for (int i = 0; i < 500; i++) {
            Layer l = sample_omega_layer(EdgeSampler::edge_grab(0.25), set.gate_set, graph, rng);
            ASSERT_TRUE(layer_in_set(l, set));
            ASSERT_TRUE(layer_in_set(l.inverse(), set));
            ASSERT_EQ(l.inverse().inverse(), l);
        }
    }
}

TEST(Layer, validate_catches_overlap) {
    Layer l = cnot_layer(3, 0, 1);
    EXPECT_THROW(l.place_two_qubit({TwoQubitKind::CNOT, 1, 2}), Error);
    Layer bad = Layer::idle(2);
    bad.one_qubit[0] = Layer::kInPair;
    EXPECT_THROW(bad.validate(), Error);
}

TEST(Density, examples) {
    Circuit none(CircuitKind::QIQO, {"a", "b"}, {Layer::idle(2), Layer::idle(2)});
    EXPECT_EQ(two_qubit_gate_density(none, 2), 0.0);

    Circuit one(CircuitKind::QIQO, {"a", "b"}, {cnot_layer(2, 0, 1), Layer::idle(2), Layer::idle(2), Layer::idle(2)});
    EXPECT_DOUBLE_EQ(two_qubit_gate_density(one, 4), 0.25);

    std::vector<Layer> layers(16, Layer::idle(8));
    for (uint32_t i = 0; i < 8; i++) {
        layers[2 * i].place_two_qubit({TwoQubitKind::CZ, i % 7, i % 7 + 1});
    }
    Circuit eight(CircuitKind::QIQO, std::vector<std::string>(8), layers);
    for (size_t q = 0; q < 8; q++) {
        eight.qubits[q] = std::to_string(q);
    }
    EXPECT_DOUBLE_EQ(two_qubit_gate_density(eight, 16), 0.125);
    EXPECT_EQ(code_of([&] { two_qubit_gate_density(none, 0); }), ErrorCode::UndefinedDensity);
}

TEST(Circuit, depth_bookkeeping) {
    Circuit c(CircuitKind::FICO, {"a"}, {Layer::idle(1), Layer::idle(1), Layer::idle(1)});
    EXPECT_EQ(c.depth(), 3u);
    EXPECT_EQ(c.full_depth(), 5u);
    c.kind = CircuitKind::QIQO;
    EXPECT_EQ(c.full_depth(), 3u);
    EXPECT_THROW(Circuit(CircuitKind::QIQO, {}, {}).validate(), Error);
}

TEST(CircuitText, empty_circuit_round_trips) {
    Circuit c(CircuitKind::QIQO, {"q0"}, {});
    EXPECT_EQ(parse_circuit(serialize_circuit(c)), c);
}

TEST(CircuitText, sampled_circuits_round_trip) {
    Rng rng(5);
    auto graph = ConnectivityGraph::ring(4);
    for (TwoQubitKind kind : {TwoQubitKind::CNOT, TwoQubitKind::CZ}) {
        for (int i = 0; i < 50; i++) {
            MirrorCircuit m = sample_randomized_mirror_circuit(16, EdgeSampler::edge_grab(0.25), GateSet::full(kind), graph, rng);
            std::string text = serialize_circuit(m.circuit);
            ASSERT_EQ(parse_circuit(text), m.circuit) << text;
        }
    }
}

TEST(CircuitText, format) {
    Layer l = cnot_layer(3, 1, 2);
    l.one_qubit[0] = static_cast<uint8_t>(*clifford1q::parse_name("H"));
    Circuit c(CircuitKind::FICO, {"Q0", "Q1", "Q2"}, {l, Layer::idle(3)});
    EXPECT_EQ(serialize_circuit(c), "circuit fico 3 Q0 Q1 Q2\nH:0 CNOT:1,2\n-\n");
}

TEST(CircuitText, parse_errors_carry_position) {
    try {
        parse_circuit("circuit qiqo 2 a b\nH:0 T:1\n");
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::Parse);
        EXPECT_NE(std::string(e.what()).find("line 2, column 5"), std::string::npos) << e.what();
    }
    EXPECT_EQ(code_of([] { parse_circuit("circuit qiqo 2 a b\nCNOT:0,0\n"); }), ErrorCode::Parse);
    EXPECT_EQ(code_of([] { parse_circuit("circuit xyz 1 a\n"); }), ErrorCode::Parse);
    EXPECT_EQ(code_of([] { parse_circuit("circuit qiqo 2 a\n"); }), ErrorCode::Parse);
    EXPECT_EQ(code_of([] { parse_circuit("circuit qiqo 1 a\nH:3\n"); }), ErrorCode::Parse);
    EXPECT_EQ(code_of([] { parse_circuit("circuit qiqo 2 a b\nH:0 X:0\n"); }), ErrorCode::Parse);
}

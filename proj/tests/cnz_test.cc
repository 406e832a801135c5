// Copyright 2026 The Hyperstate Authors
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

#include "hyperstate/cnz.h"

#include "gtest/gtest.h"
#include "hyperstate/errors.h"
#include "hyperstate/random.h"

using namespace hyperstate;

TEST(cnz, six_qubit_sequence) {
    LogicalCircuit c = build_cnz(1);
    EXPECT_EQ(c.num_qubits, 9u);
    EXPECT_EQ(c.ancillas, (std::vector<std::size_t>{6, 7, 8}));
    // Wrapper on each ancilla around the central CCZ on the ancillas.
    const std::vector<Gate> expected = {
        Gate::ccz(6, 0, 1), Gate::h(6), Gate::ccz(7, 2, 3), Gate::h(7), Gate::ccz(8, 4, 5), Gate::h(8),
        Gate::ccz(6, 7, 8),
        Gate::h(8), Gate::ccz(8, 4, 5), Gate::h(7), Gate::ccz(7, 2, 3), Gate::h(6), Gate::ccz(6, 0, 1),
    };
    EXPECT_EQ(c.gates, expected);
}

TEST(cnz, gate_counts) {
    for (std::size_t r = 1; r <= 5; ++r) {
        LogicalCircuit c = build_cnz(r);
        const std::size_t N = std::size_t{3} << r;
        EXPECT_EQ(c.count(GateKind::CCZ), 2 * N - 5) << r;
        EXPECT_EQ(c.count(GateKind::H), 2 * N - 6) << r;
        EXPECT_EQ(c.ancillas.size(), N - 3) << r;
        EXPECT_EQ(c.count(GateKind::H), 2 * c.ancillas.size());
        EXPECT_NO_THROW(c.validate());
    }
}

TEST(cnz, twelve_qubit_shape) {
    LogicalCircuit c = build_cnz(2);
    // Six fresh ancillas wrap the smaller construction.
    for (std::size_t j = 0; j < 6; ++j) {
        EXPECT_EQ(c.gates[2 * j], Gate::ccz(12 + j, 2 * j, 2 * j + 1));
        EXPECT_EQ(c.gates[2 * j + 1], Gate::h(12 + j));
    }
    EXPECT_EQ(c.gates.back(), Gate::ccz(12, 0, 1));
}

TEST(cnz, level_errors) {
    EXPECT_THROW(build_cnz(0), InvalidArgument);
    EXPECT_THROW(build_cnz(kMaxCircuitLevel + 1), InvalidArgument);
    EXPECT_THROW(resources(0), InvalidArgument);
    EXPECT_EQ(level_for(6), 1u);
    EXPECT_EQ(level_for(96), 5u);
    EXPECT_THROW(level_for(7), InvalidArgument);
    EXPECT_THROW(level_for(3), InvalidArgument);
    EXPECT_THROW(level_for(18), InvalidArgument);
}

TEST(cnz, hadamard_depth) {
    for (std::size_t r = 1; r <= 5; ++r) {
        EXPECT_EQ(hadamard_depth(build_cnz(r)), 2 * r);
    }
    for (std::size_t r = 1; r < 5; ++r) {
        EXPECT_EQ(hadamard_depth(build_cnz(r + 1)), hadamard_depth(build_cnz(r)) + 2);
    }
    LogicalCircuit no_h{3, {}, {Gate::ccz(0, 1, 2), Gate::cz(0, 1)}, {}};
    EXPECT_EQ(hadamard_depth(no_h), 0u);
}

TEST(cnz, layerize_packs_disjoint_gates) {
    LogicalCircuit layered = layerize(build_cnz(1));
    ASSERT_EQ(layered.layers.size(), 5u);
    EXPECT_EQ(layered.layers[0].size(), 3u);
    EXPECT_EQ(layered.layers[1], (std::vector<Gate>{Gate::h(6), Gate::h(7), Gate::h(8)}));
    EXPECT_EQ(layered.layers[2], (std::vector<Gate>{Gate::ccz(6, 7, 8)}));
    EXPECT_NO_THROW(layered.validate());
}

TEST(cnz, layered_and_nested_forms_agree) {
    for (std::size_t r : {1u, 2u}) {
        LogicalCircuit nested = build_cnz(r);
        CircuitCheck c = circuits_equivalent(nested, layerize(nested), r == 1 ? 10 : 2, 5);
        EXPECT_TRUE(c.holds) << r << " " << c.max_deviation;
    }
}

TEST(cnz, verify_six) {
    CircuitCheck c = verify_cnz(1, 10, 3);
    EXPECT_TRUE(c.holds);
    EXPECT_LT(c.max_deviation, 1e-10);
    EXPECT_EQ(c.trials, 10u);
    EXPECT_TRUE(verify_cnz_circuit(layerize(build_cnz(1)), 6, 10, 3).holds);
}

TEST(cnz, verify_twelve) {
    CircuitCheck c = verify_cnz(2, 2, 4);
    EXPECT_TRUE(c.holds) << c.max_deviation;
}

TEST(cnz, dropped_hadamard_is_caught) {
    LogicalCircuit c = build_cnz(1);
    c.gates.erase(c.gates.begin() + 1);
    EXPECT_FALSE(verify_cnz_circuit(c, 6, 10, 3).holds);
}

TEST(cnz, verify_cap) {
    EXPECT_THROW(verify_cnz(2, 1, 1, 20), CapExceeded);
}

TEST(cnz, routing) {
    LogicalCircuit adjacent{4, {}, {Gate::ccz(1, 2, 3)}, {}};
    RoutedCircuit a = route_nearest_neighbor(adjacent);
    EXPECT_EQ(a.swaps, 0u);
    EXPECT_EQ(a.circuit.gates, adjacent.gates);

    LogicalCircuit spread{4, {}, {Gate::ccz(0, 2, 3)}, {}};
    RoutedCircuit s = route_nearest_neighbor(spread);
    EXPECT_EQ(s.swaps, 2u);
    EXPECT_EQ(s.circuit.gates, (std::vector<Gate>{Gate::swap(0, 1), Gate::ccz(1, 2, 3), Gate::swap(0, 1)}));
    EXPECT_TRUE(circuits_equivalent(spread, s.circuit, 5, 1).holds);

    LogicalCircuit wide{7, {}, {Gate::ccz(6, 0, 3), Gate::cz(0, 5), Gate::h(2)}, {}};
    RoutedCircuit w = route_nearest_neighbor(wide);
    for (const Gate &g : w.circuit.gates) {
        if (g.kind == GateKind::CCZ || g.kind == GateKind::CZ || g.kind == GateKind::SWAP) {
            auto [lo, hi] = std::minmax_element(g.on.begin(), g.on.end());
            EXPECT_EQ(*hi - *lo, g.on.size() - 1) << g.str();
        }
    }
    EXPECT_TRUE(circuits_equivalent(wide, w.circuit, 5, 2).holds);
}

TEST(cnz, routed_cnz_still_correct) {
    RoutedCircuit routed = route_nearest_neighbor(build_cnz(1));
    EXPECT_GT(routed.swaps, 0u);
    EXPECT_TRUE(verify_cnz_circuit(routed.circuit, 6, 10, 8).holds);
    EXPECT_TRUE(circuits_equivalent(routed.circuit, build_cnz(1), 5, 9).holds);
}

TEST(cnz, resources_six) {
    ResourceReport r = resources(1);
    EXPECT_EQ(r.N, 6);
    EXPECT_EQ(r.k_ccz, 7);
    EXPECT_EQ(r.k_swap, 24);
    EXPECT_EQ(r.hadamard_count, 6);
    EXPECT_EQ(r.ancilla_count, 3);
    EXPECT_EQ(r.hadamard_depth, 2);
    EXPECT_EQ(r.cz_physical, 237);
    EXPECT_EQ(r.qubits_physical, 234);
    EXPECT_EQ(r.qubits_cluster_variant, 248);
    EXPECT_EQ(r.qubits_standard_cluster, 63);
}

TEST(cnz, resources_closed_forms) {
    EXPECT_EQ(k_swap_sum(2), 144);
    for (std::size_t r = 1; r <= 5; ++r) {
        ResourceReport rep = resources(r);
        const std::int64_t N = rep.N;
        EXPECT_EQ(rep.k_swap, k_swap_sum(r));
        EXPECT_EQ(rep.k_swap, 4 * N * (N / 3 - 1));
        EXPECT_EQ(rep.k_ccz, 2 * N - 5);
        EXPECT_EQ(rep.cz_physical, 12 * N * N - 30 * N - 15);
        EXPECT_EQ(3 * rep.qubits_physical, 32 * N * N - 60 * N - 90);
        EXPECT_EQ(3 * rep.qubits_cluster_variant, 32 * N * N - 48 * N - 120);
        boost::multiprecision::cpp_int two_n = boost::multiprecision::pow(boost::multiprecision::cpp_int(2), N);
        EXPECT_EQ(rep.qubits_standard_cluster, two_n - 1);
        LogicalCircuit c = build_cnz(r);
        EXPECT_EQ(rep.k_ccz, static_cast<std::int64_t>(c.count(GateKind::CCZ)));
        EXPECT_EQ(rep.hadamard_count, static_cast<std::int64_t>(c.count(GateKind::H)));
    }
}

TEST(cnz, resources_json) {
    nlohmann::json j = to_json(resources(1));
    EXPECT_EQ(j["standard_cluster"], 63);
    EXPECT_EQ(j["K_SWAP"], 24);
    nlohmann::json big = to_json(resources(5));
    EXPECT_TRUE(big["standard_cluster"].is_string());
    EXPECT_EQ(big["standard_cluster"].get<std::string>(), "79228162514264337593543950335");
}

TEST(cnz, identity_lemma_example) {
    // C_{0,3,4} H_0 C_{0,1,2} H_0 C_{0,3,4} on |+>_0 gives C_{1,2,3,4}.
    IdentityCheck c = verify_identity(Edge::of({0, 3, 4}), Edge::of({0, 1, 2}), 0, 9, 10, 1);
    EXPECT_TRUE(c.holds) << c.max_deviation;
    EXPECT_EQ(c.product, Edge::of({1, 2, 3, 4}));
}

TEST(cnz, identity_lemma_pair_gives_z) {
    IdentityCheck c = verify_identity(Edge::of({2, 4}), Edge::of({2, 4}), 2, 5, 10, 2);
    EXPECT_TRUE(c.holds);
    EXPECT_EQ(c.product, Edge::of({4}));
}

TEST(cnz, identity_lemma_random) {
    Rng rng(11);
    for (int k = 0; k < 200; ++k) {
        std::size_t n = 2 + rng.below(9);
        Vertex i = rng.below(n);
        Edge e1 = Edge::single(i);
        Edge e2 = Edge::single(i);
        for (Vertex v = 0; v < n; ++v) {
            if (rng.coin()) {
                e1 = e1.with(v);
            }
            if (rng.coin()) {
                e2 = e2.with(v);
            }
        }
        IdentityCheck c = verify_identity(e1, e2, i, n, 1, rng.next());
        ASSERT_TRUE(c.holds) << e1.str() << " " << e2.str() << " " << i << " dev " << c.max_deviation;
    }
}

TEST(cnz, identity_preconditions) {
    EXPECT_THROW(verify_identity(Edge::of({0, 1}), Edge::of({1, 2}), 0, 3, 1, 1), InvalidArgument);
    EXPECT_THROW(verify_identity(Edge::of({0, 5}), Edge::of({0, 1}), 0, 3, 1, 1), InvalidArgument);
    EXPECT_THROW(verify_identity(Edge::of({0, 1}), Edge::of({0, 1}), 0, 12, 1, 1, 10), CapExceeded);
}

TEST(cnz, circuit_validation) {
    LogicalCircuit bad{3, {}, {Gate::ccz(0, 1, 3)}, {}};
    EXPECT_THROW(bad.validate(), InvalidArgument);
    LogicalCircuit repeat{3, {}, {Gate::cz(1, 1)}, {}};
    EXPECT_THROW(repeat.validate(), InvalidArgument);
    LogicalCircuit overlap{3, {}, {Gate::h(0), Gate::cz(0, 1)}, {{Gate::h(0), Gate::cz(0, 1)}}};
    EXPECT_THROW(overlap.validate(), InvalidArgument);
    LogicalCircuit arity{3, {}, {Gate{GateKind::H, {0, 1}}}, {}};
    EXPECT_THROW(arity.validate(), InvalidArgument);
}

TEST(cnz, json_round_trip) {
    for (const LogicalCircuit &c : {build_cnz(1), layerize(build_cnz(2))}) {
        nlohmann::json j = to_json(c);
        LogicalCircuit back = circuit_from_json(j);
        EXPECT_EQ(back.gates, c.gates);
        EXPECT_EQ(to_json(back), j);
    }
    nlohmann::json j = to_json(build_cnz(1));
    j["layers"][0][0]["gate"] = "T";
    EXPECT_THROW(circuit_from_json(j), ParseError);
    nlohmann::json k = to_json(build_cnz(1));
    k["layers"][0][0]["on"] = {0, 1, 40};
    EXPECT_THROW(circuit_from_json(k), ParseError);
}

TEST(cnz, dot) {
    std::string dot = to_dot(build_cnz(1));
    EXPECT_EQ(dot.rfind("digraph circuit {", 0), 0u);
    EXPECT_NE(dot.find("L3 -> L4"), std::string::npos);
    EXPECT_NE(dot.find("|CCZ(6,7,8)"), std::string::npos);
}

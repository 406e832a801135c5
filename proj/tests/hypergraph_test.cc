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

#include "hyperstate/hypergraph.h"

#include <cmath>

#include "gtest/gtest.h"
#include "hyperstate/dense_state.h"
#include "hyperstate/errors.h"
#include "hyperstate/random.h"

using namespace hyperstate;

namespace {

Hypergraph five_qubit_state() {
    return Hypergraph(5, {{0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 4}, {1, 2, 3}, {1, 2, 4}});
}

/// Dense state assembled from an expansion: amplitude of |x> is the branch
/// amplitude of x with bit a deleted, times the branch sign, over sqrt(2).
DenseState reassemble(const Expansion &e, Vertex a, std::size_t n) {
    DenseState b0 = build(e.zero.graph);
    DenseState b1 = build(e.one.graph);
    std::vector<DenseState::Amplitude> amps(std::size_t{1} << n);
    for (std::size_t k = 0; k < amps.size(); ++k) {
        std::size_t rest = compress_out(Edge(k), a).bits;
        bool bit = (k >> a) & 1;
        amps[k] = (bit ? double(e.one.sign) * b1[rest] : double(e.zero.sign) * b0[rest]) / std::sqrt(2.0);
    }
    return DenseState::from_amplitudes(std::move(amps));
}

}  // namespace

TEST(edge, canonical_order) {
    EXPECT_LT(Edge::of({5}), Edge::of({0, 1}));
    EXPECT_LT(Edge::of({0, 1}), Edge::of({0, 2}));
    EXPECT_LT(Edge::of({1, 2}), Edge::of({0, 1, 2}));
    EXPECT_EQ(Edge::of({4, 0, 3}).str(), "{0,3,4}");
    EXPECT_EQ(Edge::of({2, 7}).span_end(), 8u);
    EXPECT_EQ(Edge().span_end(), 0u);
}

TEST(edge, compress_out) {
    EXPECT_EQ(compress_out(Edge::of({0, 2, 5}), 2), Edge::of({0, 4}));
    EXPECT_EQ(compress_out(Edge::of({0, 1}), 3), Edge::of({0, 1}));
    EXPECT_EQ(compress_out(Edge::of({63}), 0), Edge::of({62}));
}

TEST(hypergraph, construction) {
    Hypergraph h = five_qubit_state();
    EXPECT_EQ(h.num_vertices(), 5u);
    EXPECT_EQ(h.edges().size(), 6u);
    EXPECT_EQ(h.max_cardinality(), 3u);
    EXPECT_TRUE(std::is_sorted(h.edges().begin(), h.edges().end()));

    EXPECT_TRUE(Hypergraph(3, {{0, 1}, {0, 1}}).edges().empty());
    EXPECT_TRUE(Hypergraph(4).edges().empty());
    EXPECT_EQ(Hypergraph(3, {{2, 1}, {0}}), Hypergraph(3, {{0}, {1, 2}}));
}

TEST(hypergraph, construction_errors) {
    EXPECT_THROW(Hypergraph(3, {{0, 3}}), InvalidArgument);
    EXPECT_THROW(Hypergraph::from_lists(3, {{}}), InvalidArgument);
    EXPECT_THROW(Hypergraph(65), InvalidArgument);
}

TEST(hypergraph, toggle_edges) {
    Hypergraph h(3, {{0, 1}});
    const Edge a[] = {Edge::of({0, 1})};
    EXPECT_TRUE(toggle_edges(h, a).edges().empty());
    const Edge b[] = {Edge::of({0}), Edge::of({1, 2})};
    EXPECT_EQ(toggle_edges(Hypergraph(3), b), Hypergraph(3, {{0}, {1, 2}}));
}

TEST(hypergraph, toggle_involution) {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        Hypergraph h = random_hypergraph(7, 4, rng.below(12), rng.next());
        Hypergraph d = random_hypergraph(7, 4, rng.below(12), rng.next());
        EXPECT_EQ(toggle_edges(toggle_edges(h, d.edges()), d.edges()), h);
    }
}

TEST(hypergraph, adjacency) {
    EdgeSet expected = {Edge::of({0, 1}), Edge::of({0, 2}), Edge::of({1, 2})};
    EXPECT_EQ(adjacency(five_qubit_state(), 3), expected);

    Hypergraph path(3, {{0, 1}, {1, 2}});
    EXPECT_EQ(adjacency(path, 1), (EdgeSet{Edge::of({0}), Edge::of({2})}));
    EXPECT_TRUE(adjacency(Hypergraph(3, {{0, 1}}), 2).empty());

    // {a} in E shows up as the empty member.
    EdgeSet with_empty = adjacency(Hypergraph(2, {{0}, {0, 1}}), 0);
    ASSERT_EQ(with_empty.size(), 2u);
    EXPECT_TRUE(with_empty[0].empty());
}

TEST(hypergraph, adjacency_empty_iff_isolated) {
    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        Hypergraph h = random_hypergraph(6, 3, rng.below(6), rng.next());
        for (Vertex v = 0; v < 6; ++v) {
            EXPECT_EQ(adjacency(h, v).empty(), h.is_isolated(v));
        }
    }
}

TEST(hypergraph, expand) {
    Expansion e = expand(Hypergraph(3, {{0, 1, 2}}), 2);
    EXPECT_TRUE(e.zero.graph.edges().empty());
    EXPECT_EQ(e.one.graph, Hypergraph(2, {{0, 1}}));
    EXPECT_EQ(e.zero.sign, 1);
    EXPECT_EQ(e.one.sign, 1);
    EXPECT_EQ(e.vertex_map, (VertexMap{0, 1}));

    Expansion z = expand(Hypergraph(1, {{0}}), 0);
    EXPECT_EQ(z.zero.sign, 1);
    EXPECT_EQ(z.one.sign, -1);
    EXPECT_TRUE(z.zero.graph.edges().empty());
    EXPECT_TRUE(z.one.graph.edges().empty());
}

TEST(hypergraph, expansion_soundness) {
    Rng rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 2 + rng.below(8);
        Hypergraph h = random_hypergraph(n, 4, rng.below(2 * n), rng.next());
        Vertex a = rng.below(n);
        DenseState expected = build(h);
        DenseState got = reassemble(expand(h, a), a, n);
        EXPECT_TRUE(equal_up_to_phase(expected, got)) << product_notation(h.edges()) << " at " << a;
        // The branch signs are exact, not just up to phase.
        EXPECT_LT(max_abs_difference(expected, got), 1e-12);
    }
}

TEST(hypergraph, expand_multi_five_qubit_state) {
    const Vertex box[] = {0, 1, 2};
    MultiExpansion m = expand_multi(five_qubit_state(), box);
    ASSERT_EQ(m.branches.size(), 8u);
    EXPECT_EQ(m.vertex_map, (VertexMap{3, 4}));
    for (std::size_t k : {0, 1, 2, 4}) {
        EXPECT_EQ(m.branches[k].sign, 1);
        EXPECT_TRUE(m.branches[k].graph.edges().empty()) << k;
    }
    for (std::size_t k : {3, 5, 6, 7}) {
        EXPECT_EQ(m.branches[k].sign, 1);
        EXPECT_EQ(m.branches[k].graph, Hypergraph(2, {{0}, {1}})) << k;
    }
}

TEST(hypergraph, expand_multi_internal_edge_sign) {
    // A hyperedge among the expanded vertices themselves only contributes a
    // sign to the all-ones branch.
    const Vertex targets[] = {3, 4, 5};
    const Edge internal[] = {Edge::of({0, 1, 2})};
    Hypergraph h = toggle_edges(attach_box(Hypergraph(6), {0, 1, 2}, targets), internal);
    const Vertex box[] = {0, 1, 2};
    MultiExpansion m = expand_multi(h, box);
    for (std::size_t k = 0; k < 7; ++k) {
        EXPECT_EQ(m.branches[k].sign, 1);
    }
    EXPECT_EQ(m.branches[7].sign, -1);
    EXPECT_EQ(m.branches[7].graph, m.branches[3].graph);
}

TEST(hypergraph, expand_multi_empty_order) {
    Hypergraph h = five_qubit_state();
    MultiExpansion m = expand_multi(h, std::span<const Vertex>{});
    ASSERT_EQ(m.branches.size(), 1u);
    EXPECT_EQ(m.branches[0].sign, 1);
    EXPECT_EQ(m.branches[0].graph, h);
}

TEST(hypergraph, expand_multi_rejects_repeats) {
    const Vertex order[] = {1, 1};
    EXPECT_THROW(expand_multi(five_qubit_state(), order), InvalidArgument);
}

TEST(hypergraph, attach_box) {
    const Vertex one[] = {3};
    EXPECT_EQ(attach_box(Hypergraph(4), {0, 1, 2}, one), Hypergraph(4, {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));

    const Vertex three[] = {3, 4, 5};
    Hypergraph h = attach_box(Hypergraph(6), {0, 1, 2}, three);
    EXPECT_EQ(h.edges().size(), 9u);
    const Vertex box[] = {0, 1, 2};
    MultiExpansion m = expand_multi(h, box);
    EXPECT_TRUE(m.branches[0].graph.edges().empty());
    EXPECT_EQ(m.branches[7].graph, Hypergraph(3, {{0}, {1}, {2}}));

    Hypergraph base(4, {{2, 3}});
    EXPECT_EQ(attach_box(Hypergraph(6, {{4, 5}}), {0, 1, 2}, std::span<const Vertex>{}), Hypergraph(6, {{4, 5}}));
    EXPECT_THROW(attach_box(base, {0, 1, 2}, one), InvalidArgument);
    const Vertex overlap[] = {1};
    EXPECT_THROW(attach_box(Hypergraph(4), {0, 1, 2}, overlap), InvalidArgument);
}

TEST(hypergraph, remove_and_delete_vertex) {
    auto [smaller, map] = remove_vertex(Hypergraph(4, {{0, 3}}), 1);
    EXPECT_EQ(smaller, Hypergraph(3, {{0, 2}}));
    EXPECT_EQ(map, (VertexMap{0, 2, 3}));
    EXPECT_THROW(remove_vertex(Hypergraph(4, {{0, 1}}), 1), InvalidArgument);

    auto [deleted, dmap] = delete_vertex(Hypergraph(4, {{0, 1}, {2, 3}, {0, 1, 2}}), 2);
    EXPECT_EQ(deleted, Hypergraph(3, {{0, 1}}));
    EXPECT_EQ(dmap, (VertexMap{0, 1, 3}));

    EXPECT_EQ(add_vertices(Hypergraph(2, {{0, 1}}), 2), Hypergraph(4, {{0, 1}}));
}

TEST(hypergraph, json_round_trip) {
    Rng rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        Hypergraph h = random_hypergraph(9, 4, rng.below(15), rng.next());
        EXPECT_EQ(hypergraph_from_json(to_json(h)), h);
        EXPECT_EQ(hypergraph_from_json(nlohmann::json::parse(to_json(h).dump())), h);
    }
    nlohmann::json j = to_json(Hypergraph(3, {{0, 2}}));
    EXPECT_EQ(j["n"], 3);
    EXPECT_EQ(j["edges"], nlohmann::json::parse("[[0,2]]"));
}

TEST(hypergraph, json_errors) {
    EXPECT_THROW(hypergraph_from_json(nlohmann::json::parse(R"({"edges": []})")), ParseError);
    EXPECT_THROW(hypergraph_from_json(nlohmann::json::parse(R"({"n": 2, "edges": [[0, 5]]})")), Error);
    EXPECT_THROW(hypergraph_from_json(nlohmann::json::parse(R"({"n": 2, "edges": [["a"]]})")), ParseError);
}

TEST(hypergraph, dot) {
    std::string dot = to_dot(Hypergraph(4, {{0}, {0, 1}, {1, 2, 3}}));
    EXPECT_NE(dot.find("graph"), std::string::npos);
    EXPECT_NE(dot.find("peripheries=2"), std::string::npos);
    EXPECT_NE(dot.find("shape=square"), std::string::npos);
}

TEST(hypergraph, random_is_deterministic) {
    Hypergraph a = random_hypergraph(8, 3, 12, 1);
    EXPECT_EQ(a, random_hypergraph(8, 3, 12, 1));
    EXPECT_EQ(a.edges().size(), 12u);
    EXPECT_LE(a.max_cardinality(), 3u);
    EXPECT_NE(a, random_hypergraph(8, 3, 12, 2));
}

TEST(hypergraph, product_notation) {
    const Edge edges[] = {Edge::of({3}), Edge::of({3, 4})};
    EXPECT_EQ(product_notation(edges), "Z_{3} C_{3,4}");
    const Vertex labels[] = {0, 0, 0, 4, 5};
    EXPECT_EQ(product_notation(edges, labels), "Z_{4} C_{4,5}");
}

TEST(hypergraph, equal_structures_give_equal_states) {
    Rng rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        Hypergraph h = random_hypergraph(6, 3, rng.below(8), rng.next());
        Hypergraph copy = Hypergraph::from_lists(6, [&] {
            std::vector<std::vector<Vertex>> lists;
            for (Edge e : h.edges()) {
                lists.push_back(e.vertices());
            }
            std::reverse(lists.begin(), lists.end());
            return lists;
        }());
        ASSERT_EQ(copy, h);
        EXPECT_TRUE(equal_up_to_phase(build(copy), build(h)));
    }
}

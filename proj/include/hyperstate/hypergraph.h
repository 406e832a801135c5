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

#ifndef HYPERSTATE_HYPERGRAPH_H
#define HYPERSTATE_HYPERGRAPH_H

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace hyperstate {

/// Upper bound on the number of vertices of any hypergraph. Edges are stored
/// as one 64-bit mask each.
inline constexpr std::size_t kMaxVertices = 64;

using Vertex = std::size_t;

/// A subset of vertices, bit v set iff vertex v is a member.
///
/// Edges order canonically by cardinality first and numeric mask second, so
/// sorted edge lists are a unique normal form for a hypergraph.
struct Edge {
    std::uint64_t bits = 0;

    constexpr Edge() = default;
    constexpr explicit Edge(std::uint64_t b) : bits(b) {
    }
    static Edge of(std::initializer_list<Vertex> vertices);
    static Edge of(std::span<const Vertex> vertices);
    static Edge single(Vertex v);

    constexpr bool empty() const {
        return bits == 0;
    }
    constexpr std::size_t size() const {
        return static_cast<std::size_t>(std::popcount(bits));
    }
    constexpr bool contains(Vertex v) const {
        return v < kMaxVertices && ((bits >> v) & 1) != 0;
    }
    constexpr Edge without(Vertex v) const {
        return Edge(bits & ~(std::uint64_t{1} << v));
    }
    constexpr Edge with(Vertex v) const {
        return Edge(bits | (std::uint64_t{1} << v));
    }
    constexpr bool is_subset_of(Edge other) const {
        return (bits & ~other.bits) == 0;
    }
    constexpr bool intersects(Edge other) const {
        return (bits & other.bits) != 0;
    }
    /// Highest member index plus one; zero for the empty edge.
    constexpr std::size_t span_end() const {
        return bits == 0 ? 0 : 64 - static_cast<std::size_t>(std::countl_zero(bits));
    }
    std::vector<Vertex> vertices() const;
    /// Brace list, e.g. "{0,3,4}".
    std::string str() const;

    friend constexpr Edge operator|(Edge a, Edge b) {
        return Edge(a.bits | b.bits);
    }
    friend constexpr Edge operator&(Edge a, Edge b) {
        return Edge(a.bits & b.bits);
    }
    friend constexpr bool operator==(Edge a, Edge b) = default;
    friend constexpr std::strong_ordering operator<=>(Edge a, Edge b) {
        if (auto c = a.size() <=> b.size(); c != 0) {
            return c;
        }
        return a.bits <=> b.bits;
    }
};

/// Canonical edge list: sorted by Edge ordering, no duplicates.
using EdgeSet = std::vector<Edge>;

/// Builds a canonical set from a list where repeated entries cancel in pairs.
EdgeSet edge_set_by_parity(std::span<const Edge> edges);
/// Toggles `e` in a canonical set (insert if absent, erase if present).
void toggle(EdgeSet &set, Edge e);
EdgeSet symmetric_difference(const EdgeSet &a, const EdgeSet &b);
bool contains(const EdgeSet &set, Edge e);

/// Deletes bit `v` from the mask and shifts higher bits down by one; the
/// index remapping used whenever a vertex is removed.
constexpr Edge compress_out(Edge e, Vertex v) {
    std::uint64_t low = e.bits & ((std::uint64_t{1} << v) - 1);
    std::uint64_t high = v + 1 >= 64 ? 0 : (e.bits >> (v + 1)) << v;
    return Edge(low | high);
}

/// new index -> old index, produced whenever vertices are removed.
using VertexMap = std::vector<Vertex>;

/// A hypergraph on vertices 0..n-1 with a canonical edge set. Stands for the
/// state prod_e C_e |+>^n; a singleton edge is a Z, a pair a CZ.
class Hypergraph {
   public:
    Hypergraph() = default;
    explicit Hypergraph(std::size_t num_vertices);
    /// Repeated edges cancel by parity. Throws InvalidArgument on empty or
    /// out-of-range edges.
    Hypergraph(std::size_t num_vertices, std::span<const Edge> edges);
    Hypergraph(std::size_t num_vertices, std::initializer_list<std::initializer_list<Vertex>> edges);
    static Hypergraph from_lists(std::size_t num_vertices, const std::vector<std::vector<Vertex>> &edges);

    std::size_t num_vertices() const {
        return n_;
    }
    const EdgeSet &edges() const {
        return edges_;
    }
    bool has_edge(Edge e) const {
        return contains(edges_, e);
    }
    bool is_isolated(Vertex v) const;
    /// Largest edge cardinality; 0 when edgeless.
    std::size_t max_cardinality() const;

    /// Adopts an edge set that is already canonical and in range.
    static Hypergraph from_canonical(std::size_t num_vertices, EdgeSet edges);

    friend bool operator==(const Hypergraph &, const Hypergraph &) = default;

   private:
    std::size_t n_ = 0;
    EdgeSet edges_;
};

/// One branch of an expansion: a hypergraph state on the unmeasured vertices
/// together with a +-1 phase from edges fully inside the expanded set.
struct SignedBranch {
    int sign = 1;
    Hypergraph graph;

    friend bool operator==(const SignedBranch &, const SignedBranch &) = default;
};

/// |H> = (|0>_a |branch0> + sign |1>_a |branch1>) / sqrt(2).
struct Expansion {
    SignedBranch zero;
    SignedBranch one;
    VertexMap vertex_map;
};

/// Iterated expansion over an ordered vertex list. Branch index bit i is the
/// computational value of `order[i]`.
struct MultiExpansion {
    std::vector<Vertex> order;
    std::vector<SignedBranch> branches;
    VertexMap vertex_map;
};

Hypergraph toggle_edges(const Hypergraph &h, std::span<const Edge> delta);

/// {e \ {a} : a in e}. Contains the empty edge iff {a} is an edge.
EdgeSet adjacency(const Hypergraph &h, Vertex a);

Expansion expand(const Hypergraph &h, Vertex a);
MultiExpansion expand_multi(const Hypergraph &h, std::span<const Vertex> order);

/// Adds {b_i, b_j, t} for every pair of box vertices and every target. The
/// box vertices must be isolated and disjoint from the targets.
Hypergraph attach_box(const Hypergraph &h, const std::array<Vertex, 3> &box, std::span<const Vertex> targets);

/// Removes an isolated vertex; higher indices shift down by one.
std::pair<Hypergraph, VertexMap> remove_vertex(const Hypergraph &h, Vertex v);
/// Removes a vertex together with every edge containing it.
std::pair<Hypergraph, VertexMap> delete_vertex(const Hypergraph &h, Vertex v);

/// Appends `count` isolated vertices.
Hypergraph add_vertices(const Hypergraph &h, std::size_t count);

nlohmann::json to_json(const Hypergraph &h);
Hypergraph hypergraph_from_json(const nlohmann::json &j);
nlohmann::json edges_to_json(std::span<const Edge> edges);
EdgeSet edges_from_json(const nlohmann::json &j, std::size_t num_vertices);

/// Graphviz rendering: pair edges as lines, singleton edges as double-ringed
/// vertices, cardinality >= 3 edges as square hub nodes wired to members.
/// `labels` (optional) renames vertices in the output.
std::string to_dot(const Hypergraph &h, std::span<const std::string> labels = {});

/// Deterministic per seed: `edge_count` distinct edges with cardinality
/// uniform in 1..max_cardinality.
Hypergraph random_hypergraph(std::size_t num_vertices, std::size_t max_cardinality, std::size_t edge_count,
                             std::uint64_t seed);

/// Renders an edge set in product notation, e.g. "C_{0,3} C_{3,4} Z_{3}".
std::string product_notation(std::span<const Edge> edges, std::span<const Vertex> labels = {});

/// "n=<count> <product notation>", for logs and test diagnostics.
std::ostream &operator<<(std::ostream &out, const Hypergraph &h);

}  // namespace hyperstate

#endif

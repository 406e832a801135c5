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

#include <algorithm>
#include <cassert>
#include <sstream>

#include "hyperstate/errors.h"
#include "hyperstate/random.h"

namespace hyperstate {

namespace {

void check_edge(Edge e, std::size_t n) {
    if (e.empty()) {
        throw InvalidArgument("empty edge");
    }
    if (e.span_end() > n) {
        throw InvalidArgument("edge " + e.str() + " out of range for " + std::to_string(n) + " vertices");
    }
}

void check_vertex(Vertex v, std::size_t n) {
    if (v >= n) {
        throw InvalidArgument("vertex " + std::to_string(v) + " out of range for " + std::to_string(n) +
                              " vertices");
    }
}

void check_count(std::size_t n) {
    if (n > kMaxVertices) {
        throw InvalidArgument("at most " + std::to_string(kMaxVertices) + " vertices are supported");
    }
}

}  // namespace

Edge Edge::of(std::initializer_list<Vertex> vertices) {
    return of(std::span<const Vertex>(vertices.begin(), vertices.size()));
}

Edge Edge::of(std::span<const Vertex> vertices) {
    Edge e;
    for (Vertex v : vertices) {
        e = e | single(v);
    }
    return e;
}

Edge Edge::single(Vertex v) {
    if (v >= kMaxVertices) {
        throw InvalidArgument("vertex " + std::to_string(v) + " exceeds the 64-vertex limit");
    }
    return Edge(std::uint64_t{1} << v);
}

std::vector<Vertex> Edge::vertices() const {
    std::vector<Vertex> out;
    std::uint64_t b = bits;
    while (b != 0) {
        out.push_back(static_cast<Vertex>(std::countr_zero(b)));
        b &= b - 1;
    }
    return out;
}

std::string Edge::str() const {
    std::string out = "{";
    bool first = true;
    for (Vertex v : vertices()) {
        if (!first) {
            out += ',';
        }
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

EdgeSet edge_set_by_parity(std::span<const Edge> edges) {
    EdgeSet sorted(edges.begin(), edges.end());
    std::sort(sorted.begin(), sorted.end());
    EdgeSet out;
    out.reserve(sorted.size());
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) {
            ++j;
        }
        if ((j - i) % 2 == 1) {
            out.push_back(sorted[i]);
        }
        i = j;
    }
    return out;
}

void toggle(EdgeSet &set, Edge e) {
    auto it = std::lower_bound(set.begin(), set.end(), e);
    if (it != set.end() && *it == e) {
        set.erase(it);
    } else {
        set.insert(it, e);
    }
}

EdgeSet symmetric_difference(const EdgeSet &a, const EdgeSet &b) {
    EdgeSet out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool contains(const EdgeSet &set, Edge e) {
    return std::binary_search(set.begin(), set.end(), e);
}

Hypergraph::Hypergraph(std::size_t num_vertices) : n_(num_vertices) {
    check_count(num_vertices);
}

Hypergraph::Hypergraph(std::size_t num_vertices, std::span<const Edge> edges) : n_(num_vertices) {
    check_count(num_vertices);
    for (Edge e : edges) {
        check_edge(e, n_);
    }
    edges_ = edge_set_by_parity(edges);
}

Hypergraph::Hypergraph(std::size_t num_vertices, std::initializer_list<std::initializer_list<Vertex>> edges)
    : n_(num_vertices) {
    check_count(num_vertices);
    EdgeSet raw;
    for (const auto &list : edges) {
        Edge e = Edge::of(list);
        check_edge(e, n_);
        raw.push_back(e);
    }
    edges_ = edge_set_by_parity(raw);
}

Hypergraph Hypergraph::from_lists(std::size_t num_vertices, const std::vector<std::vector<Vertex>> &edges) {
    check_count(num_vertices);
    EdgeSet raw;
    for (const auto &list : edges) {
        for (Vertex v : list) {
            check_vertex(v, num_vertices);
        }
        raw.push_back(Edge::of(std::span<const Vertex>(list)));
    }
    return Hypergraph(num_vertices, raw);
}

Hypergraph Hypergraph::from_canonical(std::size_t num_vertices, EdgeSet edges) {
    assert(std::is_sorted(edges.begin(), edges.end()));
    Hypergraph h(num_vertices);
    for (Edge e : edges) {
        check_edge(e, num_vertices);
    }
    h.edges_ = std::move(edges);
    return h;
}

bool Hypergraph::is_isolated(Vertex v) const {
    return std::none_of(edges_.begin(), edges_.end(), [v](Edge e) { return e.contains(v); });
}

std::size_t Hypergraph::max_cardinality() const {
    return edges_.empty() ? 0 : edges_.back().size();
}

Hypergraph toggle_edges(const Hypergraph &h, std::span<const Edge> delta) {
    EdgeSet edges = h.edges();
    for (Edge e : delta) {
        check_edge(e, h.num_vertices());
        toggle(edges, e);
    }
    return Hypergraph::from_canonical(h.num_vertices(), std::move(edges));
}

EdgeSet adjacency(const Hypergraph &h, Vertex a) {
    check_vertex(a, h.num_vertices());
    EdgeSet out;
    for (Edge e : h.edges()) {
        if (e.contains(a)) {
            out.push_back(e.without(a));
        }
    }
    // Removing a common member keeps distinct edges distinct, but not the order.
    std::sort(out.begin(), out.end());
    return out;
}

Expansion expand(const Hypergraph &h, Vertex a) {
    check_vertex(a, h.num_vertices());
    EdgeSet zero;
    EdgeSet toggles;
    for (Edge e : h.edges()) {
        if (e.contains(a)) {
            toggles.push_back(compress_out(e.without(a), a));
        } else {
            zero.push_back(compress_out(e, a));
        }
    }
    std::sort(zero.begin(), zero.end());
    EdgeSet one = zero;
    int sign = 1;
    for (Edge t : toggles) {
        if (t.empty()) {
            sign = -sign;
        } else {
            toggle(one, t);
        }
    }
    std::size_t m = h.num_vertices() - 1;
    Expansion out;
    out.zero = SignedBranch{1, Hypergraph::from_canonical(m, std::move(zero))};
    out.one = SignedBranch{sign, Hypergraph::from_canonical(m, std::move(one))};
    out.vertex_map.reserve(m);
    for (Vertex v = 0; v < h.num_vertices(); ++v) {
        if (v != a) {
            out.vertex_map.push_back(v);
        }
    }
    return out;
}

MultiExpansion expand_multi(const Hypergraph &h, std::span<const Vertex> order) {
    if (order.size() > h.num_vertices()) {
        throw InvalidArgument("cannot expand over more vertices than the hypergraph has");
    }
    Edge seen;
    for (Vertex v : order) {
        check_vertex(v, h.num_vertices());
        if (seen.contains(v)) {
            throw InvalidArgument("repeated vertex " + std::to_string(v) + " in expansion order");
        }
        seen = seen | Edge::single(v);
    }

    MultiExpansion out;
    out.order.assign(order.begin(), order.end());
    out.branches.push_back(SignedBranch{1, h});
    VertexMap map(h.num_vertices());
    for (Vertex v = 0; v < map.size(); ++v) {
        map[v] = v;
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
        // Current index of order[i] after the earlier removals.
        auto pos = std::find(map.begin(), map.end(), order[i]);
        Vertex current = static_cast<Vertex>(pos - map.begin());
        std::vector<SignedBranch> next(out.branches.size() * 2);
        for (std::size_t k = 0; k < out.branches.size(); ++k) {
            Expansion e = expand(out.branches[k].graph, current);
            int s = out.branches[k].sign;
            next[k] = SignedBranch{s * e.zero.sign, std::move(e.zero.graph)};
            next[k | (std::size_t{1} << i)] = SignedBranch{s * e.one.sign, std::move(e.one.graph)};
        }
        out.branches = std::move(next);
        map.erase(pos);
    }
    out.vertex_map = std::move(map);
    return out;
}

Hypergraph attach_box(const Hypergraph &h, const std::array<Vertex, 3> &box, std::span<const Vertex> targets) {
    for (Vertex b : box) {
        check_vertex(b, h.num_vertices());
        if (!h.is_isolated(b)) {
            throw InvalidArgument("box vertex " + std::to_string(b) + " is not fresh");
        }
    }
    if (box[0] == box[1] || box[0] == box[2] || box[1] == box[2]) {
        throw InvalidArgument("box vertices must be distinct");
    }
    Edge box_edge = Edge::of({box[0], box[1], box[2]});
    EdgeSet edges = h.edges();
    for (Vertex t : targets) {
        check_vertex(t, h.num_vertices());
        if (box_edge.contains(t)) {
            throw InvalidArgument("box collides with target " + std::to_string(t));
        }
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = i + 1; j < 3; ++j) {
                toggle(edges, Edge::of({box[i], box[j], t}));
            }
        }
    }
    return Hypergraph::from_canonical(h.num_vertices(), std::move(edges));
}

std::pair<Hypergraph, VertexMap> delete_vertex(const Hypergraph &h, Vertex v) {
    check_vertex(v, h.num_vertices());
    EdgeSet edges;
    for (Edge e : h.edges()) {
        if (!e.contains(v)) {
            edges.push_back(compress_out(e, v));
        }
    }
    std::sort(edges.begin(), edges.end());
    VertexMap map;
    for (Vertex u = 0; u < h.num_vertices(); ++u) {
        if (u != v) {
            map.push_back(u);
        }
    }
    return {Hypergraph::from_canonical(h.num_vertices() - 1, std::move(edges)), std::move(map)};
}

std::pair<Hypergraph, VertexMap> remove_vertex(const Hypergraph &h, Vertex v) {
    check_vertex(v, h.num_vertices());
    if (!h.is_isolated(v)) {
        throw InvalidArgument("vertex " + std::to_string(v) + " still has incident edges");
    }
    return delete_vertex(h, v);
}

Hypergraph add_vertices(const Hypergraph &h, std::size_t count) {
    check_count(h.num_vertices() + count);
    return Hypergraph::from_canonical(h.num_vertices() + count, h.edges());
}

nlohmann::json edges_to_json(std::span<const Edge> edges) {
    nlohmann::json out = nlohmann::json::array();
    for (Edge e : edges) {
        out.push_back(e.vertices());
    }
    return out;
}

nlohmann::json to_json(const Hypergraph &h) {
    return nlohmann::json{{"n", h.num_vertices()}, {"edges", edges_to_json(h.edges())}};
}

EdgeSet edges_from_json(const nlohmann::json &j, std::size_t num_vertices) {
    if (!j.is_array()) {
        throw ParseError("edge list must be an array");
    }
    EdgeSet out;
    for (const auto &item : j) {
        if (!item.is_array()) {
            throw ParseError("each edge must be an array of vertex indices");
        }
        Edge e;
        for (const auto &v : item) {
            if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
                throw ParseError("vertex indices must be nonnegative integers");
            }
            auto idx = v.get<std::uint64_t>();
            if (idx >= num_vertices) {
                throw ParseError("vertex " + std::to_string(idx) + " out of range");
            }
            e = e | Edge::single(idx);
        }
        out.push_back(e);
    }
    return out;
}

Hypergraph hypergraph_from_json(const nlohmann::json &j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
        throw ParseError("hypergraph JSON needs \"n\" and \"edges\"");
    }
    if (!j["n"].is_number_integer() || j["n"].get<std::int64_t>() < 0) {
        throw ParseError("\"n\" must be a nonnegative integer");
    }
    auto n = j["n"].get<std::size_t>();
    if (n > kMaxVertices) {
        throw ParseError("\"n\" exceeds the 64-vertex limit");
    }
    EdgeSet edges = edges_from_json(j["edges"], n);
    for (Edge e : edges) {
        if (e.empty()) {
            throw ParseError("empty edge");
        }
    }
    return Hypergraph(n, edges);
}

std::string to_dot(const Hypergraph &h, std::span<const std::string> labels) {
    auto name = [&](Vertex v) { return v < labels.size() ? labels[v] : std::to_string(v); };
    std::ostringstream out;
    out << "graph hypergraph {\n";
    out << "  node [shape=circle];\n";
    std::vector<bool> z(h.num_vertices(), false);
    for (Edge e : h.edges()) {
        if (e.size() == 1) {
            z[e.vertices()[0]] = true;
        }
    }
    for (Vertex v = 0; v < h.num_vertices(); ++v) {
        out << "  v" << v << " [label=\"" << name(v) << "\"" << (z[v] ? ", peripheries=2" : "") << "];\n";
    }
    std::size_t hub = 0;
    for (Edge e : h.edges()) {
        auto vs = e.vertices();
        if (vs.size() == 2) {
            out << "  v" << vs[0] << " -- v" << vs[1] << ";\n";
        } else if (vs.size() >= 3) {
            out << "  e" << hub << " [shape=square, label=\"\", width=0.15, style=filled, fillcolor=black];\n";
            for (Vertex v : vs) {
                out << "  e" << hub << " -- v" << v << ";\n";
            }
            ++hub;
        }
    }
    out << "}\n";
    return out.str();
}

Hypergraph random_hypergraph(std::size_t num_vertices, std::size_t max_cardinality, std::size_t edge_count,
                             std::uint64_t seed) {
    check_count(num_vertices);
    max_cardinality = std::min(max_cardinality, num_vertices);
    if (edge_count > 0 && max_cardinality == 0) {
        throw InvalidArgument("cannot draw edges with cardinality 0");
    }
    // Number of available subsets of size 1..max_cardinality, saturating.
    double available = 0;
    double binom = 1;
    for (std::size_t k = 1; k <= max_cardinality; ++k) {
        binom = binom * static_cast<double>(num_vertices - k + 1) / static_cast<double>(k);
        available += binom;
    }
    if (static_cast<double>(edge_count) > available) {
        throw InvalidArgument("requested more distinct edges than exist");
    }
    Rng rng(seed);
    EdgeSet edges;
    while (edges.size() < edge_count) {
        std::size_t card = 1 + rng.below(max_cardinality);
        Edge e;
        while (e.size() < card) {
            e = e | Edge::single(rng.below(num_vertices));
        }
        auto it = std::lower_bound(edges.begin(), edges.end(), e);
        if (it == edges.end() || *it != e) {
            edges.insert(it, e);
        }
    }
    return Hypergraph::from_canonical(num_vertices, std::move(edges));
}

std::string product_notation(std::span<const Edge> edges, std::span<const Vertex> labels) {
    if (edges.empty()) {
        return "1";
    }
    std::string out;
    for (Edge e : edges) {
        if (!out.empty()) {
            out += ' ';
        }
        if (e.empty()) {
            out += "(-1)";
            continue;
        }
        out += e.size() == 1 ? "Z_{" : "C_{";
        bool first = true;
        for (Vertex v : e.vertices()) {
            if (!first) {
                out += ',';
            }
            out += std::to_string(v < labels.size() ? labels[v] : v);
            first = false;
        }
        out += '}';
    }
    return out;
}

std::ostream &operator<<(std::ostream &out, const Hypergraph &h) {
    return out << "n=" << h.num_vertices() << " " << product_notation(h.edges());
}

}  // namespace hyperstate

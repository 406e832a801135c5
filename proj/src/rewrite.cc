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

#include "hyperstate/rewrite.h"

#include <algorithm>

#include "hyperstate/errors.h"

namespace hyperstate {

namespace {

void check_vertex(const Hypergraph &h, Vertex v) {
    if (v >= h.num_vertices()) {
        throw InvalidArgument("vertex " + std::to_string(v) + " out of range for " +
                              std::to_string(h.num_vertices()) + " vertices");
    }
}

/// Index of `old_index` after removing `removed`.
Vertex shift_past(Vertex old_index, Vertex removed) {
    return old_index > removed ? old_index - 1 : old_index;
}

/// Adjacency of b with the empty member split off as a sign.
struct SplitAdjacency {
    EdgeSet delta;
    bool has_empty = false;
};

SplitAdjacency split_adjacency(const Hypergraph &h, Vertex b) {
    SplitAdjacency out;
    for (Edge e : adjacency(h, b)) {
        if (e.empty()) {
            out.has_empty = true;
        } else {
            out.delta.push_back(e);
        }
    }
    return out;
}

}  // namespace

std::vector<Vertex> pivots_of(const EdgeSet &delta) {
    std::vector<Vertex> out;
    for (Edge e : delta) {
        if (e.size() != 1) {
            continue;
        }
        Vertex a = e.vertices()[0];
        bool alone = std::none_of(delta.begin(), delta.end(), [&](Edge f) { return f != e && f.contains(a); });
        if (alone) {
            out.push_back(a);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

SuperpositionResult superposition_rule(const Hypergraph &alpha, const EdgeSet &delta, XOutcome sign,
                                       std::optional<Vertex> pivot) {
    std::vector<Vertex> pivots = pivots_of(delta);
    if (pivots.empty()) {
        throw NoPivot("no vertex a with {a} in the branch difference and no other difference edge touching a");
    }
    Vertex a = pivots.front();
    if (pivot) {
        if (std::find(pivots.begin(), pivots.end(), *pivot) == pivots.end()) {
            throw InvalidPivot("vertex " + std::to_string(*pivot) + " is not a valid pivot");
        }
        a = *pivot;
    }

    // E~ = delta \ {{a}}; A = adjacency of a in alpha; E' = alpha edges without a.
    EdgeSet tilde;
    for (Edge e : delta) {
        if (e != Edge::single(a)) {
            tilde.push_back(e);
        }
    }
    EdgeSet adj = adjacency(alpha, a);

    EdgeSet edges;
    for (Edge e : alpha.edges()) {
        if (!e.contains(a)) {
            edges.push_back(e);
        }
    }
    for (Edge t : tilde) {
        for (Edge ea : adj) {
            toggle(edges, ea | t);
        }
        toggle(edges, t.with(a));
    }

    SuperpositionResult out;
    out.pivot = a;
    out.correction_edges.push_back(Edge::single(a));
    for (Edge ea : adj) {
        if (!ea.empty()) {
            toggle(out.correction_edges, ea);
        }
    }
    if (sign == XOutcome::Minus) {
        for (Edge c : out.correction_edges) {
            toggle(edges, c);
        }
    }
    out.post = Hypergraph::from_canonical(alpha.num_vertices(), std::move(edges));
    return out;
}

Hypergraph measure_z(const Hypergraph &h, Vertex a, int outcome) {
    check_vertex(h, a);
    if (outcome != 0 && outcome != 1) {
        throw InvalidArgument("Z outcome must be 0 or 1");
    }
    Expansion e = expand(h, a);
    return outcome == 0 ? std::move(e.zero.graph) : std::move(e.one.graph);
}

std::vector<Vertex> find_pivots(const Hypergraph &h, Vertex b) {
    check_vertex(h, b);
    return pivots_of(split_adjacency(h, b).delta);
}

XRewriteResult measure_x(const Hypergraph &h, Vertex b, XOutcome outcome, std::optional<Vertex> pivot) {
    check_vertex(h, b);
    if (pivot && (*pivot >= h.num_vertices() || *pivot == b)) {
        throw InvalidPivot("pivot " + std::to_string(*pivot) + " must be an unmeasured vertex");
    }
    SplitAdjacency split = split_adjacency(h, b);
    // {b} in E puts a -1 on the 1-branch, which swaps the roles of + and -.
    XOutcome effective = split.has_empty ? flip(outcome) : outcome;

    Expansion exp = expand(h, b);
    EdgeSet delta;
    for (Edge e : split.delta) {
        delta.push_back(compress_out(e, b));
    }
    std::sort(delta.begin(), delta.end());

    std::optional<Vertex> local_pivot;
    if (pivot) {
        local_pivot = shift_past(*pivot, b);
    }
    SuperpositionResult s = superposition_rule(exp.zero.graph, delta, effective, local_pivot);

    XRewriteResult out;
    out.post = std::move(s.post);
    out.pivot = s.pivot;
    out.correction_edges = std::move(s.correction_edges);
    out.outcome_class = effective;
    out.vertex_map = std::move(exp.vertex_map);
    out.probability = 0.5;
    return out;
}

Hypergraph glc(const Hypergraph &h, Vertex a) {
    EdgeSet adj = adjacency(h, a);
    EdgeSet edges = h.edges();
    for (std::size_t i = 0; i < adj.size(); ++i) {
        for (std::size_t j = i + 1; j < adj.size(); ++j) {
            Edge u = adj[i] | adj[j];
            if (!u.empty()) {
                toggle(edges, u);
            }
        }
    }
    return Hypergraph::from_canonical(h.num_vertices(), std::move(edges));
}

XRewriteResult measure_x_glc(const Hypergraph &h, Vertex b, XOutcome outcome, std::optional<Vertex> pivot) {
    check_vertex(h, b);
    XOutcome effective = outcome;
    Hypergraph work = h;
    if (h.has_edge(Edge::single(b))) {
        Edge zb = Edge::single(b);
        work = toggle_edges(h, std::span<const Edge>(&zb, 1));
        effective = flip(outcome);
    }

    std::vector<Vertex> pivots = find_pivots(work, b);
    if (pivots.empty()) {
        throw NoPivot("no valid pivot for an X measurement of vertex " + std::to_string(b));
    }
    Vertex a = pivots.front();
    if (pivot) {
        if (std::find(pivots.begin(), pivots.end(), *pivot) == pivots.end()) {
            throw InvalidPivot("vertex " + std::to_string(*pivot) + " is not a valid pivot");
        }
        a = *pivot;
    }
    if (!work.has_edge(Edge::of({a, b}))) {
        throw ConditionViolated("edge {a, b} missing");
    }

    // Adjacency of a in the 0-branch (edges avoiding b).
    EdgeSet alpha_adj;
    for (Edge e : work.edges()) {
        if (e.contains(a) && !e.contains(b)) {
            alpha_adj.push_back(compress_out(e.without(a), b));
        }
    }

    Hypergraph g = glc(work, a);
    g = glc(g, b);
    auto [reduced, map] = delete_vertex(g, b);
    Vertex a_local = shift_past(a, b);
    reduced = glc(reduced, a_local);

    XRewriteResult out;
    out.pivot = a_local;
    out.correction_edges.push_back(Edge::single(a_local));
    for (Edge e : alpha_adj) {
        if (!e.empty()) {
            toggle(out.correction_edges, e);
        }
    }
    if (effective == XOutcome::Minus) {
        reduced = toggle_edges(reduced, out.correction_edges);
    }
    out.post = std::move(reduced);
    out.outcome_class = effective;
    out.vertex_map = std::move(map);
    out.probability = 0.5;
    return out;
}

Hypergraph gcnot(const Hypergraph &h, Edge controls, Vertex target) {
    check_vertex(h, target);
    if (controls.span_end() > h.num_vertices()) {
        throw InvalidArgument("controls " + controls.str() + " out of range");
    }
    if (controls.contains(target)) {
        throw InvalidArgument("target " + std::to_string(target) + " overlaps the controls");
    }
    EdgeSet edges = h.edges();
    for (Edge et : adjacency(h, target)) {
        Edge u = et | controls;
        if (!u.empty()) {
            toggle(edges, u);
        }
    }
    return Hypergraph::from_canonical(h.num_vertices(), std::move(edges));
}

BoxOutcomeClass classify_box_outcome(const std::array<XOutcome, 3> &outcomes) {
    BoxOutcomeClass out;
    out.minus_count = static_cast<int>(std::count(outcomes.begin(), outcomes.end(), XOutcome::Minus));
    switch (out.minus_count) {
        case 0:
            out.cls = BoxClass::Plus;
            break;
        case 2:
            out.cls = BoxClass::Forbidden;
            break;
        default:
            out.cls = BoxClass::Minus;
            break;
    }
    return out;
}

BoxCondition check_box_condition(const Hypergraph &h, const std::array<Vertex, 3> &box) {
    MultiExpansion exp = expand_multi(h, box);
    BoxCondition out;
    out.vertex_map = exp.vertex_map;
    const std::array<std::size_t, 4> low = {0, 1, 2, 4};
    const std::array<std::size_t, 4> high = {3, 5, 6, 7};
    auto same_class = [&](const std::array<std::size_t, 4> &cls) {
        const SignedBranch &first = exp.branches[cls[0]];
        return std::all_of(cls.begin(), cls.end(), [&](std::size_t k) { return exp.branches[k] == first; });
    };
    if (!same_class(low)) {
        out.reason = "weight <= 1 branches differ";
        return out;
    }
    if (!same_class(high)) {
        out.reason = "weight >= 2 branches differ";
        return out;
    }
    out.holds = true;
    out.relative_sign = exp.branches[0].sign * exp.branches[7].sign;
    out.alpha = exp.branches[0].graph;
    out.beta = exp.branches[7].graph;
    return out;
}

XRewriteResult measure_box_x(const Hypergraph &h, const std::array<Vertex, 3> &box,
                             const std::array<XOutcome, 3> &outcomes, std::optional<Vertex> pivot) {
    BoxOutcomeClass cls = classify_box_outcome(outcomes);
    if (cls.cls == BoxClass::Forbidden) {
        throw ForbiddenOutcome("box outcome with exactly two minus results has probability zero");
    }
    BoxCondition cond = check_box_condition(h, box);
    if (!cond.holds) {
        throw BoxConditionViolated(cond.reason);
    }
    XOutcome effective = cls.cls == BoxClass::Plus ? XOutcome::Plus : XOutcome::Minus;
    if (cond.relative_sign < 0) {
        effective = flip(effective);
    }

    std::optional<Vertex> local_pivot;
    if (pivot) {
        auto it = std::find(cond.vertex_map.begin(), cond.vertex_map.end(), *pivot);
        if (it == cond.vertex_map.end()) {
            throw InvalidPivot("pivot " + std::to_string(*pivot) + " is a box vertex or out of range");
        }
        local_pivot = static_cast<Vertex>(it - cond.vertex_map.begin());
    }
    EdgeSet delta = symmetric_difference(cond.alpha.edges(), cond.beta.edges());
    SuperpositionResult s = superposition_rule(cond.alpha, delta, effective, local_pivot);

    XRewriteResult out;
    out.post = std::move(s.post);
    out.pivot = s.pivot;
    out.correction_edges = std::move(s.correction_edges);
    out.outcome_class = effective;
    out.vertex_map = std::move(cond.vertex_map);
    // |alpha> and |beta> are orthogonal once a pivot exists, so the pattern
    // probability is (c_alpha^2 + c_beta^2) / 64 with c = 4 or 2.
    out.probability = cls.cls == BoxClass::Plus ? 0.5 : 0.125;
    return out;
}

nlohmann::json to_json(const XRewriteResult &r) {
    return nlohmann::json{
        {"schema", "hyperstate/1"},
        {"post", to_json(r.post)},
        {"pivot", r.pivot},
        {"correction_edges", edges_to_json(r.correction_edges)},
        {"class", to_string(r.outcome_class)},
        {"vertex_map", r.vertex_map},
        {"probability", r.probability},
    };
}

}  // namespace hyperstate

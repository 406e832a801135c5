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

#include "hyperstate/byproduct.h"

#include <algorithm>

#include "hyperstate/errors.h"

namespace hyperstate {

bool Byproduct::in_pauli_cz_group() const {
    return std::all_of(diagonal.begin(), diagonal.end(), [](Edge e) { return e.size() <= 2; });
}

std::string Byproduct::str() const {
    std::string out;
    for (Vertex v : x.vertices()) {
        out += (out.empty() ? "" : " ") + std::string("X_{") + std::to_string(v) + "}";
    }
    if (!diagonal.empty()) {
        out += (out.empty() ? "" : " ") + product_notation(diagonal);
    }
    return out.empty() ? "1" : out;
}

Byproduct x_byproduct(Edge qubits) {
    return Byproduct{qubits, {}};
}

Byproduct diagonal_byproduct(std::span<const Edge> edges) {
    return Byproduct{Edge(), edge_set_by_parity(edges)};
}

Byproduct propagate_ce(const Byproduct &b, Edge f) {
    Byproduct out = b;
    const std::uint64_t overlap = (f & b.x).bits;
    // Nonempty submasks of the overlap.
    for (std::uint64_t t = overlap; t != 0; t = (t - 1) & overlap) {
        Edge rest(f.bits & ~t);
        if (!rest.empty()) {
            toggle(out.diagonal, rest);
        }
    }
    return out;
}

Byproduct propagate_h(const Byproduct &b, Vertex v) {
    Byproduct out;
    bool had_z = false;
    for (Edge e : b.diagonal) {
        if (!e.contains(v)) {
            out.diagonal.push_back(e);
        } else if (e.size() == 1) {
            had_z = true;
        } else {
            throw UncorrectedCZ("byproduct " + product_notation(std::span<const Edge>(&e, 1)) +
                                " must be corrected before a Hadamard on " + std::to_string(v));
        }
    }
    out.x = had_z ? b.x.with(v) : b.x.without(v);
    if (b.x.contains(v)) {
        toggle(out.diagonal, Edge::single(v));
    }
    return out;
}

Byproduct propagate_x(const Byproduct &b, Vertex v) {
    Byproduct out = b;
    for (Edge e : b.diagonal) {
        if (e.contains(v) && e.size() > 1) {
            toggle(out.diagonal, e.without(v));
        }
    }
    return out;
}

Byproduct propagate_swap(const Byproduct &b, Vertex u, Vertex v) {
    auto swap_edge = [&](Edge e) {
        bool has_u = e.contains(u);
        bool has_v = e.contains(v);
        e = e.without(u).without(v);
        if (has_u) {
            e = e.with(v);
        }
        if (has_v) {
            e = e.with(u);
        }
        return e;
    };
    Byproduct out;
    out.x = swap_edge(b.x);
    std::vector<Edge> swapped;
    for (Edge e : b.diagonal) {
        swapped.push_back(swap_edge(e));
    }
    out.diagonal = edge_set_by_parity(swapped);
    return out;
}

void apply_byproduct(DenseState &s, const Byproduct &b) {
    for (Edge e : b.diagonal) {
        s.apply_ce(e);
    }
    for (Vertex v : b.x.vertices()) {
        s.apply_x(v);
    }
}

}  // namespace hyperstate

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

#ifndef HYPERSTATE_BYPRODUCT_H
#define HYPERSTATE_BYPRODUCT_H

#include <string>

#include "hyperstate/dense_state.h"
#include "hyperstate/hypergraph.h"

namespace hyperstate {

/// A logical byproduct X^x prod_{e in diagonal} C_e: the diagonal part acts
/// first, then X on every qubit of `x`. Global phases are dropped.
struct Byproduct {
    Edge x;
    EdgeSet diagonal;

    bool is_identity() const {
        return x.empty() && diagonal.empty();
    }
    /// Inside the group generated by CZ, X and Z.
    bool in_pauli_cz_group() const;
    /// Product notation, e.g. "X_{0} Z_{2} C_{1,2}".
    std::string str() const;

    friend bool operator==(const Byproduct &, const Byproduct &) = default;
};

Byproduct x_byproduct(Edge qubits);
Byproduct diagonal_byproduct(std::span<const Edge> edges);

/// Moves the byproduct past a later C_f: C_f B = B' C_f. Each X on f spawns
/// C_{f \ T} for every nonempty T inside the X support on f.
Byproduct propagate_ce(const Byproduct &b, Edge f);
/// H_v B = B' H_v. Throws UncorrectedCZ when a diagonal edge of size >= 2
/// touches v.
Byproduct propagate_h(const Byproduct &b, Vertex v);
/// X_v B = B' X_v: every diagonal edge through v spawns the edge without v.
Byproduct propagate_x(const Byproduct &b, Vertex v);
Byproduct propagate_swap(const Byproduct &b, Vertex u, Vertex v);

/// Applies X^x prod C_e to a dense state.
void apply_byproduct(DenseState &s, const Byproduct &b);

}  // namespace hyperstate

#endif

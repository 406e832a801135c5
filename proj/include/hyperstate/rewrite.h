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

#ifndef HYPERSTATE_REWRITE_H
#define HYPERSTATE_REWRITE_H

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hyperstate/hypergraph.h"

namespace hyperstate {

/// Outcome of a Pauli-X measurement: projection onto |+> or |->.
enum class XOutcome { Plus, Minus };

inline XOutcome flip(XOutcome o) {
    return o == XOutcome::Plus ? XOutcome::Minus : XOutcome::Plus;
}
inline const char *to_string(XOutcome o) {
    return o == XOutcome::Plus ? "plus" : "minus";
}

/// Result of an X-type rewrite. The measured vertices are gone; `post` lives
/// on the remaining ones, numbered as in `vertex_map`.
///
/// The projected state equals H_pivot |post>, up to global phase. For a minus
/// class `post` already contains `correction_edges`; for a plus class they are
/// reported but not applied.
struct XRewriteResult {
    Hypergraph post;
    Vertex pivot = 0;
    EdgeSet correction_edges;
    XOutcome outcome_class = XOutcome::Plus;
    VertexMap vertex_map;
    /// Probability of the observed outcome (pattern), predicted symbolically.
    double probability = 0.5;
};

/// The plus/minus superposition of two hypergraph states |alpha> +- |beta>
/// where E_beta = E_alpha xor delta. Works on the vertex set of `alpha`
/// without removing anything.
struct SuperpositionResult {
    Hypergraph post;
    Vertex pivot = 0;
    EdgeSet correction_edges;
};

/// Vertices a with {a} in delta and no other member of delta containing a.
std::vector<Vertex> pivots_of(const EdgeSet &delta);

/// H_a (|alpha> +- |beta>) as a hypergraph, for delta = {{a}} u E~ with no
/// member of E~ touching a. `delta` must not contain the empty edge. Throws
/// NoPivot when no valid a exists, InvalidPivot for a bad explicit choice.
SuperpositionResult superposition_rule(const Hypergraph &alpha, const EdgeSet &delta, XOutcome sign,
                                       std::optional<Vertex> pivot = std::nullopt);

/// Computational-basis measurement of vertex a (outcome 0 or 1). Vertex a is
/// removed; higher indices shift down. The phase of the 1-branch is dropped.
Hypergraph measure_z(const Hypergraph &h, Vertex a, int outcome);

/// Valid pivots for an X measurement of b, ascending. Empty when the
/// sufficient condition fails at b.
std::vector<Vertex> find_pivots(const Hypergraph &h, Vertex b);

/// X measurement of b via the expansion over b. `pivot` is given in the
/// labels of `h`; the default is the smallest valid pivot.
XRewriteResult measure_x(const Hypergraph &h, Vertex b, XOutcome outcome,
                         std::optional<Vertex> pivot = std::nullopt);

/// Generalized local complementation: toggles e_i u e_j for every unordered
/// pair of adjacency members of a (the empty member acts as the unit).
Hypergraph glc(const Hypergraph &h, Vertex a);

/// The same X measurement computed as glc_a(glc_b(glc_a(h))) - b followed
/// by the minus correction C_a prod_{e in A_alpha(a)} C_e.
XRewriteResult measure_x_glc(const Hypergraph &h, Vertex b, XOutcome outcome,
                             std::optional<Vertex> pivot = std::nullopt);

/// Generalized CNOT with the given control set: toggles e_t u controls for
/// every e_t in the adjacency of target.
Hypergraph gcnot(const Hypergraph &h, Edge controls, Vertex target);

enum class BoxClass { Plus, Minus, Forbidden };

struct BoxOutcomeClass {
    BoxClass cls = BoxClass::Plus;
    int minus_count = 0;
};

BoxOutcomeClass classify_box_outcome(const std::array<XOutcome, 3> &outcomes);

/// Symmetry check for a jointly measured triple: the eight branches of the
/// expansion must collapse to alpha (weight <= 1) and beta (weight >= 2).
struct BoxCondition {
    bool holds = false;
    /// sign(beta class) * sign(alpha class); meaningful when holds.
    int relative_sign = 1;
    Hypergraph alpha;
    Hypergraph beta;
    VertexMap vertex_map;
    std::string reason;
};

BoxCondition check_box_condition(const Hypergraph &h, const std::array<Vertex, 3> &box);

/// Joint X measurement of a box. Throws ForbiddenOutcome for the two-minus
/// patterns and BoxConditionViolated when the symmetry check fails.
XRewriteResult measure_box_x(const Hypergraph &h, const std::array<Vertex, 3> &box,
                             const std::array<XOutcome, 3> &outcomes, std::optional<Vertex> pivot = std::nullopt);

/// {"schema", "post", "pivot", "correction_edges", "class", "vertex_map",
/// "probability"}.
nlohmann::json to_json(const XRewriteResult &r);

}  // namespace hyperstate

#endif

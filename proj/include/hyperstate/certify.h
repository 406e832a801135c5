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

#ifndef HYPERSTATE_CERTIFY_H
#define HYPERSTATE_CERTIFY_H

#include <array>
#include <string>

#include "hyperstate/dense_state.h"
#include "hyperstate/rewrite.h"

namespace hyperstate {

/// Outcome of comparing a symbolic rewrite against the dense oracle.
struct Certificate {
    bool ok = false;
    /// Max amplitude deviation after phase alignment.
    double deviation = 0;
    /// Oracle probability of the outcome (1 for unitary rules).
    double probability = 1;
    std::string detail;
};

/// Projects build(h) on vertex b and compares with H_pivot |post>.
Certificate certify_measure_x(const Hypergraph &h, Vertex b, XOutcome outcome, const XRewriteResult &r,
                              std::size_t cap = kDefaultOracleCap);

/// Also requires the oracle probability to be exactly 1/2.
Certificate certify_measure_z(const Hypergraph &h, Vertex a, int outcome, const Hypergraph &post,
                              std::size_t cap = kDefaultOracleCap);

Certificate certify_gcnot(const Hypergraph &h, Edge controls, Vertex target, const Hypergraph &post,
                          std::size_t cap = kDefaultOracleCap);

/// Compares |glc_a(h)> with sqrt(X)_a prod_{e in A(a)} C_e^{-1/2} |h>, the
/// unitary realizing generalized local complementation.
Certificate certify_glc(const Hypergraph &h, Vertex a, const Hypergraph &post,
                        std::size_t cap = kDefaultOracleCap);

/// Projects the three box vertices in X and compares with H_pivot |post>;
/// the probability is checked against r.probability.
Certificate certify_box(const Hypergraph &h, const std::array<Vertex, 3> &box,
                        const std::array<XOutcome, 3> &outcomes, const XRewriteResult &r,
                        std::size_t cap = kDefaultOracleCap);

/// Oracle probability of a box X pattern (0 for impossible patterns).
double box_outcome_probability(const Hypergraph &h, const std::array<Vertex, 3> &box,
                               const std::array<XOutcome, 3> &outcomes, std::size_t cap = kDefaultOracleCap);

}  // namespace hyperstate

#endif

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

#include "hyperstate/certify.h"

#include <algorithm>
#include <cmath>
#include <complex>

#include "hyperstate/errors.h"

namespace hyperstate {

namespace {

int bit_of(XOutcome o) {
    return o == XOutcome::Plus ? 0 : 1;
}

Certificate compare(const DenseState &expected, const DenseState &actual, double probability) {
    PhaseComparison c = compare_up_to_phase(expected, actual);
    Certificate out;
    out.ok = c.equal;
    out.deviation = c.max_deviation;
    out.probability = probability;
    if (!out.ok) {
        out.detail = "amplitude deviation " + std::to_string(c.max_deviation);
    }
    return out;
}

/// Oracle state after measuring `box` (listed in the labels of the full
/// state) one at a time. Returns the product probability; `state` is empty
/// when some step is impossible.
MeasureResult measure_box(DenseState s, const std::array<Vertex, 3> &box, const std::array<XOutcome, 3> &outcomes) {
    std::array<Vertex, 3> idx = box;
    double prob = 1;
    for (std::size_t i = 0; i < 3; ++i) {
        MeasureResult r = measure(s, idx[i], Basis::X, bit_of(outcomes[i]));
        prob *= r.probability;
        if (!r.state) {
            return MeasureResult{prob, std::nullopt};
        }
        s = std::move(*r.state);
        for (std::size_t j = i + 1; j < 3; ++j) {
            if (idx[j] > idx[i]) {
                --idx[j];
            }
        }
    }
    return MeasureResult{prob, std::move(s)};
}

}  // namespace

Certificate certify_measure_x(const Hypergraph &h, Vertex b, XOutcome outcome, const XRewriteResult &r,
                              std::size_t cap) {
    MeasureResult m = measure(build(h, {}, cap), b, Basis::X, bit_of(outcome));
    if (!m.state) {
        return Certificate{false, 0, m.probability, "oracle outcome has probability zero"};
    }
    const Vertex pivot[] = {r.pivot};
    Certificate c = compare(*m.state, build(r.post, pivot, cap), m.probability);
    if (c.ok && std::abs(m.probability - r.probability) > kProbabilityTolerance) {
        c.ok = false;
        c.detail = "probability " + std::to_string(m.probability) + " != predicted " + std::to_string(r.probability);
    }
    return c;
}

Certificate certify_measure_z(const Hypergraph &h, Vertex a, int outcome, const Hypergraph &post, std::size_t cap) {
    MeasureResult m = measure(build(h, {}, cap), a, Basis::Z, outcome);
    if (!m.state) {
        return Certificate{false, 0, m.probability, "oracle outcome has probability zero"};
    }
    Certificate c = compare(*m.state, build(post, {}, cap), m.probability);
    if (c.ok && std::abs(m.probability - 0.5) > kProbabilityTolerance) {
        c.ok = false;
        c.detail = "Z outcome probability " + std::to_string(m.probability) + " != 1/2";
    }
    return c;
}

Certificate certify_gcnot(const Hypergraph &h, Edge controls, Vertex target, const Hypergraph &post,
                          std::size_t cap) {
    DenseState s = build(h, {}, cap);
    s.apply_mcx(controls, target);
    return compare(s, build(post, {}, cap), 1.0);
}

Certificate certify_glc(const Hypergraph &h, Vertex a, const Hypergraph &post, std::size_t cap) {
    DenseState s = build(h, {}, cap);
    const std::complex<double> minus_i(0, -1);
    for (Edge e : adjacency(h, a)) {
        s.apply_ce_phase(e, minus_i);
    }
    s.apply_sqrt_x(a);
    return compare(s, build(post, {}, cap), 1.0);
}

double box_outcome_probability(const Hypergraph &h, const std::array<Vertex, 3> &box,
                               const std::array<XOutcome, 3> &outcomes, std::size_t cap) {
    return measure_box(build(h, {}, cap), box, outcomes).probability;
}

Certificate certify_box(const Hypergraph &h, const std::array<Vertex, 3> &box,
                        const std::array<XOutcome, 3> &outcomes, const XRewriteResult &r, std::size_t cap) {
    MeasureResult m = measure_box(build(h, {}, cap), box, outcomes);
    if (!m.state) {
        return Certificate{false, 0, m.probability, "oracle outcome has probability zero"};
    }
    const Vertex pivot[] = {r.pivot};
    Certificate c = compare(*m.state, build(r.post, pivot, cap), m.probability);
    if (c.ok && std::abs(m.probability - r.probability) > kProbabilityTolerance) {
        c.ok = false;
        c.detail = "probability " + std::to_string(m.probability) + " != predicted " + std::to_string(r.probability);
    }
    return c;
}

}  // namespace hyperstate

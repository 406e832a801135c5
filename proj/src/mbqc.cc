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

#include "hyperstate/mbqc.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

#include "hyperstate/errors.h"
#include "hyperstate/random.h"

namespace hyperstate {

namespace {

Basis other(Basis b) {
    return b == Basis::X ? Basis::Z : Basis::X;
}

const char *basis_name(Basis b) {
    return b == Basis::X ? "X" : "Z";
}

Basis basis_from_name(const std::string &s) {
    if (s == "X" || s == "x") {
        return Basis::X;
    }
    if (s == "Z" || s == "z") {
        return Basis::Z;
    }
    throw ParseError("unknown basis '" + s + "'");
}

Edge lift(Edge e, std::span<const Vertex> labels) {
    Edge out;
    for (Vertex v : e.vertices()) {
        out = out.with(labels[v]);
    }
    return out;
}

/// Pattern state on the original labels.
struct Tracker {
    std::size_t n = 0;
    EdgeSet edges;
    std::vector<Vertex> alive;
    Edge pending;

    Hypergraph compact() const {
        return restrict_to(Hypergraph::from_canonical(n, edges), alive);
    }

    Vertex local(Vertex v) const {
        auto it = std::find(alive.begin(), alive.end(), v);
        if (it == alive.end()) {
            throw PatternError("vertex " + std::to_string(v) + " is not available for measurement");
        }
        return static_cast<Vertex>(it - alive.begin());
    }

    /// Adopts a post-measurement graph given on compacted labels.
    void adopt(const Hypergraph &post, const VertexMap &map) {
        std::vector<Vertex> next(map.size());
        for (std::size_t i = 0; i < map.size(); ++i) {
            next[i] = alive[map[i]];
        }
        alive = std::move(next);
        std::vector<Edge> lifted;
        for (Edge e : post.edges()) {
            lifted.push_back(lift(e, alive));
        }
        edges = edge_set_by_parity(lifted);
    }
};

XOutcome as_x(int bit) {
    return bit == 0 ? XOutcome::Plus : XOutcome::Minus;
}

/// Applies one step. `pivot` (original label) overrides the step's choice.
StepRecord apply_step(Tracker &t, const PatternStep &step, std::span<const int> bits, std::optional<Vertex> pivot) {
    StepRecord rec;
    rec.targets = step.targets;
    rec.physical_basis = step.basis;
    rec.outcome_bits.assign(bits.begin(), bits.end());

    std::size_t pending_count = 0;
    for (Vertex v : step.targets) {
        pending_count += t.pending.contains(v) ? 1 : 0;
    }
    if (pending_count != 0 && pending_count != step.targets.size()) {
        throw PatternError("box " + Edge::of(step.targets).str() + " mixes pending and settled vertices");
    }
    rec.logical_basis = pending_count != 0 ? other(step.basis) : step.basis;

    if (rec.logical_basis == Basis::Z) {
        for (std::size_t i = 0; i < step.targets.size(); ++i) {
            Vertex v = step.targets[i];
            Hypergraph g = t.compact();
            Vertex a = t.local(v);
            Hypergraph post = measure_z(g, a, bits[i]);
            VertexMap map;
            for (Vertex k = 0; k < g.num_vertices(); ++k) {
                if (k != a) {
                    map.push_back(k);
                }
            }
            t.adopt(post, map);
            t.pending = t.pending.without(v);
            rec.probability *= 0.5;
        }
        return rec;
    }

    Hypergraph g = t.compact();
    std::optional<Vertex> local_pivot;
    if (pivot) {
        auto it = std::find(t.alive.begin(), t.alive.end(), *pivot);
        if (it == t.alive.end()) {
            throw PatternError("pivot " + std::to_string(*pivot) + " is not an unmeasured vertex");
        }
        local_pivot = static_cast<Vertex>(it - t.alive.begin());
    }
    XRewriteResult r;
    if (step.targets.size() == 1) {
        r = measure_x(g, t.local(step.targets[0]), as_x(bits[0]), local_pivot);
    } else {
        std::array<Vertex, 3> box{t.local(step.targets[0]), t.local(step.targets[1]), t.local(step.targets[2])};
        r = measure_box_x(g, box, {as_x(bits[0]), as_x(bits[1]), as_x(bits[2])}, local_pivot);
    }
    t.adopt(r.post, r.vertex_map);
    for (Vertex v : step.targets) {
        t.pending = t.pending.without(v);
    }
    Vertex p = t.alive[r.pivot];
    t.pending = t.pending.contains(p) ? t.pending.without(p) : t.pending.with(p);
    rec.pivot = p;
    rec.outcome_class = r.outcome_class;
    if (r.outcome_class == XOutcome::Minus) {
        for (Edge e : r.correction_edges) {
            rec.corrections.push_back(lift(e, t.alive));
        }
        std::sort(rec.corrections.begin(), rec.corrections.end());
    }
    rec.probability = r.probability;
    return rec;
}

Tracker start(const GadgetSpec &spec) {
    Tracker t;
    t.n = spec.graph.num_vertices();
    t.edges = spec.graph.edges();
    for (Vertex v = 0; v < t.n; ++v) {
        t.alive.push_back(v);
    }
    t.pending = spec.frame.pending_h;
    return t;
}

LUFrame frame_from(const Tracker &actual, const Tracker &reference) {
    LUFrame f;
    f.pending_h = actual.pending;
    for (Edge e : symmetric_difference(actual.edges, reference.edges)) {
        if (e.size() == 1) {
            f.byproduct_z.push_back(e);
        } else if (e.size() == 2) {
            f.byproduct_cz.push_back(e);
        } else {
            f.byproduct_other.push_back(e);
        }
    }
    return f;
}

/// Runs the pattern in lock step with the all-zero reference. `choose`
/// returns the outcome bits of each step given the state before it.
template <class Choose>
PatternRun run_lockstep(const GadgetSpec &spec, Choose &&choose, Tracker *reference_out = nullptr) {
    spec.validate();
    Tracker act = start(spec);
    Tracker ref = act;
    PatternRun run;
    for (const PatternStep &step : spec.pattern.steps) {
        std::vector<int> zeros(step.targets.size(), 0);
        StepRecord r0 = apply_step(ref, step, zeros, step.pivot);
        std::vector<int> bits = choose(act, step, r0.pivot);
        StepRecord rec = apply_step(act, step, bits, r0.pivot);
        run.record.probability *= rec.probability;
        run.record.steps.push_back(std::move(rec));
    }
    if (act.pending != ref.pending || act.alive != ref.alive) {
        throw PatternError("run diverged from the reference frame");
    }
    run.final_graph = Hypergraph::from_canonical(act.n, act.edges);
    run.frame = frame_from(act, ref);
    run.alive = act.alive;
    if (reference_out) {
        *reference_out = std::move(ref);
    }
    return run;
}

std::vector<std::complex<double>> identity_like(std::size_t dim) {
    std::vector<std::complex<double>> m(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m[i * dim + i] = 1;
    }
    return m;
}

nlohmann::json vertices_json(Edge e) {
    return e.vertices();
}

Edge vertices_from_json(const nlohmann::json &j, std::size_t n) {
    if (!j.is_array()) {
        throw ParseError("vertex list must be an array");
    }
    Edge out;
    for (const auto &v : j) {
        if (!v.is_number_unsigned() || v.get<std::size_t>() >= n) {
            throw ParseError("vertex index out of range");
        }
        out = out.with(v.get<std::size_t>());
    }
    return out;
}

}  // namespace

EdgeSet LUFrame::byproduct_edges() const {
    EdgeSet out = byproduct_z;
    out.insert(out.end(), byproduct_cz.begin(), byproduct_cz.end());
    out.insert(out.end(), byproduct_other.begin(), byproduct_other.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t MeasurementPattern::num_outcomes() const {
    std::size_t k = 0;
    for (const PatternStep &s : steps) {
        k += s.targets.size();
    }
    return k;
}

void GadgetSpec::validate() const {
    const std::size_t n = graph.num_vertices();
    auto in_range = [&](Vertex v) { return v < n; };
    if (!std::is_sorted(outputs.begin(), outputs.end()) ||
        std::adjacent_find(outputs.begin(), outputs.end()) != outputs.end()) {
        throw InvalidArgument("outputs must be strictly ascending");
    }
    if (!std::all_of(outputs.begin(), outputs.end(), in_range) ||
        !std::all_of(inputs.begin(), inputs.end(), in_range)) {
        throw InvalidArgument("input or output vertex out of range");
    }
    if (frame.pending_h.span_end() > n) {
        throw InvalidArgument("pending Hadamard on a nonexistent vertex");
    }
    const std::size_t dim = std::size_t{1} << outputs.size();
    if (outputs.size() >= 32 || target.size() != dim * dim) {
        throw InvalidArgument("target must be a 2^k x 2^k matrix on the outputs");
    }
    Edge measured;
    for (const PatternStep &s : pattern.steps) {
        if (s.targets.size() != 1 && s.targets.size() != 3) {
            throw InvalidArgument("a step measures one vertex or a box of three");
        }
        for (Vertex v : s.targets) {
            if (!in_range(v)) {
                throw InvalidArgument("measured vertex " + std::to_string(v) + " out of range");
            }
            if (measured.contains(v)) {
                throw InvalidArgument("vertex " + std::to_string(v) + " measured twice");
            }
            measured = measured.with(v);
        }
        if (s.pivot && !in_range(*s.pivot)) {
            throw InvalidArgument("pivot out of range");
        }
    }
    for (Vertex v : outputs) {
        if (measured.contains(v)) {
            throw InvalidArgument("output " + std::to_string(v) + " is measured");
        }
    }
    for (Edge e : allowed_byproducts) {
        if (e.size() > 2 || e.span_end() > n) {
            throw InvalidArgument("allowed byproducts must be Z or CZ generators on existing vertices");
        }
    }
    if (!labels.empty() && labels.size() != n) {
        throw InvalidArgument("labels must name every vertex");
    }
}

std::vector<std::complex<double>> diagonal_target(const Hypergraph &on_outputs) {
    const std::size_t dim = std::size_t{1} << on_outputs.num_vertices();
    std::vector<std::complex<double>> m = identity_like(dim);
    for (std::size_t x = 0; x < dim; ++x) {
        for (Edge e : on_outputs.edges()) {
            if ((x & e.bits) == e.bits) {
                m[x * dim + x] = -m[x * dim + x];
            }
        }
    }
    return m;
}

Hypergraph restrict_to(const Hypergraph &h, std::span<const Vertex> vertices) {
    std::vector<Edge> out;
    Edge keep = Edge::of(vertices);
    for (Edge e : h.edges()) {
        if (!e.is_subset_of(keep)) {
            throw InvalidArgument("edge " + e.str() + " leaves the kept vertex set");
        }
        Edge m;
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (e.contains(vertices[i])) {
                m = m.with(i);
            }
        }
        out.push_back(m);
    }
    return Hypergraph(vertices.size(), out);
}

PatternRun run_pattern(const GadgetSpec &spec, std::span<const int> bits) {
    if (bits.size() != spec.pattern.num_outcomes()) {
        throw InvalidArgument("expected " + std::to_string(spec.pattern.num_outcomes()) + " outcome bits, got " +
                              std::to_string(bits.size()));
    }
    for (int b : bits) {
        if (b != 0 && b != 1) {
            throw InvalidArgument("outcome bits must be 0 or 1");
        }
    }
    std::size_t cursor = 0;
    return run_lockstep(spec, [&](const Tracker &, const PatternStep &step, std::optional<Vertex>) {
        std::vector<int> out(bits.begin() + cursor, bits.begin() + cursor + step.targets.size());
        cursor += step.targets.size();
        return out;
    });
}

PatternRun run_pattern_random(const GadgetSpec &spec, std::uint64_t seed, std::vector<int> *bits_out) {
    Rng rng(seed);
    std::vector<int> all_bits;
    PatternRun run = run_lockstep(spec, [&](const Tracker &t, const PatternStep &step, std::optional<Vertex> pivot) {
        const std::size_t k = step.targets.size();
        std::vector<double> weight(std::size_t{1} << k, 0);
        for (std::size_t pattern = 0; pattern < weight.size(); ++pattern) {
            std::vector<int> bits(k);
            for (std::size_t i = 0; i < k; ++i) {
                bits[i] = (pattern >> i) & 1;
            }
            Tracker copy = t;
            try {
                weight[pattern] = apply_step(copy, step, bits, pivot).probability;
            } catch (const ForbiddenOutcome &) {
                weight[pattern] = 0;
            }
        }
        double total = 0;
        for (double w : weight) {
            total += w;
        }
        double u = rng.unit() * total;
        std::size_t chosen = 0;
        while (chosen + 1 < weight.size() && (u >= weight[chosen] || weight[chosen] == 0)) {
            u -= weight[chosen];
            ++chosen;
        }
        std::vector<int> bits(k);
        for (std::size_t i = 0; i < k; ++i) {
            bits[i] = (chosen >> i) & 1;
            all_bits.push_back(bits[i]);
        }
        return bits;
    });
    if (bits_out) {
        *bits_out = std::move(all_bits);
    }
    return run;
}

GadgetSpec build_ccz_gadget() {
    GadgetSpec g;
    g.name = "ccz-gadget";
    Hypergraph base(12, {{0, 3}, {3, 6}, {1, 4}, {4, 7}, {2, 5}, {5, 8}, {0, 1, 2}});
    const Vertex targets[] = {0, 1, 2};
    g.graph = attach_box(base, {9, 10, 11}, targets);
    g.frame.pending_h = Edge::of({3, 4, 5});
    g.pattern.steps = {
        {{9, 10, 11}, Basis::Z, std::nullopt},
        {{3}, Basis::Z, std::nullopt},
        {{4}, Basis::Z, std::nullopt},
        {{5}, Basis::Z, std::nullopt},
        {{0}, Basis::X, std::nullopt},
        {{1}, Basis::X, std::nullopt},
        {{2}, Basis::X, std::nullopt},
    };
    g.inputs = {0, 1, 2};
    g.outputs = {6, 7, 8};
    g.target = diagonal_target(Hypergraph(3, {{0, 1, 2}}));
    g.allowed_byproducts = {Edge::of({6}), Edge::of({7}), Edge::of({8}),
                            Edge::of({6, 7}), Edge::of({6, 8}), Edge::of({7, 8})};
    std::sort(g.allowed_byproducts.begin(), g.allowed_byproducts.end());
    g.labels = {"a0", "a1", "a2", "m0", "m1", "m2", "out0", "out1", "out2", "box0", "box1", "box2"};
    return g;
}

namespace {

EdgeSet all_z_and_cz(std::span<const Vertex> vs) {
    EdgeSet out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        out.push_back(Edge::single(vs[i]));
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            out.push_back(Edge::of({vs[i], vs[j]}));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

GadgetSpec build_bell_teleporter() {
    GadgetSpec g;
    g.name = "bell";
    g.graph = Hypergraph(5, {{0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 4}, {1, 2, 3}, {1, 2, 4}});
    g.pattern.steps = {{{0, 1, 2}, Basis::X, Vertex{3}}};
    g.outputs = {3, 4};
    g.target = diagonal_target(Hypergraph(2, {{0, 1}}));
    g.allowed_byproducts = all_z_and_cz(g.outputs);
    g.expected_pending = Edge::of({3});
    return g;
}

GadgetSpec build_wire_fragment(WireVariant variant) {
    GadgetSpec g;
    const Vertex targets[] = {3, 4, 5};
    Hypergraph base(6);
    if (variant == WireVariant::TargetHyperedge) {
        base = Hypergraph(6, {{3, 4, 5}});
    }
    g.name = variant == WireVariant::Plain ? "wire2" : "wire3";
    g.graph = attach_box(base, {0, 1, 2}, targets);
    g.pattern.steps = {{{0, 1, 2}, Basis::X, Vertex{4}}};
    g.outputs = {3, 4, 5};
    g.target = diagonal_target(Hypergraph(3, {{0, 1}, {1, 2}}));
    g.allowed_byproducts = all_z_and_cz(g.outputs);
    g.expected_pending = Edge::of({4});
    return g;
}

VerificationReport exhaustive_verify(const GadgetSpec &spec, std::size_t cap, std::size_t threads) {
    spec.validate();
    const std::size_t n = spec.graph.num_vertices();
    if (n > cap) {
        throw CapExceeded(std::to_string(n) + " qubits exceed the oracle cap of " + std::to_string(cap));
    }
    const std::size_t k = spec.pattern.num_outcomes();
    if (k >= 24) {
        throw InvalidArgument("too many outcome bits to enumerate");
    }
    const std::vector<Vertex> initial_pending = spec.frame.pending_h.vertices();
    const DenseState initial = build(spec.graph, initial_pending, cap);

    // Ideal output on |+...+>.
    const std::size_t dim = std::size_t{1} << spec.outputs.size();
    DenseState plus = DenseState::plus(spec.outputs.size(), cap);
    std::vector<DenseState::Amplitude> ideal(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            ideal[r] += spec.target[r * dim + c] * plus[c];
        }
    }
    const DenseState target_state = DenseState::from_amplitudes(ideal);
    const EdgeSet allowed = spec.allowed_byproducts;
    const Edge outputs = Edge::of(spec.outputs);

    auto check_one = [&](std::size_t pattern) {
        PatternCheck c;
        for (std::size_t i = 0; i < k; ++i) {
            c.bits.push_back((pattern >> i) & 1);
        }
        // Oracle: measure physical qubits in order.
        std::optional<DenseState> s = initial;
        std::vector<Vertex> alive;
        for (Vertex v = 0; v < n; ++v) {
            alive.push_back(v);
        }
        double prob = 1;
        std::size_t cursor = 0;
        for (const PatternStep &step : spec.pattern.steps) {
            for (Vertex v : step.targets) {
                if (!s) {
                    break;
                }
                auto it = std::find(alive.begin(), alive.end(), v);
                MeasureResult m = measure(*s, static_cast<Vertex>(it - alive.begin()), step.basis, c.bits[cursor++]);
                prob *= m.probability;
                s = std::move(m.state);
                alive.erase(it);
            }
        }
        c.oracle_probability = s ? prob : 0;
        c.realizable = s.has_value();

        std::optional<PatternRun> run;
        try {
            run = run_pattern(spec, c.bits);
        } catch (const ForbiddenOutcome &) {
            if (c.realizable) {
                c.detail = std::string("symbolic rule forbids an outcome with oracle probability ") +
                           std::to_string(c.oracle_probability);
            } else {
                c.pass = true;
            }
            return c;
        } catch (const Error &e) {
            c.detail = e.kind() + ": " + e.what();
            return c;
        }
        c.symbolic_probability = run->record.probability;
        c.byproducts = run->frame.byproduct_edges();
        if (!c.realizable) {
            c.detail = "symbolic run accepts an outcome the oracle rules out";
            return c;
        }
        if (std::abs(c.symbolic_probability - c.oracle_probability) > 1e-9) {
            c.detail = "probability " + std::to_string(c.symbolic_probability) + " vs oracle " +
                       std::to_string(c.oracle_probability);
            return c;
        }
        Hypergraph final_local = restrict_to(run->final_graph, run->alive);
        std::vector<Vertex> pending_local;
        for (std::size_t i = 0; i < run->alive.size(); ++i) {
            if (run->frame.pending_h.contains(run->alive[i])) {
                pending_local.push_back(i);
            }
        }
        if (!equal_up_to_phase(*s, build(final_local, pending_local, cap))) {
            c.detail = "symbolic state differs from the oracle state";
            return c;
        }
        if (run->alive != spec.outputs) {
            c.detail = "unmeasured vertices differ from the outputs";
            return c;
        }
        Hypergraph logical = restrict_to(
            Hypergraph::from_canonical(n, symmetric_difference(run->final_graph.edges(), c.byproducts)), run->alive);
        if (!equal_up_to_phase(build(logical, {}, cap), target_state)) {
            c.detail = "byproduct-free output differs from the target";
            return c;
        }
        if (run->frame.pending_h != spec.expected_pending) {
            c.detail = "pending Hadamards " + run->frame.pending_h.str() + " differ from expected " +
                       spec.expected_pending.str();
            return c;
        }
        for (Edge e : c.byproducts) {
            if (!e.is_subset_of(outputs) || !contains(allowed, e)) {
                c.detail = "byproduct " + e.str() + " outside the allowed group";
                return c;
            }
        }
        c.pass = true;
        return c;
    };

    const std::size_t total = std::size_t{1} << k;
    std::vector<PatternCheck> checks(total);
    std::atomic<std::size_t> next{0};
    std::size_t workers = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, total);
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < workers; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < total; i = next++) {
                    checks[i] = check_one(i);
                }
            });
        }
    }

    VerificationReport report;
    report.gadget = spec.name;
    report.patterns = total;
    report.pass = true;
    for (const PatternCheck &c : checks) {
        report.realizable += c.realizable ? 1 : 0;
        report.total_probability += c.oracle_probability;
        if (!c.pass && !report.witness) {
            report.witness = c;
        }
        report.pass = report.pass && c.pass;
    }
    if (std::abs(report.total_probability - 1) > 1e-9) {
        report.pass = false;
    }
    report.checks = std::move(checks);
    return report;
}

BarrierCorrections hadamard_barrier(const LUFrame &frame, Edge wires, bool correct) {
    BarrierCorrections out;
    for (const EdgeSet *set : {&frame.byproduct_cz, &frame.byproduct_other}) {
        for (Edge e : *set) {
            if (!e.intersects(wires)) {
                continue;
            }
            if (!correct) {
                throw UncorrectedCZ("byproduct C_" + e.str() + " must be corrected before the Hadamard layer");
            }
            out.corrections.push_back(e);
        }
    }
    std::sort(out.corrections.begin(), out.corrections.end());
    for (Edge e : frame.byproduct_z) {
        if (e.intersects(wires)) {
            out.z_to_x = out.z_to_x | e;
        }
    }
    return out;
}

nlohmann::json to_json(const LUFrame &frame) {
    return nlohmann::json{{"pending_h", vertices_json(frame.pending_h)},
                          {"byproduct_z", edges_to_json(frame.byproduct_z)},
                          {"byproduct_cz", edges_to_json(frame.byproduct_cz)},
                          {"byproduct_other", edges_to_json(frame.byproduct_other)}};
}

nlohmann::json to_json(const GadgetSpec &spec) {
    nlohmann::json steps = nlohmann::json::array();
    for (const PatternStep &s : spec.pattern.steps) {
        nlohmann::json j{{"targets", s.targets}, {"basis", basis_name(s.basis)}};
        if (s.pivot) {
            j["pivot"] = *s.pivot;
        }
        steps.push_back(j);
    }
    nlohmann::json target = nlohmann::json::array();
    for (auto z : spec.target) {
        target.push_back({z.real(), z.imag()});
    }
    return nlohmann::json{{"schema", "hyperstate/1"},
                          {"name", spec.name},
                          {"graph", to_json(spec.graph)},
                          {"frame", to_json(spec.frame)},
                          {"pattern", steps},
                          {"inputs", spec.inputs},
                          {"outputs", spec.outputs},
                          {"target", target},
                          {"allowed_byproducts", edges_to_json(spec.allowed_byproducts)},
                          {"expected_pending", vertices_json(spec.expected_pending)},
                          {"labels", spec.labels}};
}

GadgetSpec gadget_from_json(const nlohmann::json &j) {
    try {
        GadgetSpec g;
        g.name = j.at("name").get<std::string>();
        g.graph = hypergraph_from_json(j.at("graph"));
        const std::size_t n = g.graph.num_vertices();
        const nlohmann::json &f = j.at("frame");
        g.frame.pending_h = vertices_from_json(f.at("pending_h"), n);
        g.frame.byproduct_z = edges_from_json(f.at("byproduct_z"), n);
        g.frame.byproduct_cz = edges_from_json(f.at("byproduct_cz"), n);
        g.frame.byproduct_other = edges_from_json(f.at("byproduct_other"), n);
        for (const auto &s : j.at("pattern")) {
            PatternStep step;
            step.targets = s.at("targets").get<std::vector<Vertex>>();
            step.basis = basis_from_name(s.at("basis").get<std::string>());
            if (s.contains("pivot")) {
                step.pivot = s.at("pivot").get<Vertex>();
            }
            g.pattern.steps.push_back(std::move(step));
        }
        g.inputs = j.at("inputs").get<std::vector<Vertex>>();
        g.outputs = j.at("outputs").get<std::vector<Vertex>>();
        for (const auto &z : j.at("target")) {
            g.target.emplace_back(z.at(0).get<double>(), z.at(1).get<double>());
        }
        g.allowed_byproducts = edges_from_json(j.at("allowed_byproducts"), n);
        g.expected_pending = vertices_from_json(j.at("expected_pending"), n);
        if (j.contains("labels")) {
            g.labels = j.at("labels").get<std::vector<std::string>>();
        }
        try {
            g.validate();
        } catch (const InvalidArgument &e) {
            throw ParseError(e.what());
        }
        return g;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("malformed gadget: ") + e.what());
    }
}

nlohmann::json to_json(const VerificationReport &report) {
    auto check_json = [](const PatternCheck &c) {
        nlohmann::json j{{"bits", c.bits},
                         {"realizable", c.realizable},
                         {"oracle_probability", c.oracle_probability},
                         {"symbolic_probability", c.symbolic_probability},
                         {"byproducts", edges_to_json(c.byproducts)},
                         {"pass", c.pass}};
        if (!c.detail.empty()) {
            j["detail"] = c.detail;
        }
        return j;
    };
    nlohmann::json outcomes = nlohmann::json::array();
    for (const PatternCheck &c : report.checks) {
        if (c.realizable) {
            outcomes.push_back(check_json(c));
        }
    }
    nlohmann::json out{{"schema", "hyperstate/1"},
                       {"gadget", report.gadget},
                       {"pass", report.pass},
                       {"patterns", report.patterns},
                       {"realizable", report.realizable},
                       {"total_probability", report.total_probability},
                       {"outcomes", outcomes}};
    if (report.witness) {
        out["witness"] = check_json(*report.witness);
    }
    return out;
}

nlohmann::json to_json(const PatternRun &run) {
    nlohmann::json steps = nlohmann::json::array();
    for (const StepRecord &s : run.record.steps) {
        nlohmann::json j{{"targets", s.targets},
                         {"physical_basis", basis_name(s.physical_basis)},
                         {"logical_basis", basis_name(s.logical_basis)},
                         {"bits", s.outcome_bits},
                         {"probability", s.probability}};
        if (s.pivot) {
            j["pivot"] = *s.pivot;
        }
        if (s.outcome_class) {
            j["class"] = to_string(*s.outcome_class);
            j["corrections"] = edges_to_json(s.corrections);
        }
        steps.push_back(j);
    }
    return nlohmann::json{{"schema", "hyperstate/1"},
                          {"final", to_json(run.final_graph)},
                          {"alive", run.alive},
                          {"frame", to_json(run.frame)},
                          {"steps", steps},
                          {"probability", run.record.probability}};
}

std::string to_dot(const GadgetSpec &spec) {
    std::string dot = to_dot(spec.graph, spec.labels);
    std::ostringstream extra;
    for (Vertex v : spec.frame.pending_h.vertices()) {
        extra << "  v" << v << " [shape=box];\n";
    }
    dot.insert(dot.rfind('}'), extra.str());
    return dot;
}

}  // namespace hyperstate

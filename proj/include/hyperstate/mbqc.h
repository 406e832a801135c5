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

#ifndef HYPERSTATE_MBQC_H
#define HYPERSTATE_MBQC_H

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperstate/dense_state.h"
#include "hyperstate/hypergraph.h"
#include "hyperstate/rewrite.h"

namespace hyperstate {

/// Local-unitary frame over the original vertex labels of a gadget.
///
/// The physical state is prod_{v in pending_h} H_v |G> for the current
/// hypergraph G. Byproduct edges are the edges of G that differ from a
/// reference run with all-trivial outcomes, split by cardinality.
struct LUFrame {
    Edge pending_h;
    EdgeSet byproduct_z;
    EdgeSet byproduct_cz;
    /// Byproduct edges of cardinality >= 3; empty for every gadget in scope.
    EdgeSet byproduct_other;

    EdgeSet byproduct_edges() const;
    friend bool operator==(const LUFrame &, const LUFrame &) = default;
};

/// One measurement: a single vertex or a jointly measured box of three.
/// `basis` is the physical basis; on vertices with a pending Hadamard the
/// logical basis is the other one.
struct PatternStep {
    std::vector<Vertex> targets;
    Basis basis = Basis::X;
    /// Pivot for a logical X step, in original labels. Default: smallest.
    std::optional<Vertex> pivot;
};

struct MeasurementPattern {
    std::vector<PatternStep> steps;

    /// Number of outcome bits, one per measured vertex.
    std::size_t num_outcomes() const;
};

struct GadgetSpec {
    std::string name;
    Hypergraph graph;
    LUFrame frame;
    MeasurementPattern pattern;
    std::vector<Vertex> inputs;
    /// Ascending; qubit i of `target` is outputs[i].
    std::vector<Vertex> outputs;
    /// Row-major 2^k x 2^k matrix on the outputs.
    std::vector<std::complex<double>> target;
    /// Generators of the allowed byproduct group, each a Z or CZ edge.
    EdgeSet allowed_byproducts;
    /// Pending Hadamards expected after the whole pattern.
    Edge expected_pending;
    /// Display names for DOT output; defaults to indices.
    std::vector<std::string> labels;

    /// Throws InvalidArgument on malformed specs.
    void validate() const;
};

/// Diagonal matrix of prod_{e in edges} C_e on k qubits.
std::vector<std::complex<double>> diagonal_target(const Hypergraph &on_outputs);

struct StepRecord {
    std::vector<Vertex> targets;
    Basis physical_basis = Basis::X;
    Basis logical_basis = Basis::X;
    std::vector<int> outcome_bits;
    std::optional<Vertex> pivot;
    std::optional<XOutcome> outcome_class;
    /// Correction edges toggled in by a minus class, in original labels.
    EdgeSet corrections;
    double probability = 1;
};

struct MeasurementRecord {
    std::vector<StepRecord> steps;
    double probability = 1;
};

struct PatternRun {
    /// On the original labels; measured vertices are isolated.
    Hypergraph final_graph;
    LUFrame frame;
    MeasurementRecord record;
    /// Unmeasured vertices, ascending.
    std::vector<Vertex> alive;
};

/// Executes the pattern symbolically. `bits` holds one outcome per measured
/// vertex in pattern order (0 for |0>/|+>, 1 for |1>/|->). A lock-step run
/// with all-zero outcomes fixes the pivots and defines the byproducts.
/// Throws PatternError, NoPivot, ForbiddenOutcome, BoxConditionViolated.
PatternRun run_pattern(const GadgetSpec &spec, std::span<const int> bits);

/// Samples outcome bits with the rule probabilities, then runs the pattern.
PatternRun run_pattern_random(const GadgetSpec &spec, std::uint64_t seed, std::vector<int> *bits_out = nullptr);

/// Hypergraph on the listed vertices (ascending), dropping nothing: every
/// edge must lie inside `vertices`.
Hypergraph restrict_to(const Hypergraph &h, std::span<const Vertex> vertices);

GadgetSpec build_ccz_gadget();
GadgetSpec build_bell_teleporter();
enum class WireVariant { Plain, TargetHyperedge };
GadgetSpec build_wire_fragment(WireVariant variant);

struct PatternCheck {
    std::vector<int> bits;
    bool realizable = true;
    double oracle_probability = 0;
    double symbolic_probability = 0;
    EdgeSet byproducts;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    std::string gadget;
    bool pass = false;
    std::size_t patterns = 0;
    std::size_t realizable = 0;
    double total_probability = 0;
    std::vector<PatternCheck> checks;
    /// First failing pattern, if any.
    std::optional<PatternCheck> witness;
};

/// Enumerates every outcome assignment and checks each realizable one
/// against the dense oracle: probabilities, the full physical state, the
/// byproduct-free state against the target on |+...+>, the final pending
/// set, and byproduct membership in the allowed group.
VerificationReport exhaustive_verify(const GadgetSpec &spec, std::size_t cap = kDefaultOracleCap,
                                     std::size_t threads = 0);

struct BarrierCorrections {
    /// CZ byproducts touching the wires; to be applied before the layer.
    EdgeSet corrections;
    /// Z byproducts on the wires, which pass the layer as X.
    Edge z_to_x;
};

/// Corrections required before a Hadamard layer on `wires`. With
/// `correct` false, any CZ byproduct on a wire raises UncorrectedCZ.
BarrierCorrections hadamard_barrier(const LUFrame &frame, Edge wires, bool correct = true);

nlohmann::json to_json(const LUFrame &frame);
nlohmann::json to_json(const GadgetSpec &spec);
GadgetSpec gadget_from_json(const nlohmann::json &j);
nlohmann::json to_json(const VerificationReport &report);
nlohmann::json to_json(const PatternRun &run);

/// DOT rendering with the gadget labels; pending vertices drawn as boxes.
std::string to_dot(const GadgetSpec &spec);

}  // namespace hyperstate

#endif

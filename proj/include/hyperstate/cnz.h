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

#ifndef HYPERSTATE_CNZ_H
#define HYPERSTATE_CNZ_H

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "hyperstate/dense_state.h"
#include "hyperstate/hypergraph.h"

namespace hyperstate {

enum class GateKind { CCZ, CZ, Z, SWAP, H };

const char *to_string(GateKind kind);

struct Gate {
    GateKind kind = GateKind::H;
    std::vector<std::size_t> on;

    static Gate ccz(std::size_t a, std::size_t b, std::size_t c);
    static Gate cz(std::size_t a, std::size_t b);
    static Gate z(std::size_t a);
    static Gate swap(std::size_t a, std::size_t b);
    static Gate h(std::size_t a);

    /// e.g. "CCZ(0,1,6)".
    std::string str() const;
    friend bool operator==(const Gate &, const Gate &) = default;
};

/// Gate list over {CCZ, CZ, Z, SWAP, H}. `layers`, when nonempty, groups
/// the same gates into sets of disjoint support, and `gates` is their
/// concatenation.
struct LogicalCircuit {
    std::size_t num_qubits = 0;
    std::vector<std::size_t> ancillas;
    std::vector<Gate> gates;
    std::vector<std::vector<Gate>> layers;

    /// Throws InvalidArgument on out-of-range or repeated gate qubits,
    /// wrong arity, overlapping supports inside a layer, or layers that do
    /// not flatten to `gates`.
    void validate() const;
    std::size_t count(GateKind kind) const;
    bool layered() const {
        return !layers.empty();
    }
};

/// Largest supported recursion level for circuit construction.
inline constexpr std::size_t kMaxCircuitLevel = 12;
/// Largest supported level for resource counting.
inline constexpr std::size_t kMaxResourceLevel = 10;

/// C^N Z on N = 3 * 2^r logical qubits 0..N-1 with ancillas N..2N-4, written
/// in nested order: each wrapper CCZ followed by its ancilla's H, the inner
/// block, then the mirror image. Throws InvalidArgument for r out of range.
LogicalCircuit build_cnz(std::size_t r);

/// As-soon-as-possible packing: every gate lands one layer after the last
/// gate sharing a qubit with it. Only disjoint gates are reordered.
LogicalCircuit layerize(const LogicalCircuit &c);

/// Number of layers containing an H. Unlayered circuits are layerized first.
std::size_t hadamard_depth(const LogicalCircuit &c);

struct RoutedCircuit {
    LogicalCircuit circuit;
    std::size_t swaps = 0;
};

/// Inserts adjacent-transposition SWAP chains on the line 0..n-1 so that
/// every CCZ and CZ acts on neighbours, undoing each chain afterwards.
RoutedCircuit route_nearest_neighbor(const LogicalCircuit &c);

/// Applies the gates in order to a dense state over c.num_qubits qubits.
void apply_circuit(DenseState &s, const LogicalCircuit &c);

struct ResourceReport {
    std::size_t r = 0;
    std::int64_t N = 0;
    std::int64_t k_ccz = 0;
    std::int64_t k_swap = 0;
    std::int64_t hadamard_count = 0;
    std::int64_t ancilla_count = 0;
    std::int64_t hadamard_depth = 0;
    std::int64_t cz_physical = 0;
    std::int64_t qubits_physical = 0;
    std::int64_t qubits_cluster_variant = 0;
    boost::multiprecision::cpp_int qubits_standard_cluster;
};

/// Counts from the closed forms. Throws InvalidArgument for r out of range
/// and std::logic_error if any integrality or cross-form identity fails.
ResourceReport resources(std::size_t r);
/// sum_{k=1}^r (3 * 2^k)(3 * 2^k - 2).
std::int64_t k_swap_sum(std::size_t r);
/// r with N = 3 * 2^r, or InvalidArgument.
std::size_t level_for(std::int64_t N);

struct IdentityCheck {
    bool holds = false;
    double max_deviation = 0;
    /// (e1 u e2) \ {i}.
    Edge product;
};

/// Dense check of C_{e1} H_i C_{e2} H_i C_{e1} |+>_i |psi> =
/// |+>_i C_{(e1 u e2) \ {i}} |psi> on `trials` random states.
IdentityCheck verify_identity(Edge e1, Edge e2, Vertex i, std::size_t n, std::size_t trials, std::uint64_t seed,
                              std::size_t cap = kDefaultOracleCap);

struct CircuitCheck {
    bool holds = false;
    double max_deviation = 0;
    std::size_t trials = 0;
};

/// Dense check that `c` acts as C^N Z on logical qubits 0..N-1 with every
/// ancilla returned to |+>, over random logical inputs.
CircuitCheck verify_cnz_circuit(const LogicalCircuit &c, std::size_t N, std::size_t trials, std::uint64_t seed,
                                std::size_t cap = kDefaultOracleCap, std::size_t threads = 0);
CircuitCheck verify_cnz(std::size_t r, std::size_t trials = 10, std::uint64_t seed = 1,
                        std::size_t cap = kDefaultOracleCap, std::size_t threads = 0);

/// Both circuits give the same state on `trials` random inputs (no phase
/// freedom).
CircuitCheck circuits_equivalent(const LogicalCircuit &a, const LogicalCircuit &b, std::size_t trials,
                                 std::uint64_t seed, std::size_t cap = kDefaultOracleCap);

nlohmann::json to_json(const LogicalCircuit &c);
LogicalCircuit circuit_from_json(const nlohmann::json &j);
nlohmann::json to_json(const ResourceReport &r);
/// One record node per layer, chained left to right.
std::string to_dot(const LogicalCircuit &c);

}  // namespace hyperstate

#endif

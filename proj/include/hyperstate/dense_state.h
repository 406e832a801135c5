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

#ifndef HYPERSTATE_DENSE_STATE_H
#define HYPERSTATE_DENSE_STATE_H

#include <complex>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "hyperstate/hypergraph.h"

namespace hyperstate {

class Rng;

inline constexpr std::size_t kDefaultOracleCap = 22;
inline constexpr std::size_t kHardOracleCeiling = 26;
inline constexpr double kAmplitudeTolerance = 1e-10;
inline constexpr double kProbabilityTolerance = 1e-12;

/// Reads HYPERSTATE_ORACLE_CAP, falling back to kDefaultOracleCap. Throws
/// InvalidArgument for values that do not parse or exceed kHardOracleCeiling.
std::size_t oracle_cap_from_env();

enum class Basis { X, Z };

/// Exact state vector over n qubits. Qubit v is bit v of the basis index, so
/// amplitude k belongs to |x_{n-1} ... x_1 x_0> with x_v = (k >> v) & 1.
class DenseState {
   public:
    using Amplitude = std::complex<double>;

    DenseState() = default;
    /// |0...0> on n qubits. Throws CapExceeded when n > cap.
    explicit DenseState(std::size_t num_qubits, std::size_t cap = kDefaultOracleCap);
    static DenseState plus(std::size_t num_qubits, std::size_t cap = kDefaultOracleCap);
    static DenseState from_amplitudes(std::vector<Amplitude> amplitudes);
    /// Haar-ish random state: i.i.d. complex Gaussian amplitudes, normalized.
    static DenseState random(std::size_t num_qubits, Rng &rng, std::size_t cap = kDefaultOracleCap);

    std::size_t num_qubits() const {
        return n_;
    }
    std::size_t dimension() const {
        return amps_.size();
    }
    std::span<const Amplitude> amplitudes() const {
        return amps_;
    }
    Amplitude operator[](std::size_t k) const {
        return amps_[k];
    }
    Amplitude &operator[](std::size_t k) {
        return amps_[k];
    }

    double norm_squared() const;
    void normalize();

    /// Generalized CZ: negates every amplitude whose index has all bits of e
    /// set. The empty edge negates everything (a global -1).
    DenseState &apply_ce(Edge e);
    /// Multiplies the all-ones component of e by `phase` (C_e^t for phase
    /// e^{i pi t}).
    DenseState &apply_ce_phase(Edge e, Amplitude phase);
    DenseState &apply_h(Vertex v);
    DenseState &apply_x(Vertex v);
    DenseState &apply_z(Vertex v);
    /// sqrt(X) with eigenvalue 1 on |+> and i on |->.
    DenseState &apply_sqrt_x(Vertex v);
    DenseState &apply_swap(Vertex a, Vertex b);
    /// NOT on `target` controlled on every qubit of `controls`.
    DenseState &apply_mcx(Edge controls, Vertex target);

    /// Little-endian (re, im) double pairs in index order.
    void write_binary(std::ostream &out) const;
    static DenseState read_binary(std::istream &in, std::size_t num_qubits);

   private:
    void check_qubit(Vertex v) const;

    std::size_t n_ = 0;
    std::vector<Amplitude> amps_;
};

DenseState apply_ce(DenseState s, Edge e);
DenseState apply_h(DenseState s, Vertex v);
DenseState apply_x(DenseState s, Vertex v);
DenseState apply_z(DenseState s, Vertex v);

/// prod_e C_e |+>^n followed by a Hadamard on each listed vertex.
DenseState build(const Hypergraph &h, std::span<const Vertex> pending_hadamards = {},
                 std::size_t cap = kDefaultOracleCap);

struct MeasureResult {
    double probability = 0;
    /// Renormalized post-measurement state with the measured qubit removed;
    /// empty when the outcome has probability below kProbabilityTolerance.
    std::optional<DenseState> state;
};

/// Projective measurement of qubit v. outcome 0 means |0> (Z) or |+> (X),
/// outcome 1 means |1> or |->. Higher qubits shift down by one.
MeasureResult measure(const DenseState &s, Vertex v, Basis basis, int outcome);
/// As measure(), but throws ZeroProbabilityOutcome for impossible outcomes.
DenseState project(const DenseState &s, Vertex v, Basis basis, int outcome);

struct PhaseComparison {
    bool equal = false;
    double max_deviation = 0;
    /// e^{i theta} with a ~= phase * b.
    std::complex<double> phase{1, 0};
};

/// Aligns phases on the largest-magnitude amplitude of `a`, then compares all
/// amplitudes. Throws InvalidArgument on dimension mismatch.
PhaseComparison compare_up_to_phase(const DenseState &a, const DenseState &b,
                                    double tolerance = kAmplitudeTolerance);
bool equal_up_to_phase(const DenseState &a, const DenseState &b, double tolerance = kAmplitudeTolerance);
/// max_k |a_k - b_k| with no phase freedom.
double max_abs_difference(const DenseState &a, const DenseState &b);

}  // namespace hyperstate

#endif

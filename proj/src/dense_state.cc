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

#include "hyperstate/dense_state.h"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <istream>
#include <ostream>

#include "hyperstate/errors.h"
#include "hyperstate/random.h"

namespace hyperstate {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_cap(std::size_t n, std::size_t cap) {
    if (n > cap) {
        throw CapExceeded(std::to_string(n) + " qubits exceed the oracle cap of " + std::to_string(cap));
    }
}

/// Inserts a zero bit at position v.
constexpr std::size_t spread(std::size_t y, Vertex v) {
    std::size_t low = y & ((std::size_t{1} << v) - 1);
    return low | ((y >> v) << (v + 1));
}

}  // namespace

std::size_t oracle_cap_from_env() {
    const char *raw = std::getenv("HYPERSTATE_ORACLE_CAP");
    if (raw == nullptr || *raw == '\0') {
        return kDefaultOracleCap;
    }
    char *end = nullptr;
    long value = std::strtol(raw, &end, 10);
    if (*end != '\0' || value < 0) {
        throw InvalidArgument(std::string("HYPERSTATE_ORACLE_CAP is not a count: ") + raw);
    }
    if (static_cast<std::size_t>(value) > kHardOracleCeiling) {
        throw InvalidArgument("HYPERSTATE_ORACLE_CAP exceeds the hard ceiling of " +
                              std::to_string(kHardOracleCeiling));
    }
    return static_cast<std::size_t>(value);
}

DenseState::DenseState(std::size_t num_qubits, std::size_t cap) : n_(num_qubits) {
    check_cap(num_qubits, std::min(cap, kHardOracleCeiling));
    amps_.assign(std::size_t{1} << num_qubits, Amplitude{0, 0});
    amps_[0] = 1;
}

DenseState DenseState::plus(std::size_t num_qubits, std::size_t cap) {
    DenseState s(num_qubits, cap);
    double a = std::pow(2.0, -0.5 * static_cast<double>(num_qubits));
    for (auto &x : s.amps_) {
        x = a;
    }
    return s;
}

DenseState DenseState::from_amplitudes(std::vector<Amplitude> amplitudes) {
    if (amplitudes.empty() || !std::has_single_bit(amplitudes.size())) {
        throw InvalidArgument("amplitude count must be a power of two");
    }
    DenseState s;
    s.n_ = static_cast<std::size_t>(std::countr_zero(amplitudes.size()));
    check_cap(s.n_, kHardOracleCeiling);
    s.amps_ = std::move(amplitudes);
    return s;
}

DenseState DenseState::random(std::size_t num_qubits, Rng &rng, std::size_t cap) {
    DenseState s(num_qubits, cap);
    for (auto &x : s.amps_) {
        x = Amplitude(rng.normal(), rng.normal());
    }
    s.normalize();
    return s;
}

double DenseState::norm_squared() const {
    double total = 0;
    for (const auto &x : amps_) {
        total += std::norm(x);
    }
    return total;
}

void DenseState::normalize() {
    double norm = std::sqrt(norm_squared());
    if (norm == 0) {
        throw ZeroProbabilityOutcome("cannot normalize the zero vector");
    }
    for (auto &x : amps_) {
        x /= norm;
    }
}

void DenseState::check_qubit(Vertex v) const {
    if (v >= n_) {
        throw InvalidArgument("qubit " + std::to_string(v) + " out of range for " + std::to_string(n_) +
                              " qubits");
    }
}

DenseState &DenseState::apply_ce(Edge e) {
    return apply_ce_phase(e, Amplitude{-1, 0});
}

DenseState &DenseState::apply_ce_phase(Edge e, Amplitude phase) {
    if (e.span_end() > n_) {
        throw InvalidArgument("edge " + e.str() + " out of range");
    }
    const std::size_t mask = static_cast<std::size_t>(e.bits);
    for (std::size_t k = 0; k < amps_.size(); ++k) {
        if ((k & mask) == mask) {
            amps_[k] *= phase;
        }
    }
    return *this;
}

DenseState &DenseState::apply_h(Vertex v) {
    check_qubit(v);
    const std::size_t bit = std::size_t{1} << v;
    for (std::size_t y = 0; y < amps_.size() / 2; ++y) {
        std::size_t k0 = spread(y, v);
        std::size_t k1 = k0 | bit;
        Amplitude a = amps_[k0];
        Amplitude b = amps_[k1];
        amps_[k0] = (a + b) * kInvSqrt2;
        amps_[k1] = (a - b) * kInvSqrt2;
    }
    return *this;
}

DenseState &DenseState::apply_x(Vertex v) {
    check_qubit(v);
    const std::size_t bit = std::size_t{1} << v;
    for (std::size_t y = 0; y < amps_.size() / 2; ++y) {
        std::size_t k0 = spread(y, v);
        std::swap(amps_[k0], amps_[k0 | bit]);
    }
    return *this;
}

DenseState &DenseState::apply_z(Vertex v) {
    check_qubit(v);
    return apply_ce(Edge::single(v));
}

DenseState &DenseState::apply_sqrt_x(Vertex v) {
    check_qubit(v);
    const std::size_t bit = std::size_t{1} << v;
    const Amplitude p(0.5, 0.5);
    const Amplitude m(0.5, -0.5);
    for (std::size_t y = 0; y < amps_.size() / 2; ++y) {
        std::size_t k0 = spread(y, v);
        std::size_t k1 = k0 | bit;
        Amplitude a = amps_[k0];
        Amplitude b = amps_[k1];
        amps_[k0] = p * a + m * b;
        amps_[k1] = m * a + p * b;
    }
    return *this;
}

DenseState &DenseState::apply_swap(Vertex a, Vertex b) {
    check_qubit(a);
    check_qubit(b);
    if (a == b) {
        return *this;
    }
    const std::size_t ba = std::size_t{1} << a;
    const std::size_t bb = std::size_t{1} << b;
    for (std::size_t k = 0; k < amps_.size(); ++k) {
        if ((k & ba) != 0 && (k & bb) == 0) {
            std::swap(amps_[k], amps_[(k & ~ba) | bb]);
        }
    }
    return *this;
}

DenseState &DenseState::apply_mcx(Edge controls, Vertex target) {
    check_qubit(target);
    if (controls.span_end() > n_ || controls.contains(target)) {
        throw InvalidArgument("invalid controls " + controls.str() + " for target " + std::to_string(target));
    }
    const std::size_t mask = static_cast<std::size_t>(controls.bits);
    const std::size_t bit = std::size_t{1} << target;
    for (std::size_t y = 0; y < amps_.size() / 2; ++y) {
        std::size_t k0 = spread(y, target);
        if ((k0 & mask) == mask) {
            std::swap(amps_[k0], amps_[k0 | bit]);
        }
    }
    return *this;
}

void DenseState::write_binary(std::ostream &out) const {
    static_assert(std::endian::native == std::endian::little, "binary dump assumes a little-endian host");
    for (const auto &x : amps_) {
        double pair[2] = {x.real(), x.imag()};
        out.write(reinterpret_cast<const char *>(pair), sizeof(pair));
    }
}

DenseState DenseState::read_binary(std::istream &in, std::size_t num_qubits) {
    DenseState s(num_qubits, kHardOracleCeiling);
    for (auto &x : s.amps_) {
        double pair[2];
        if (!in.read(reinterpret_cast<char *>(pair), sizeof(pair))) {
            throw ParseError("truncated amplitude dump");
        }
        x = Amplitude(pair[0], pair[1]);
    }
    return s;
}

DenseState apply_ce(DenseState s, Edge e) {
    s.apply_ce(e);
    return s;
}

DenseState apply_h(DenseState s, Vertex v) {
    s.apply_h(v);
    return s;
}

DenseState apply_x(DenseState s, Vertex v) {
    s.apply_x(v);
    return s;
}

DenseState apply_z(DenseState s, Vertex v) {
    s.apply_z(v);
    return s;
}

DenseState build(const Hypergraph &h, std::span<const Vertex> pending_hadamards, std::size_t cap) {
    DenseState s = DenseState::plus(h.num_vertices(), cap);
    const auto &edges = h.edges();
    for (std::size_t k = 0; k < s.dimension(); ++k) {
        unsigned parity = 0;
        for (Edge e : edges) {
            parity ^= (k & e.bits) == e.bits ? 1U : 0U;
        }
        if (parity != 0) {
            s[k] = -s[k];
        }
    }
    for (Vertex v : pending_hadamards) {
        s.apply_h(v);
    }
    return s;
}

MeasureResult measure(const DenseState &s, Vertex v, Basis basis, int outcome) {
    if (v >= s.num_qubits()) {
        throw InvalidArgument("qubit " + std::to_string(v) + " out of range");
    }
    if (outcome != 0 && outcome != 1) {
        throw InvalidArgument("outcome must be 0 or 1");
    }
    const std::size_t bit = std::size_t{1} << v;
    std::vector<DenseState::Amplitude> out(s.dimension() / 2);
    double prob = 0;
    for (std::size_t y = 0; y < out.size(); ++y) {
        std::size_t k0 = spread(y, v);
        DenseState::Amplitude a;
        if (basis == Basis::Z) {
            a = s[outcome == 0 ? k0 : (k0 | bit)];
        } else {
            a = (outcome == 0 ? s[k0] + s[k0 | bit] : s[k0] - s[k0 | bit]) * kInvSqrt2;
        }
        out[y] = a;
        prob += std::norm(a);
    }
    MeasureResult result;
    result.probability = prob;
    if (prob >= kProbabilityTolerance) {
        DenseState post = DenseState::from_amplitudes(std::move(out));
        post.normalize();
        result.state = std::move(post);
    }
    return result;
}

DenseState project(const DenseState &s, Vertex v, Basis basis, int outcome) {
    MeasureResult r = measure(s, v, basis, outcome);
    if (!r.state) {
        throw ZeroProbabilityOutcome("outcome " + std::to_string(outcome) + " on qubit " + std::to_string(v) +
                                     " has probability " + std::to_string(r.probability));
    }
    return std::move(*r.state);
}

PhaseComparison compare_up_to_phase(const DenseState &a, const DenseState &b, double tolerance) {
    if (a.dimension() != b.dimension()) {
        throw InvalidArgument("dimension mismatch: " + std::to_string(a.num_qubits()) + " vs " +
                              std::to_string(b.num_qubits()) + " qubits");
    }
    std::size_t best = 0;
    for (std::size_t k = 1; k < a.dimension(); ++k) {
        if (std::abs(a[k]) > std::abs(a[best])) {
            best = k;
        }
    }
    PhaseComparison out;
    if (std::abs(b[best]) > 0) {
        auto ratio = a[best] / b[best];
        out.phase = ratio / std::abs(ratio);
    }
    double worst = 0;
    for (std::size_t k = 0; k < a.dimension(); ++k) {
        worst = std::max(worst, std::abs(a[k] - out.phase * b[k]));
    }
    out.max_deviation = worst;
    out.equal = worst < tolerance;
    return out;
}

bool equal_up_to_phase(const DenseState &a, const DenseState &b, double tolerance) {
    return compare_up_to_phase(a, b, tolerance).equal;
}

double max_abs_difference(const DenseState &a, const DenseState &b) {
    if (a.dimension() != b.dimension()) {
        throw InvalidArgument("dimension mismatch");
    }
    double worst = 0;
    for (std::size_t k = 0; k < a.dimension(); ++k) {
        worst = std::max(worst, std::abs(a[k] - b[k]));
    }
    return worst;
}

}  // namespace hyperstate

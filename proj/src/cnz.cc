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

#include "hyperstate/cnz.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hyperstate/errors.h"
#include "hyperstate/random.h"

namespace hyperstate {

namespace {

std::size_t arity(GateKind kind) {
    switch (kind) {
        case GateKind::CCZ:
            return 3;
        case GateKind::CZ:
        case GateKind::SWAP:
            return 2;
        default:
            return 1;
    }
}

GateKind kind_from_name(const std::string &s) {
    for (GateKind k : {GateKind::CCZ, GateKind::CZ, GateKind::Z, GateKind::SWAP, GateKind::H}) {
        if (s == to_string(k)) {
            return k;
        }
    }
    throw ParseError("unknown gate '" + s + "'");
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void check_level(std::size_t r, std::size_t max) {
    if (r < 1 || r > max) {
        throw InvalidArgument("level r must be in 1.." + std::to_string(max) + ", got " + std::to_string(r));
    }
}

void emit_cnz(const std::vector<std::size_t> &targets, std::size_t &next_free, std::vector<std::size_t> &ancillas,
              std::vector<Gate> &out) {
    if (targets.size() == 3) {
        out.push_back(Gate::ccz(targets[0], targets[1], targets[2]));
        return;
    }
    const std::size_t m = targets.size() / 2;
    std::vector<std::size_t> anc(m);
    for (std::size_t j = 0; j < m; ++j) {
        anc[j] = next_free++;
        ancillas.push_back(anc[j]);
    }
    for (std::size_t j = 0; j < m; ++j) {
        out.push_back(Gate::ccz(anc[j], targets[2 * j], targets[2 * j + 1]));
        out.push_back(Gate::h(anc[j]));
    }
    emit_cnz(anc, next_free, ancillas, out);
    for (std::size_t j = m; j-- > 0;) {
        out.push_back(Gate::h(anc[j]));
        out.push_back(Gate::ccz(anc[j], targets[2 * j], targets[2 * j + 1]));
    }
}

/// Runs `body(trial)` for every trial on a small worker pool.
template <class Body>
void for_trials(std::size_t trials, std::size_t threads, Body &&body) {
    std::atomic<std::size_t> next{0};
    std::size_t workers = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
    workers = std::max<std::size_t>(1, std::min(workers, trials));
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < trials; i = next++) {
                body(i);
            }
        });
    }
}

}  // namespace

const char *to_string(GateKind kind) {
    switch (kind) {
        case GateKind::CCZ:
            return "CCZ";
        case GateKind::CZ:
            return "CZ";
        case GateKind::Z:
            return "Z";
        case GateKind::SWAP:
            return "SWAP";
        case GateKind::H:
            return "H";
    }
    return "?";
}

Gate Gate::ccz(std::size_t a, std::size_t b, std::size_t c) {
    return Gate{GateKind::CCZ, {a, b, c}};
}
Gate Gate::cz(std::size_t a, std::size_t b) {
    return Gate{GateKind::CZ, {a, b}};
}
Gate Gate::z(std::size_t a) {
    return Gate{GateKind::Z, {a}};
}
Gate Gate::swap(std::size_t a, std::size_t b) {
    return Gate{GateKind::SWAP, {a, b}};
}
Gate Gate::h(std::size_t a) {
    return Gate{GateKind::H, {a}};
}

std::string Gate::str() const {
    std::string out = std::string(to_string(kind)) + "(";
    for (std::size_t i = 0; i < on.size(); ++i) {
        out += (i ? "," : "") + std::to_string(on[i]);
    }
    return out + ")";
}

void LogicalCircuit::validate() const {
    auto check_gate = [&](const Gate &g) {
        if (g.on.size() != arity(g.kind)) {
            throw InvalidArgument(g.str() + " has the wrong number of qubits");
        }
        for (std::size_t i = 0; i < g.on.size(); ++i) {
            if (g.on[i] >= num_qubits) {
                throw InvalidArgument(g.str() + " acts outside " + std::to_string(num_qubits) + " qubits");
            }
            for (std::size_t j = 0; j < i; ++j) {
                if (g.on[i] == g.on[j]) {
                    throw InvalidArgument(g.str() + " repeats a qubit");
                }
            }
        }
    };
    for (const Gate &g : gates) {
        check_gate(g);
    }
    for (std::size_t a : ancillas) {
        if (a >= num_qubits) {
            throw InvalidArgument("ancilla out of range");
        }
    }
    if (layers.empty()) {
        return;
    }
    std::size_t k = 0;
    for (const auto &layer : layers) {
        std::vector<bool> used(num_qubits, false);
        for (const Gate &g : layer) {
            check_gate(g);
            for (std::size_t q : g.on) {
                if (used[q]) {
                    throw InvalidArgument("gates in one layer overlap on qubit " + std::to_string(q));
                }
                used[q] = true;
            }
            if (k >= gates.size() || !(gates[k] == g)) {
                throw InvalidArgument("layers do not flatten to the gate list");
            }
            ++k;
        }
    }
    if (k != gates.size()) {
        throw InvalidArgument("layers do not flatten to the gate list");
    }
}

std::size_t LogicalCircuit::count(GateKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(gates.begin(), gates.end(), [&](const Gate &g) { return g.kind == kind; }));
}

LogicalCircuit build_cnz(std::size_t r) {
    check_level(r, kMaxCircuitLevel);
    const std::size_t N = std::size_t{3} << r;
    LogicalCircuit c;
    c.num_qubits = 2 * N - 3;
    std::vector<std::size_t> logical(N);
    for (std::size_t q = 0; q < N; ++q) {
        logical[q] = q;
    }
    std::size_t next_free = N;
    emit_cnz(logical, next_free, c.ancillas, c.gates);
    return c;
}

LogicalCircuit layerize(const LogicalCircuit &c) {
    c.validate();
    std::vector<std::size_t> depth(c.num_qubits, 0);
    LogicalCircuit out;
    out.num_qubits = c.num_qubits;
    out.ancillas = c.ancillas;
    for (const Gate &g : c.gates) {
        std::size_t level = 0;
        for (std::size_t q : g.on) {
            level = std::max(level, depth[q]);
        }
        if (out.layers.size() <= level) {
            out.layers.resize(level + 1);
        }
        out.layers[level].push_back(g);
        for (std::size_t q : g.on) {
            depth[q] = level + 1;
        }
    }
    for (const auto &layer : out.layers) {
        out.gates.insert(out.gates.end(), layer.begin(), layer.end());
    }
    return out;
}

std::size_t hadamard_depth(const LogicalCircuit &c) {
    const LogicalCircuit layered = c.layered() ? c : layerize(c);
    return static_cast<std::size_t>(std::count_if(layered.layers.begin(), layered.layers.end(), [](const auto &layer) {
        return std::any_of(layer.begin(), layer.end(), [](const Gate &g) { return g.kind == GateKind::H; });
    }));
}

RoutedCircuit route_nearest_neighbor(const LogicalCircuit &c) {
    c.validate();
    RoutedCircuit out;
    out.circuit.num_qubits = c.num_qubits;
    out.circuit.ancillas = c.ancillas;
    std::vector<Gate> &gates = out.circuit.gates;
    for (const Gate &g : c.gates) {
        if (g.kind != GateKind::CCZ && g.kind != GateKind::CZ) {
            gates.push_back(g);
            continue;
        }
        std::vector<std::size_t> q = g.on;
        std::sort(q.begin(), q.end());
        std::vector<Gate> chain;
        // The lowest qubit walks up to sit just below the second one.
        for (std::size_t k = q[0]; k + 1 < q[1]; ++k) {
            chain.push_back(Gate::swap(k, k + 1));
        }
        if (q.size() == 3) {
            for (std::size_t k = q[2]; k > q[1] + 1; --k) {
                chain.push_back(Gate::swap(k - 1, k));
            }
        }
        gates.insert(gates.end(), chain.begin(), chain.end());
        if (q.size() == 3) {
            gates.push_back(Gate::ccz(q[1] - 1, q[1], q[1] + 1));
        } else {
            gates.push_back(Gate::cz(q[1] - 1, q[1]));
        }
        gates.insert(gates.end(), chain.rbegin(), chain.rend());
        out.swaps += 2 * chain.size();
    }
    return out;
}

void apply_circuit(DenseState &s, const LogicalCircuit &c) {
    if (s.num_qubits() != c.num_qubits) {
        throw InvalidArgument("state has " + std::to_string(s.num_qubits()) + " qubits, circuit " +
                              std::to_string(c.num_qubits));
    }
    for (const Gate &g : c.gates) {
        switch (g.kind) {
            case GateKind::CCZ:
            case GateKind::CZ:
                s.apply_ce(Edge::of(g.on));
                break;
            case GateKind::Z:
                s.apply_z(g.on[0]);
                break;
            case GateKind::SWAP:
                s.apply_swap(g.on[0], g.on[1]);
                break;
            case GateKind::H:
                s.apply_h(g.on[0]);
                break;
        }
    }
}

std::int64_t k_swap_sum(std::size_t r) {
    std::int64_t total = 0;
    for (std::size_t k = 1; k <= r; ++k) {
        const std::int64_t m = std::int64_t{3} << k;
        total += m * (m - 2);
    }
    return total;
}

std::size_t level_for(std::int64_t N) {
    if (N >= 6 && N % 3 == 0) {
        const std::uint64_t q = static_cast<std::uint64_t>(N / 3);
        if (std::has_single_bit(q)) {
            return static_cast<std::size_t>(std::countr_zero(q));
        }
    }
    throw InvalidArgument("N must be 3 * 2^r with r >= 1, got " + std::to_string(N));
}

ResourceReport resources(std::size_t r) {
    check_level(r, kMaxResourceLevel);
    ResourceReport rep;
    const std::int64_t N = std::int64_t{3} << r;
    rep.r = r;
    rep.N = N;
    rep.k_ccz = 2 * N - 5;
    rep.k_swap = 4 * N * (N / 3 - 1);
    rep.hadamard_count = 2 * N - 6;
    rep.ancilla_count = N - 3;
    rep.hadamard_depth = static_cast<std::int64_t>(2 * r);
    rep.cz_physical = 3 * rep.k_ccz + 9 * rep.k_swap;
    rep.qubits_physical = 6 * rep.k_ccz + 8 * rep.k_swap;
    rep.qubits_cluster_variant = 8 * (rep.k_ccz + rep.k_swap);
    rep.qubits_standard_cluster = (boost::multiprecision::cpp_int(1) << static_cast<unsigned>(N)) - 1;

    auto require = [](bool ok, const char *what) {
        if (!ok) {
            throw std::logic_error(std::string("resource identity failed: ") + what);
        }
    };
    require(rep.k_swap == k_swap_sum(r), "K_SWAP closed form");
    require(rep.cz_physical == 12 * N * N - 30 * N - 15, "cz_physical");
    require(3 * rep.qubits_physical == 32 * N * N - 60 * N - 90, "qubits_physical");
    require(3 * rep.qubits_cluster_variant == 32 * N * N - 48 * N - 120, "qubits_cluster_variant");
    require(rep.hadamard_count == 2 * rep.ancilla_count, "hadamard_count");
    return rep;
}

IdentityCheck verify_identity(Edge e1, Edge e2, Vertex i, std::size_t n, std::size_t trials, std::uint64_t seed,
                              std::size_t cap) {
    if (n == 0 || n > kMaxVertices) {
        throw InvalidArgument("qubit count out of range");
    }
    if (n > cap) {
        throw CapExceeded(std::to_string(n) + " qubits exceed the oracle cap of " + std::to_string(cap));
    }
    if (!e1.contains(i) || !e2.contains(i)) {
        throw InvalidArgument("vertex " + std::to_string(i) + " must lie in both edges");
    }
    if (e1.span_end() > n || e2.span_end() > n) {
        throw InvalidArgument("edge outside the register");
    }
    IdentityCheck out;
    out.product = Edge((e1 | e2).bits & ~(std::uint64_t{1} << i));
    Rng rng(seed);
    const double root_half = 1 / std::sqrt(2.0);
    for (std::size_t t = 0; t < trials; ++t) {
        DenseState psi = n > 1 ? DenseState::random(n - 1, rng, cap) : DenseState::plus(0, cap);
        std::vector<DenseState::Amplitude> amps(std::size_t{1} << n);
        const std::uint64_t low = (std::uint64_t{1} << i) - 1;
        for (std::size_t x = 0; x < amps.size(); ++x) {
            amps[x] = psi[(x & low) | ((x >> (i + 1)) << i)] * root_half;
        }
        DenseState input = DenseState::from_amplitudes(amps);
        DenseState lhs = input;
        lhs.apply_ce(e1).apply_h(i).apply_ce(e2).apply_h(i).apply_ce(e1);
        DenseState rhs = input;
        rhs.apply_ce(out.product);
        out.max_deviation = std::max(out.max_deviation, max_abs_difference(lhs, rhs));
    }
    out.holds = out.max_deviation < 1e-10;
    return out;
}

CircuitCheck verify_cnz_circuit(const LogicalCircuit &c, std::size_t N, std::size_t trials, std::uint64_t seed,
                                std::size_t cap, std::size_t threads) {
    c.validate();
    const std::size_t Q = c.num_qubits;
    if (Q > cap) {
        throw CapExceeded(std::to_string(Q) + " qubits exceed the oracle cap of " + std::to_string(cap));
    }
    std::vector<bool> is_ancilla(Q, false);
    for (std::size_t a : c.ancillas) {
        is_ancilla[a] = true;
    }
    std::vector<std::size_t> logical;
    for (std::size_t q = 0; q < Q; ++q) {
        if (!is_ancilla[q]) {
            logical.push_back(q);
        }
    }
    if (logical.size() != N) {
        throw InvalidArgument("circuit has " + std::to_string(logical.size()) + " logical qubits, expected " +
                              std::to_string(N));
    }
    const double ancilla_amp = std::pow(2.0, -0.5 * static_cast<double>(Q - N));
    std::vector<double> deviation(trials, 0);
    for_trials(trials, threads, [&](std::size_t t) {
        Rng rng(mix_seed(seed, t));
        DenseState psi = DenseState::random(N, rng, cap);
        std::vector<DenseState::Amplitude> in(std::size_t{1} << Q);
        for (std::size_t x = 0; x < in.size(); ++x) {
            std::size_t k = 0;
            for (std::size_t b = 0; b < N; ++b) {
                k |= ((x >> logical[b]) & 1) << b;
            }
            in[x] = psi[k] * ancilla_amp;
        }
        DenseState expected = DenseState::from_amplitudes(in);
        DenseState state = expected;
        Edge all;
        for (std::size_t q : logical) {
            all = all.with(q);
        }
        expected.apply_ce(all);
        apply_circuit(state, c);
        deviation[t] = max_abs_difference(state, expected);
    });
    CircuitCheck out;
    out.trials = trials;
    for (double d : deviation) {
        out.max_deviation = std::max(out.max_deviation, d);
    }
    out.holds = out.max_deviation < 1e-10;
    return out;
}

CircuitCheck verify_cnz(std::size_t r, std::size_t trials, std::uint64_t seed, std::size_t cap, std::size_t threads) {
    return verify_cnz_circuit(build_cnz(r), std::size_t{3} << r, trials, seed, cap, threads);
}

CircuitCheck circuits_equivalent(const LogicalCircuit &a, const LogicalCircuit &b, std::size_t trials,
                                 std::uint64_t seed, std::size_t cap) {
    if (a.num_qubits != b.num_qubits) {
        throw InvalidArgument("circuits act on different registers");
    }
    CircuitCheck out;
    out.trials = trials;
    Rng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        DenseState s = DenseState::random(a.num_qubits, rng, cap);
        DenseState sa = s;
        DenseState sb = s;
        apply_circuit(sa, a);
        apply_circuit(sb, b);
        out.max_deviation = std::max(out.max_deviation, max_abs_difference(sa, sb));
    }
    out.holds = out.max_deviation < 1e-10;
    return out;
}

nlohmann::json to_json(const LogicalCircuit &c) {
    auto gate_json = [](const Gate &g) { return nlohmann::json{{"gate", to_string(g.kind)}, {"on", g.on}}; };
    nlohmann::json layers = nlohmann::json::array();
    if (c.layered()) {
        for (const auto &layer : c.layers) {
            nlohmann::json l = nlohmann::json::array();
            for (const Gate &g : layer) {
                l.push_back(gate_json(g));
            }
            layers.push_back(l);
        }
    } else {
        for (const Gate &g : c.gates) {
            layers.push_back(nlohmann::json::array({gate_json(g)}));
        }
    }
    return nlohmann::json{{"qubits", c.num_qubits}, {"ancillas", c.ancillas}, {"layers", layers}};
}

LogicalCircuit circuit_from_json(const nlohmann::json &j) {
    LogicalCircuit c;
    try {
        c.num_qubits = j.at("qubits").get<std::size_t>();
        c.ancillas = j.at("ancillas").get<std::vector<std::size_t>>();
        for (const auto &layer : j.at("layers")) {
            std::vector<Gate> gates;
            for (const auto &g : layer) {
                gates.push_back(Gate{kind_from_name(g.at("gate").get<std::string>()),
                                     g.at("on").get<std::vector<std::size_t>>()});
            }
            c.gates.insert(c.gates.end(), gates.begin(), gates.end());
            c.layers.push_back(std::move(gates));
        }
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("malformed circuit: ") + e.what());
    }
    try {
        c.validate();
    } catch (const InvalidArgument &e) {
        throw ParseError(e.what());
    }
    return c;
}

nlohmann::json to_json(const ResourceReport &r) {
    nlohmann::json cluster;
    if (r.qubits_standard_cluster <= std::numeric_limits<std::int64_t>::max()) {
        cluster = static_cast<std::int64_t>(r.qubits_standard_cluster);
    } else {
        cluster = r.qubits_standard_cluster.str();
    }
    return nlohmann::json{{"schema", "hyperstate/1"},
                          {"N", r.N},
                          {"r", r.r},
                          {"K_CCZ", r.k_ccz},
                          {"K_SWAP", r.k_swap},
                          {"H", r.hadamard_count},
                          {"ancillas", r.ancilla_count},
                          {"hadamard_depth", r.hadamard_depth},
                          {"cz_physical", r.cz_physical},
                          {"qubits_physical", r.qubits_physical},
                          {"qubits_cluster_variant", r.qubits_cluster_variant},
                          {"standard_cluster", cluster}};
}

std::string to_dot(const LogicalCircuit &c) {
    const LogicalCircuit layered = c.layered() ? c : layerize(c);
    std::ostringstream out;
    out << "digraph circuit {\n  rankdir=LR;\n  node [shape=record];\n";
    for (std::size_t k = 0; k < layered.layers.size(); ++k) {
        out << "  L" << k << " [label=\"{layer " << k;
        for (const Gate &g : layered.layers[k]) {
            out << "|" << g.str();
        }
        out << "}\"];\n";
        if (k > 0) {
            out << "  L" << k - 1 << " -> L" << k << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace hyperstate

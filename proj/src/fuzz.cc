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

#include "hyperstate/fuzz.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <thread>

#include "hyperstate/certify.h"
#include "hyperstate/errors.h"
#include "hyperstate/random.h"
#include "hyperstate/rewrite.h"

namespace hyperstate {

namespace {

constexpr std::size_t kChecks = 5;
const char *const kCheckNames[kChecks] = {"measure_x", "measure_x_glc", "glc", "gcnot", "measure_z"};

struct CaseResult {
    std::array<int, kChecks> outcome{};  // 1 pass, -1 fail, 0 not run
    std::array<double, kChecks> deviation{};
    std::optional<FuzzFailure> failure;
};

Edge random_edge(Rng &rng, std::size_t n, std::size_t max_card, std::optional<Vertex> avoid) {
    std::size_t available = n - (avoid ? 1 : 0);
    std::size_t card = 1 + rng.below(std::min(max_card, available));
    Edge e;
    while (e.size() < card) {
        Vertex v = rng.below(n);
        if (!avoid || v != *avoid) {
            e = e.with(v);
        }
    }
    return e;
}

/// Re-inserts a vertex at position b, shifting indices >= b up by one.
Edge expand_in(Edge e, Vertex b) {
    std::uint64_t low = e.bits & ((std::uint64_t{1} << b) - 1);
    std::uint64_t high = (e.bits >> b) << (b + 1);
    return Edge(low | high);
}

void record(CaseResult &out, std::size_t check, std::uint64_t index, const Certificate &c) {
    out.deviation[check] = std::max(out.deviation[check], c.deviation);
    if (c.ok) {
        if (out.outcome[check] == 0) {
            out.outcome[check] = 1;
        }
        return;
    }
    out.outcome[check] = -1;
    if (!out.failure) {
        out.failure = FuzzFailure{index, kCheckNames[check], c.detail};
    }
}

CaseResult run_case(const FuzzConfig &config, std::uint64_t index) {
    CaseResult out;
    const std::size_t n = config.num_vertices;
    Rng rng(fuzz_case_seed(config.seed, index));
    try {
        XInstance inst = random_x_instance(n, rng);
        for (XOutcome o : {XOutcome::Plus, XOutcome::Minus}) {
            XRewriteResult r = measure_x(inst.graph, inst.measured, o);
            XRewriteResult checked = r;
            if (config.invert_minus_correction && r.outcome_class == XOutcome::Minus) {
                checked.post = toggle_edges(r.post, r.correction_edges);
            }
            record(out, 0, index, certify_measure_x(inst.graph, inst.measured, o, checked, config.cap));

            if (!config.cross_form) {
                continue;
            }
            XRewriteResult g = measure_x_glc(inst.graph, inst.measured, o);
            bool same = g.post == r.post && g.pivot == r.pivot && g.correction_edges == r.correction_edges &&
                        g.outcome_class == r.outcome_class;
            Certificate c = certify_measure_x(inst.graph, inst.measured, o, g, config.cap);
            if (!same) {
                EdgeSet diff = symmetric_difference(g.post.edges(), r.post.edges());
                c.ok = false;
                c.detail = "glc form differs from direct form by " + product_notation(diff) +
                           (c.deviation > kAmplitudeTolerance ? "; glc form fails the oracle" : "");
            }
            record(out, 1, index, c);
        }

        std::size_t distinct_edges = n + n * (n - 1) / 2 + n * (n - 1) * (n - 2) / 6;
        std::size_t edge_count = std::min(1 + rng.below(2 * n), distinct_edges);
        Hypergraph h = random_hypergraph(n, 3, edge_count, rng.next());
        Vertex a = rng.below(n);
        record(out, 2, index, certify_glc(h, a, glc(h, a), config.cap));

        Vertex target = rng.below(n);
        Edge controls = random_edge(rng, n, 3, target);
        record(out, 3, index, certify_gcnot(h, controls, target, gcnot(h, controls, target), config.cap));

        Vertex z = rng.below(n);
        for (int bit : {0, 1}) {
            record(out, 4, index, certify_measure_z(h, z, bit, measure_z(h, z, bit), config.cap));
        }
    } catch (const Error &e) {
        if (!out.failure) {
            out.failure = FuzzFailure{index, e.kind(), e.what()};
        }
        for (std::size_t c = 0; c < kChecks; ++c) {
            if (out.outcome[c] == 0 && (c != 1 || config.cross_form)) {
                out.outcome[c] = -1;
            }
        }
    }
    return out;
}

}  // namespace

std::uint64_t fuzz_case_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 finalizer over the combined key.
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

XInstance random_x_instance(std::size_t num_vertices, Rng &rng) {
    if (num_vertices < 2) {
        throw InvalidArgument("an X instance needs at least two vertices");
    }
    const std::size_t m = num_vertices - 1;
    const Vertex pivot = rng.below(m);

    std::vector<Edge> alpha;
    std::size_t alpha_count = rng.below(2 * m + 1);
    for (std::size_t i = 0; i < alpha_count; ++i) {
        alpha.push_back(random_edge(rng, m, 3, std::nullopt));
    }
    std::vector<Edge> tilde;
    if (m > 1) {
        std::size_t tilde_count = rng.below(m + 1);
        for (std::size_t i = 0; i < tilde_count; ++i) {
            tilde.push_back(random_edge(rng, m, 2, pivot));
        }
    }

    const Vertex b = rng.below(num_vertices);
    std::vector<Edge> edges;
    for (Edge e : alpha) {
        edges.push_back(expand_in(e, b));
    }
    const Vertex pivot_full = pivot >= b ? pivot + 1 : pivot;
    edges.push_back(Edge::of({pivot_full, b}));
    for (Edge t : tilde) {
        edges.push_back(expand_in(t, b).with(b));
    }
    if (rng.below(4) == 0) {
        edges.push_back(Edge::single(b));
    }
    // Parity collapse can only cancel repeated E~ members, never {pivot, b}.
    return XInstance{Hypergraph(num_vertices, edges), b, pivot_full};
}

FuzzSummary run_fuzz(const FuzzConfig &config) {
    if (config.num_vertices > config.cap) {
        throw CapExceeded(std::to_string(config.num_vertices) + " vertices exceed the oracle cap of " +
                          std::to_string(config.cap));
    }
    if (config.num_vertices < 2) {
        throw InvalidArgument("fuzzing needs at least two vertices");
    }
    std::vector<CaseResult> results(config.cases);
    std::atomic<std::size_t> next{0};
    std::size_t threads = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, std::max<std::size_t>(config.cases, 1));
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < config.cases; i = next++) {
                    results[i] = run_case(config, config.first_case + i);
                }
            });
        }
    }

    FuzzSummary summary;
    for (std::size_t c = 0; c < kChecks; ++c) {
        summary.checks.push_back(FuzzCheck{kCheckNames[c], 0, 0, 0});
    }
    for (const CaseResult &r : results) {
        for (std::size_t c = 0; c < kChecks; ++c) {
            if (r.outcome[c] > 0) {
                ++summary.checks[c].passed;
            } else if (r.outcome[c] < 0) {
                ++summary.checks[c].failed;
            }
            summary.checks[c].max_deviation = std::max(summary.checks[c].max_deviation, r.deviation[c]);
        }
        if (r.failure && !summary.first_failure) {
            summary.first_failure = r.failure;
        }
    }
    return summary;
}

nlohmann::json to_json(const FuzzSummary &summary) {
    nlohmann::json checks = nlohmann::json::array();
    for (const FuzzCheck &c : summary.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"failed", c.failed}, {"max_deviation", c.max_deviation}});
    }
    nlohmann::json out{{"schema", "hyperstate/1"}, {"checks", checks}, {"pass", summary.ok()}};
    if (summary.first_failure) {
        out["first_failure"] = {{"case", summary.first_failure->case_index},
                                {"check", summary.first_failure->check},
                                {"detail", summary.first_failure->detail}};
    }
    return out;
}

}  // namespace hyperstate

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

#ifndef HYPERSTATE_FUZZ_H
#define HYPERSTATE_FUZZ_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperstate/dense_state.h"
#include "hyperstate/hypergraph.h"

namespace hyperstate {

class Rng;

/// A hypergraph built to satisfy the X-measurement condition at `measured`:
/// adjacency(measured) = {{pivot}} u E~ with no member of E~ touching pivot.
struct XInstance {
    Hypergraph graph;
    Vertex measured = 0;
    Vertex pivot = 0;
};

/// Samples alpha edges on n-1 vertices, a pivot and E~ avoiding it, then
/// inserts the measured vertex at a random position. About one in four
/// instances also carries the singleton edge on the measured vertex.
XInstance random_x_instance(std::size_t num_vertices, Rng &rng);

/// Per-case seed; case i of a run is reproducible on its own.
std::uint64_t fuzz_case_seed(std::uint64_t seed, std::uint64_t index);

struct FuzzConfig {
    std::size_t cases = 1000;
    std::size_t num_vertices = 8;
    std::uint64_t seed = 1;
    std::uint64_t first_case = 0;
    std::size_t cap = kDefaultOracleCap;
    std::size_t threads = 0;  // 0: hardware concurrency
    /// Negative control: skip the minus-outcome correction before comparing.
    bool invert_minus_correction = false;
    /// Compare measure_x_glc with measure_x. The two forms disagree exactly
    /// on the edges shared by E~ and the alpha-adjacency of the pivot.
    bool cross_form = true;
};

struct FuzzCheck {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    double max_deviation = 0;
};

struct FuzzFailure {
    std::uint64_t case_index = 0;
    std::string check;
    std::string detail;
};

struct FuzzSummary {
    std::vector<FuzzCheck> checks;
    std::optional<FuzzFailure> first_failure;

    bool ok() const {
        return !first_failure.has_value();
    }
};

/// Runs measure_x (both outcomes), measure_x_glc agreement, glc, gcnot and
/// measure_z against the oracle on `cases` instances. Deterministic in
/// (seed, first_case, cases) regardless of the thread count.
FuzzSummary run_fuzz(const FuzzConfig &config);

nlohmann::json to_json(const FuzzSummary &summary);

}  // namespace hyperstate

#endif

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

#ifndef HYPERSTATE_RANDOM_H
#define HYPERSTATE_RANDOM_H

#include <cmath>
#include <cstdint>
#include <random>

namespace hyperstate {

/// Seeded generator with portable bounded sampling. std::mt19937_64 output is
/// fixed by the standard; the distributions are not, so they are avoided.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {
    }

    std::uint64_t next() {
        return engine_();
    }
    /// Uniform in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }
    /// Uniform in [0, 1).
    double unit() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }
    bool coin() {
        return (engine_() >> 63) != 0;
    }
    /// Standard normal via Box-Muller.
    double normal() {
        double u = 1.0 - unit();
        double v = unit();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586 * v);
    }

   private:
    std::mt19937_64 engine_;
};

}  // namespace hyperstate

#endif

// Copyright 2026 The TTM Authors
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

#ifndef TTM_RNG_H
#define TTM_RNG_H

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace ttm {

/// Seeded generator with draws that do not depend on the standard library's
/// distribution implementations, so output is identical across toolchains.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {
    }

    uint64_t next() {
        return engine_();
    }

    /// Uniform value in [0, bound). bound must be nonzero.
    uint64_t below(uint64_t bound) {
        uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        while (true) {
            uint64_t v = engine_();
            if (v < limit) {
                return v % bound;
            }
        }
    }

    /// Uniform value in [0, 1) with 53 bits of resolution.
    double unit() {
        return (double)(engine_() >> 11) * (1.0 / 9007199254740992.0);
    }

    template <typename T>
    void shuffle(std::vector<T> &items) {
        for (size_t i = items.size(); i > 1; i--) {
            size_t j = (size_t)below(i);
            std::swap(items[i - 1], items[j]);
        }
    }

   private:
    std::mt19937_64 engine_;
};

/// Mixes a base seed with a stream number (splitmix64 finalizer).
inline uint64_t derive_seed(uint64_t seed, uint64_t stream) {
    uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace ttm

#endif

// Copyright 2026 The Mirrorbench Authors
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

#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace mirrorbench {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seeded random stream. Draw methods are written out explicitly (instead of
/// using <random> distributions) so suites regenerate identically on any
/// standard library; mt19937_64 itself is fully specified by the standard.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {
    }

    /// Independent stream keyed by a master seed and a tuple of indices, e.g.
    /// (seed, width, depth, circuit index) or (seed, circuit, shot block).
    static Rng substream(uint64_t master, std::initializer_list<uint64_t> keys) {
        uint64_t h = splitmix64(master);
        for (uint64_t k : keys) {
            h = splitmix64(h ^ splitmix64(k + 0x632BE59BD9B4E019ULL));
        }
        return Rng(h);
    }

    uint64_t next() {
        return engine_();
    }

    /// Uniform integer in [0, n). n must be positive.
    uint64_t uniform_index(uint64_t n) {
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % n;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) {
        return uniform() < p;
    }

    std::mt19937_64 &engine() {
        return engine_;
    }

   private:
    std::mt19937_64 engine_;
};

}  // namespace mirrorbench

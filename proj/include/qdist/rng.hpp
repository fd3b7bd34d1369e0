/*
 * Copyright 2026 The qdist authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef QDIST_RNG_HPP
#define QDIST_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace qdist {

/// Seed plus sub-stream index. The same (seed, stream) reproduces the
/// identical sample sequence across runs and worker counts; batch sample i
/// uses stream = base_stream + i.
struct RngSpec {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;

    RngSpec sub(std::uint64_t i) const { return {seed, stream + i}; }
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace detail

/// Deterministic standard-normal stream (xoshiro-style state seeded from
/// (seed, stream) via splitmix64, Box-Muller transform). Value semantics,
/// no global state.
class GaussianStream {
public:
    explicit GaussianStream(RngSpec spec) {
        std::uint64_t s = spec.seed;
        const std::uint64_t a = detail::splitmix64(s);
        s ^= spec.stream * 0xD1342543DE82EF95ULL + 0x2545F4914F6CDD1DULL;
        const std::uint64_t b = detail::splitmix64(s);
        state_[0] = a;
        state_[1] = b ? b : 0x9E3779B97F4A7C15ULL;
    }

    /// One N(0, 1) sample.
    double next() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        // u1 in (0, 1], u2 in [0, 1)
        const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double phi = 2.0 * std::numbers::pi * u2;
        cached_ = r * std::sin(phi);
        has_cached_ = true;
        return r * std::cos(phi);
    }

    /// Complex with independent N(0, 1) real and imaginary parts.
    std::complex<double> next_complex() {
        const double re = next();
        const double im = next();
        return {re, im};
    }

    /// Uniform double in [0, 1).
    double next_uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

private:
    // xoroshiro128+
    std::uint64_t next_u64() {
        const std::uint64_t s0 = state_[0];
        std::uint64_t s1 = state_[1];
        const std::uint64_t result = s0 + s1;
        s1 ^= s0;
        state_[0] = ((s0 << 55) | (s0 >> 9)) ^ s1 ^ (s1 << 14);
        state_[1] = (s1 << 36) | (s1 >> 28);
        return result;
    }

    std::uint64_t state_[2] = {0, 0};
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace qdist

#endif  // QDIST_RNG_HPP

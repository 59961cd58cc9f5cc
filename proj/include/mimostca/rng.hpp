// SPDX-License-Identifier: Apache-2.0
//
// mimostca: planar-array radar simulator with adaptive monopulse processing
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MIMOSTCA_RNG_HPP
#define MIMOSTCA_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

#include "mimostca/types.hpp"

namespace mimostca {

/// Name recorded in output metadata so runs are attributable to the exact
/// generator chain.
inline constexpr const char *kRngDescription =
    "splitmix64 substream derivation feeding mt19937_64; Box-Muller gaussians";

inline std::uint64_t splitmix64(std::uint64_t &state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

/// Splittable seed: every (parent, tag) pair maps to a fixed child seed, so
/// parallel consumers draw from disjoint, order-independent streams.
struct SeedKey {
    std::uint64_t value = 0;

    SeedKey child(std::uint64_t tag) const {
        std::uint64_t s = value ^ (tag + 0x9E3779B97F4A7C15ULL + (value << 6) + (value >> 2));
        return SeedKey{splitmix64(s)};
    }
    SeedKey child(std::string_view tag) const { return child(fnv1a64(tag)); }
};

/// Deterministic stream of uniforms and circular complex gaussians. The
/// mt19937_64 core and the Box-Muller transform are both fully specified, so
/// identical seeds yield identical draws on every platform.
class RandomStream {
  public:
    explicit RandomStream(SeedKey key) : engine_(key.value) {}

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform in (0, 1]; safe as a log() argument.
    double uniform_pos() {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    /// Circular complex gaussian with E|z|^2 = power.
    cdouble complex_gaussian(double power) {
        const double mag = std::sqrt(-power * std::log(uniform_pos()));
        const double phase = 2.0 * kPi * uniform();
        return std::polar(mag, phase);
    }

    /// Phase uniform on [0, 2*pi).
    double uniform_phase() { return 2.0 * kPi * uniform(); }

  private:
    std::mt19937_64 engine_;
};

}  // namespace mimostca

#endif  // MIMOSTCA_RNG_HPP

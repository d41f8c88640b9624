// Copyright 2026 The capsim Authors
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

#ifndef CAPSIM_RNG_HPP
#define CAPSIM_RNG_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>

namespace capsim {

/// SplitMix64 finalizer. Used for seeding and for deriving child seeds.
constexpr uint64_t mix64(uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Derives an independent 64-bit seed from a parent seed and a tag/index pair.
constexpr uint64_t derive_seed(uint64_t parent, uint64_t tag, uint64_t index = 0) noexcept {
    return mix64(mix64(parent ^ mix64(tag)) + mix64(~index));
}

/// Deterministic random stream identified by (master_seed, stream_id).
///
/// The generator is xoshiro256** seeded through SplitMix64; floating point
/// variates are built from raw 64-bit words here rather than through
/// <random> distributions, whose output is implementation defined. Two
/// streams with the same identity produce the same sequence on every
/// platform.
class RngStream {
   public:
    RngStream(uint64_t master_seed, uint64_t stream_id) noexcept
        : master_seed_(master_seed), stream_id_(stream_id) {
        uint64_t s = derive_seed(master_seed, 0x63617073696d ^ stream_id, stream_id);
        for (auto &word : state_) {
            s += 0x9e3779b97f4a7c15ULL;
            word = mix64(s);
        }
    }

    uint64_t master_seed() const noexcept { return master_seed_; }
    uint64_t stream_id() const noexcept { return stream_id_; }

    uint64_t next_u64() noexcept {
        const uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform on [0, 1).
    double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1].
    double uniform_pos() noexcept { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    /// Uniform phase on [0, 2pi).
    double phase() noexcept { return 2.0 * M_PI * uniform(); }

    bool bernoulli(double p) noexcept { return uniform() < p; }

    /// Standard complex Gaussian, E|z|^2 = 1 (Box-Muller).
    std::complex<double> complex_normal() noexcept {
        const double r = std::sqrt(-std::log(uniform_pos()));
        const double a = phase();
        return {r * std::cos(a), r * std::sin(a)};
    }

   private:
    static constexpr uint64_t rotl(uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }

    uint64_t master_seed_;
    uint64_t stream_id_;
    std::array<uint64_t, 4> state_{};
};

}  // namespace capsim

#endif  // CAPSIM_RNG_HPP

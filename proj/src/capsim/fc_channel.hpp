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

// Finite-communication version of the cap protocol. Alice and Bob share a
// replayable sequence x_1, x_2, ... of Haar states; Alice sends the index of
// the first one that falls in her cap, Golomb coded. Since both the cap
// distribution and the Haar marginal are uniform on their supports, plain
// rejection sampling reduces to this first-acceptance rule and the accepted
// state is an exact cap sample.

#ifndef CAPSIM_FC_CHANNEL_HPP
#define CAPSIM_FC_CHANNEL_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "capsim/cap_protocol.hpp"
#include "capsim/hilbert.hpp"
#include "capsim/stats.hpp"

namespace capsim {

using Bits = std::vector<bool>;

/// Golomb parameter for a geometric source: max(1, round(-1 / log2(1 - p))).
uint64_t golomb_parameter(double prob_accept);

/// Codes k >= 1 as k - 1 = q m + r: q ones, a zero, then r in truncated
/// binary.
Bits golomb_encode(uint64_t k, double prob_accept);

/// Inverse of golomb_encode. The bit string must hold exactly one codeword.
uint64_t golomb_decode(const Bits &bits, double prob_accept);

/// Wire format: one header byte holding the pad length (0-7), then the bits
/// MSB-first, last byte zero-padded.
std::vector<uint8_t> pack_bits(const Bits &bits);
Bits unpack_bits(std::span<const uint8_t> bytes);

/// The shared random variable: x_i is a pure function of (master_seed, i).
class SharedRandomness {
   public:
    SharedRandomness(uint64_t master_seed, std::size_t dim);

    uint64_t master_seed() const noexcept { return master_seed_; }
    std::size_t dim() const noexcept { return dim_; }

    /// x_i for 1-based i.
    StateVector sample(uint64_t index) const;

   private:
    uint64_t master_seed_;
    std::size_t dim_;
};

struct Transcript {
    uint64_t index = 0;
    Bits bits;

    std::size_t bit_len() const noexcept { return bits.size(); }
    std::vector<uint8_t> to_wire() const { return pack_bits(bits); }
    static Transcript from_wire(std::span<const uint8_t> bytes, const CapParams &p);
};

inline constexpr uint64_t kEncodeBudget = uint64_t{1} << 20;

/// Smallest index whose shared state lies in the cap around psi.
/// Throws BudgetExceeded after `budget` rejections.
Transcript alice_encode(const StateVector &psi, const CapParams &p, const SharedRandomness &sr,
                        uint64_t budget = kEncodeBudget);

/// Replays the shared stream at the transmitted index.
StateVector bob_decode(const Transcript &t, const CapParams &p, const SharedRandomness &sr);

struct FcCostResult {
    uint64_t trials = 0;
    double mutual_info_bits = 0.0;
    double prob_accept = 0.0;
    double empirical_entropy_bits = 0.0;
    double geometric_entropy_bits = 0.0;
    double mean_code_len_bits = 0.0;
    double mean_index = 0.0;
    ChiSquare chi_square;
    std::vector<uint64_t> indices;

    /// I <= H <= I + log2(e) + slack
    bool entropy_within(double slack) const;
    /// mean code length <= H + 1 + slack
    bool code_len_within(double slack) const;
};

/// Largest mutual information (bits) for which the FC experiment runs.
inline constexpr double kMaxFcInfoBits = 16.0;

/// Runs `trials` encodings of independent Haar states, each with its own
/// shared stream, and measures the index distribution and code length.
FcCostResult fc_cost_experiment(const CapParams &p, uint64_t trials, uint64_t seed, unsigned threads = 0);

}  // namespace capsim

#endif  // CAPSIM_FC_CHANNEL_HPP

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

#include "capsim/fc_channel.hpp"

#include <cmath>
#include <sstream>

#include "capsim/error.hpp"
#include "capsim/parallel.hpp"

namespace capsim {
namespace {

constexpr uint64_t kPsiTag = 0x7073690a;
constexpr uint64_t kSharedTag = 0x73686172;

int bit_width(uint64_t v) {
    int w = 0;
    while (v) {
        ++w;
        v >>= 1;
    }
    return w;
}

void append_bits(Bits &out, uint64_t value, int width) {
    for (int i = width - 1; i >= 0; --i) out.push_back(((value >> i) & 1u) != 0);
}

}  // namespace

uint64_t golomb_parameter(double prob_accept) {
    if (!(prob_accept > 0.0 && prob_accept <= 1.0)) {
        fail(ErrorCode::InvalidArgument, "acceptance probability must lie in (0, 1]");
    }
    if (prob_accept == 1.0) return 1;
    // -1 / log2(1 - p), with log1p so that tiny p does not collapse to m = 1
    const double m = std::round(-M_LN2 / std::log1p(-prob_accept));
    if (m < 1.0) return 1;
    return m > 0x1p62 ? uint64_t{1} << 62 : static_cast<uint64_t>(m);
}

Bits golomb_encode(uint64_t k, double prob_accept) {
    if (k == 0) fail(ErrorCode::InvalidArgument, "Golomb index must be >= 1");
    const uint64_t m = golomb_parameter(prob_accept);
    const uint64_t q = (k - 1) / m;
    const uint64_t r = (k - 1) % m;
    Bits out(q, true);
    out.push_back(false);
    if (m > 1) {
        const int b = bit_width(m - 1);  // ceil(log2 m)
        const uint64_t cutoff = (uint64_t{1} << b) - m;
        if (r < cutoff) {
            append_bits(out, r, b - 1);
        } else {
            append_bits(out, r + cutoff, b);
        }
    }
    return out;
}

uint64_t golomb_decode(const Bits &bits, double prob_accept) {
    const uint64_t m = golomb_parameter(prob_accept);
    std::size_t pos = 0;
    uint64_t q = 0;
    while (pos < bits.size() && bits[pos]) {
        ++q;
        ++pos;
    }
    if (pos == bits.size()) fail(ErrorCode::DecodeError, "unterminated unary quotient");
    ++pos;
    uint64_t r = 0;
    if (m > 1) {
        const int b = bit_width(m - 1);
        const uint64_t cutoff = (uint64_t{1} << b) - m;
        auto read = [&](int width) {
            if (pos + static_cast<std::size_t>(width) > bits.size()) {
                fail(ErrorCode::DecodeError, "truncated Golomb remainder");
            }
            uint64_t v = 0;
            for (int i = 0; i < width; ++i) v = (v << 1) | (bits[pos++] ? 1u : 0u);
            return v;
        };
        r = read(b - 1);
        if (r >= cutoff) r = ((r << 1) | read(1)) - cutoff;
    }
    if (pos != bits.size()) fail(ErrorCode::DecodeError, "trailing bits after Golomb codeword");
    if (q > (UINT64_MAX - 1 - r) / m) fail(ErrorCode::DecodeError, "Golomb codeword overflows");
    return q * m + r + 1;
}

std::vector<uint8_t> pack_bits(const Bits &bits) {
    const std::size_t bytes = (bits.size() + 7) / 8;
    std::vector<uint8_t> out(1 + bytes, 0);
    out[0] = static_cast<uint8_t>(bytes * 8 - bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) out[1 + i / 8] |= static_cast<uint8_t>(0x80u >> (i % 8));
    }
    return out;
}

Bits unpack_bits(std::span<const uint8_t> bytes) {
    if (bytes.empty()) fail(ErrorCode::DecodeError, "missing header byte");
    const unsigned pad = bytes[0];
    if (pad > 7) fail(ErrorCode::DecodeError, "pad length exceeds 7");
    const std::size_t body = bytes.size() - 1;
    if (body == 0 && pad != 0) fail(ErrorCode::DecodeError, "padding without payload");
    if (body > 0 && (bytes.back() & ((1u << pad) - 1u)) != 0) fail(ErrorCode::DecodeError, "nonzero padding bits");
    const std::size_t n = body * 8 - pad;
    Bits out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = (bytes[1 + i / 8] & (0x80u >> (i % 8))) != 0;
    return out;
}

SharedRandomness::SharedRandomness(uint64_t master_seed, std::size_t dim) : master_seed_(master_seed), dim_(dim) {
    if (dim == 0) fail(ErrorCode::InvalidDimension, "shared randomness needs dimension >= 1");
}

StateVector SharedRandomness::sample(uint64_t index) const {
    if (index == 0) fail(ErrorCode::InvalidArgument, "shared samples are 1-based");
    RngStream rng(master_seed_, index);
    return haar_state(dim_, rng);
}

Transcript Transcript::from_wire(std::span<const uint8_t> bytes, const CapParams &p) {
    Transcript t;
    t.bits = unpack_bits(bytes);
    t.index = golomb_decode(t.bits, p.cap_fraction());
    return t;
}

Transcript alice_encode(const StateVector &psi, const CapParams &p, const SharedRandomness &sr, uint64_t budget) {
    if (psi.dim() != p.dim() || sr.dim() != p.dim()) {
        fail(ErrorCode::DimensionMismatch, "psi, parameters and shared randomness must agree on dimension");
    }
    for (uint64_t i = 1; i <= budget; ++i) {
        if (std::norm(inner(sr.sample(i), psi)) >= p.cos2()) {
            return {i, golomb_encode(i, p.cap_fraction())};
        }
    }
    std::ostringstream os;
    os << "no shared sample accepted within " << budget << " trials (acceptance probability " << p.cap_fraction()
       << ")";
    fail(ErrorCode::BudgetExceeded, os.str());
}

StateVector bob_decode(const Transcript &t, const CapParams &p, const SharedRandomness &sr) {
    if (sr.dim() != p.dim()) fail(ErrorCode::DimensionMismatch, "shared randomness dimension mismatch");
    const uint64_t index = golomb_decode(t.bits, p.cap_fraction());
    if (index != t.index) fail(ErrorCode::DecodeError, "transcript index disagrees with its bit string");
    return sr.sample(index);
}

bool FcCostResult::entropy_within(double slack) const {
    return empirical_entropy_bits >= mutual_info_bits - slack &&
           empirical_entropy_bits <= mutual_info_bits + kLog2E + slack;
}

bool FcCostResult::code_len_within(double slack) const {
    return mean_code_len_bits <= empirical_entropy_bits + 1.0 + slack;
}

FcCostResult fc_cost_experiment(const CapParams &p, uint64_t trials, uint64_t seed, unsigned threads) {
    if (trials == 0) fail(ErrorCode::InvalidArgument, "trials must be >= 1");
    const CostReport cost = cap::cost_report(p);
    if (cost.mutual_info_bits > kMaxFcInfoBits) {
        std::ostringstream os;
        os << "mutual information " << cost.mutual_info_bits << " bits exceeds the " << kMaxFcInfoBits
           << "-bit budget for executable encoding";
        fail(ErrorCode::BudgetExceeded, os.str());
    }

    FcCostResult r;
    r.trials = trials;
    r.mutual_info_bits = cost.mutual_info_bits;
    r.prob_accept = p.cap_fraction();
    r.geometric_entropy_bits = geometric_entropy_bits(r.prob_accept);
    r.indices.assign(trials, 0);
    std::vector<uint32_t> lengths(trials, 0);

    const uint64_t psi_seed = derive_seed(seed, kPsiTag);
    parallel_for(trials, threads, [&](std::size_t i) {
        RngStream rng(psi_seed, i);
        const StateVector psi = haar_state(p.dim(), rng);
        const Transcript t = alice_encode(psi, p, SharedRandomness(derive_seed(seed, kSharedTag, i), p.dim()));
        r.indices[i] = t.index;
        lengths[i] = static_cast<uint32_t>(t.bit_len());
    });

    uint64_t total_bits = 0;
    long double total_index = 0;
    for (uint64_t i = 0; i < trials; ++i) {
        total_bits += lengths[i];
        total_index += r.indices[i];
    }
    r.mean_code_len_bits = static_cast<double>(total_bits) / static_cast<double>(trials);
    r.mean_index = static_cast<double>(total_index / trials);
    r.empirical_entropy_bits = plugin_entropy_bits(r.indices);
    r.chi_square = chi_square_geometric(r.indices, r.prob_accept);
    return r;
}

}  // namespace capsim

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

#include "capsim/stats.hpp"

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <map>

#include "capsim/error.hpp"

namespace capsim {

double EstimateCI::std_error() const {
    if (trials == 0) return 0.0;
    return std::sqrt(mean * (1.0 - mean) / static_cast<double>(trials));
}

double normal_z(double confidence) {
    if (!(confidence > 0.0 && confidence < 1.0)) fail(ErrorCode::InvalidArgument, "confidence must lie in (0, 1)");
    return boost::math::quantile(boost::math::normal_distribution<double>(), 0.5 + confidence / 2.0);
}

EstimateCI wilson(uint64_t successes, uint64_t trials, double confidence) {
    if (trials == 0) fail(ErrorCode::InvalidArgument, "Wilson interval needs at least one trial");
    if (successes > trials) fail(ErrorCode::InvalidArgument, "more successes than trials");
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z = normal_z(confidence);
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double centre = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    EstimateCI e;
    e.mean = p;
    e.ci_low = std::max(0.0, std::min(p, centre - half));
    e.ci_high = std::min(1.0, std::max(p, centre + half));
    e.trials = trials;
    e.confidence = confidence;
    return e;
}

MeanSE mean_se(std::span<const double> xs) {
    if (xs.empty()) fail(ErrorCode::InvalidArgument, "mean of an empty sample");
    const double n = static_cast<double>(xs.size());
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= n;
    if (xs.size() < 2) return {mean, 0.0};
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return {mean, std::sqrt(ss / (n - 1.0) / n)};
}

double plugin_entropy_bits(std::span<const uint64_t> samples) {
    if (samples.empty()) fail(ErrorCode::InvalidArgument, "entropy of an empty sample");
    std::map<uint64_t, uint64_t> counts;
    for (uint64_t s : samples) ++counts[s];
    const double n = static_cast<double>(samples.size());
    double h = 0.0;
    for (const auto &[value, count] : counts) {
        const double q = static_cast<double>(count) / n;
        h -= q * std::log2(q);
    }
    return std::max(0.0, h);
}

double geometric_entropy_bits(double p) {
    if (!(p > 0.0 && p <= 1.0)) fail(ErrorCode::InvalidArgument, "geometric parameter must lie in (0, 1]");
    if (p == 1.0) return 0.0;
    const double q = 1.0 - p;
    return (-q * std::log2(q) - p * std::log2(p)) / p;
}

ChiSquare chi_square_geometric(std::span<const uint64_t> samples, double p) {
    if (samples.empty()) fail(ErrorCode::InvalidArgument, "chi-square of an empty sample");
    if (!(p > 0.0 && p <= 1.0)) fail(ErrorCode::InvalidArgument, "geometric parameter must lie in (0, 1]");
    const double n = static_cast<double>(samples.size());

    // Open cells k = 1..K-1, tail cell k >= K.
    std::vector<double> expected;
    double tail = 1.0;  // P(k >= current)
    for (uint64_t k = 1;; ++k) {
        const double pk = tail * p;
        if (n * pk < 5.0 || n * (tail - pk) < 5.0) break;
        expected.push_back(n * pk);
        tail -= pk;
    }
    const std::size_t open = expected.size();
    expected.push_back(n * tail);

    std::vector<double> observed(expected.size(), 0.0);
    for (uint64_t s : samples) {
        if (s == 0) fail(ErrorCode::InvalidArgument, "geometric samples start at 1");
        observed[std::min<uint64_t>(s - 1, open)] += 1.0;
    }

    ChiSquare out;
    out.dof = static_cast<int>(expected.size()) - 1;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (expected[i] > 0.0) out.statistic += (observed[i] - expected[i]) * (observed[i] - expected[i]) / expected[i];
    }
    if (out.dof > 0) {
        out.p_value = boost::math::cdf(boost::math::complement(boost::math::chi_squared_distribution<double>(out.dof),
                                                               out.statistic));
    }
    return out;
}

LinearFit least_squares(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) fail(ErrorCode::InvalidArgument, "regression needs >= 2 paired points");
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    if (sxx == 0.0) fail(ErrorCode::InvalidArgument, "regression abscissae are all equal");
    const double slope = sxy / sxx;
    return {slope, my - slope * mx};
}

}  // namespace capsim

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

#ifndef CAPSIM_STATS_HPP
#define CAPSIM_STATS_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace capsim {

/// Monte Carlo estimate of a probability with a Wilson score interval.
struct EstimateCI {
    double mean = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    uint64_t trials = 0;
    double confidence = 0.99;

    /// Binomial standard error sqrt(p(1-p)/n) at the point estimate.
    double std_error() const;
    bool contains(double value) const { return ci_low <= value && value <= ci_high; }
};

/// Two-sided standard normal quantile for the given confidence.
double normal_z(double confidence);

/// Wilson score interval for `successes` out of `trials`.
EstimateCI wilson(uint64_t successes, uint64_t trials, double confidence = 0.99);

struct MeanSE {
    double mean = 0.0;
    double std_error = 0.0;
};

/// Sample mean and its standard error (n - 1 denominator).
MeanSE mean_se(std::span<const double> xs);

/// Plug-in Shannon entropy in bits of integer observations.
double plugin_entropy_bits(std::span<const uint64_t> samples);

/// Entropy in bits of Geom(p) on {1, 2, ...}.
double geometric_entropy_bits(double p);

struct ChiSquare {
    double statistic = 0.0;
    int dof = 0;
    double p_value = 1.0;
};

/// Goodness of fit of observations on {1, 2, ...} against Geom(p). Cells
/// run k = 1, 2, ... while the expected count is at least 5; the last cell
/// absorbs the tail.
ChiSquare chi_square_geometric(std::span<const uint64_t> samples, double p);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
};

/// Ordinary least squares y = intercept + slope * x.
LinearFit least_squares(std::span<const double> x, std::span<const double> y);

}  // namespace capsim

#endif  // CAPSIM_STATS_HPP

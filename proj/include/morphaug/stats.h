// Copyright 2026 The Morphaug Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MORPHAUG_STATS_H_
#define MORPHAUG_STATS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>

namespace morphaug {

double Mean(std::span<const double> values);

// Sample Pearson correlation. Throws kTooFewSamples for fewer than 2 pairs
// or mismatched lengths, and kZeroVariance naming `x_name` or `y_name` when
// that variable is constant.
double PearsonCorrelation(std::span<const double> x, std::span<const double> y,
                          const std::string& x_name = "x",
                          const std::string& y_name = "y");

// Linear-interpolation quantile of an ascending-sorted range, q in [0, 1].
double SortedQuantile(std::span<const double> sorted, double q);

struct BootstrapOptions {
  std::size_t resamples = 10000;
  double level = 0.95;
  std::uint64_t seed = 0;
};

struct BootstrapCi {
  std::string statistic;
  double point = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  std::size_t resamples = 0;
  double level = 0.0;
};

using Statistic = std::function<double(std::span<const double>)>;
// Statistic over the resampled row indices of an n-row sample.
using IndexedStatistic = std::function<double(std::span<const std::size_t>)>;

// Percentile interval of `statistic` over with-replacement resamples. The
// interval is widened where needed so it always contains the point estimate.
// Resample r draws from DeriveSeed(seed, r), so the result does not depend on
// how resamples are scheduled. Throws kTooFewSamples for fewer than 2
// samples.
BootstrapCi BootstrapPercentile(std::span<const double> samples,
                                const Statistic& statistic, std::string name,
                                const BootstrapOptions& options = {});
BootstrapCi BootstrapPercentileIndexed(std::size_t n,
                                       const IndexedStatistic& statistic,
                                       std::string name,
                                       const BootstrapOptions& options = {});

struct MeanDifferenceTest {
  // mean(a) - mean(b) with its percentile interval.
  BootstrapCi difference;
  // Two-sided bootstrap percentile p-value for a zero difference:
  // 2 * min(P*(diff <= 0), P*(diff >= 0)), capped at 1.
  double p_value = 1.0;
};

// Resamples the two groups independently. Both need >= 2 samples.
MeanDifferenceTest BootstrapMeanDifference(std::span<const double> a,
                                           std::span<const double> b,
                                           const BootstrapOptions& options = {});

}  // namespace morphaug

#endif  // MORPHAUG_STATS_H_

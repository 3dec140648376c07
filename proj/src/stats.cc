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

#include "morphaug/stats.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "morphaug/random.h"
#include "morphaug/status.h"
#include "parallel.h"

namespace morphaug {
namespace {

BootstrapCi Summarize(std::vector<double> replicates, double point,
                      std::string name, const BootstrapOptions& options) {
  std::sort(replicates.begin(), replicates.end());
  const double tail = (1.0 - options.level) / 2.0;
  BootstrapCi ci;
  ci.statistic = std::move(name);
  ci.point = point;
  ci.lower = std::min(SortedQuantile(replicates, tail), point);
  ci.upper = std::max(SortedQuantile(replicates, 1.0 - tail), point);
  ci.resamples = options.resamples;
  ci.level = options.level;
  return ci;
}

void CheckOptions(const BootstrapOptions& options) {
  if (options.resamples == 0 || !(options.level > 0.0 && options.level < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "bootstrap needs resamples >= 1 and level in (0, 1)");
  }
}

}  // namespace

double Mean(std::span<const double> values) {
  if (values.empty()) return 0.0;
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

double PearsonCorrelation(std::span<const double> x, std::span<const double> y,
                          const std::string& x_name,
                          const std::string& y_name) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error(ErrorCode::kTooFewSamples,
                "correlation needs two equally long samples of size >= 2");
  }
  const double mean_x = Mean(x);
  const double mean_y = Mean(y);
  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mean_x;
    const double dy = y[i] - mean_y;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0) throw Error(ErrorCode::kZeroVariance, x_name);
  if (syy == 0.0) throw Error(ErrorCode::kZeroVariance, y_name);
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double SortedQuantile(std::span<const double> sorted, double q) {
  if (sorted.empty()) {
    throw Error(ErrorCode::kTooFewSamples, "quantile of an empty sample");
  }
  const double position = q * static_cast<double>(sorted.size() - 1);
  const auto below = static_cast<std::size_t>(std::floor(position));
  const std::size_t above = std::min(below + 1, sorted.size() - 1);
  const double fraction = position - static_cast<double>(below);
  return sorted[below] + fraction * (sorted[above] - sorted[below]);
}

BootstrapCi BootstrapPercentile(std::span<const double> samples,
                                const Statistic& statistic, std::string name,
                                const BootstrapOptions& options) {
  if (samples.size() < 2) {
    throw Error(ErrorCode::kTooFewSamples, "bootstrap needs >= 2 samples");
  }
  std::vector<double> values(samples.begin(), samples.end());
  return BootstrapPercentileIndexed(
      values.size(),
      [&](std::span<const std::size_t> rows) {
        std::vector<double> resample;
        resample.reserve(rows.size());
        for (std::size_t r : rows) resample.push_back(values[r]);
        return statistic(resample);
      },
      std::move(name), options);
}

BootstrapCi BootstrapPercentileIndexed(std::size_t n,
                                       const IndexedStatistic& statistic,
                                       std::string name,
                                       const BootstrapOptions& options) {
  if (n < 2) {
    throw Error(ErrorCode::kTooFewSamples, "bootstrap needs >= 2 samples");
  }
  CheckOptions(options);
  std::vector<std::size_t> identity(n);
  std::iota(identity.begin(), identity.end(), std::size_t{0});
  const double point = statistic(identity);

  std::vector<double> replicates(options.resamples);
  internal::ParallelFor(options.resamples, [&](std::size_t r) {
    Rng rng(DeriveSeed(options.seed, static_cast<std::uint64_t>(r)));
    std::vector<std::size_t> rows(n);
    for (std::size_t& row : rows) row = rng.UniformIndex(n);
    replicates[r] = statistic(rows);
  });
  return Summarize(std::move(replicates), point, std::move(name), options);
}

MeanDifferenceTest BootstrapMeanDifference(std::span<const double> a,
                                           std::span<const double> b,
                                           const BootstrapOptions& options) {
  if (a.size() < 2 || b.size() < 2) {
    throw Error(ErrorCode::kTooFewSamples,
                "each group needs >= 2 samples for a bootstrap test");
  }
  CheckOptions(options);
  const double point = Mean(a) - Mean(b);
  std::vector<double> replicates(options.resamples);
  internal::ParallelFor(options.resamples, [&](std::size_t r) {
    Rng rng(DeriveSeed(options.seed, static_cast<std::uint64_t>(r)));
    double sum_a = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum_a += a[rng.UniformIndex(a.size())];
    double sum_b = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) sum_b += b[rng.UniformIndex(b.size())];
    replicates[r] = sum_a / static_cast<double>(a.size()) -
                    sum_b / static_cast<double>(b.size());
  });
  std::size_t at_most_zero = 0;
  std::size_t at_least_zero = 0;
  for (double d : replicates) {
    at_most_zero += d <= 0.0;
    at_least_zero += d >= 0.0;
  }
  const double count = static_cast<double>(replicates.size());
  MeanDifferenceTest test;
  test.p_value = std::min(
      1.0, 2.0 * std::min(at_most_zero / count, at_least_zero / count));
  test.difference =
      Summarize(std::move(replicates), point, "mean_difference", options);
  return test;
}

}  // namespace morphaug

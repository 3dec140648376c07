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

#ifndef MORPHAUG_SELECTION_H_
#define MORPHAUG_SELECTION_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "morphaug/corpus.h"
#include "morphaug/stemcorrupt.h"

namespace morphaug {

enum class StrategyKind {
  kRandom,
  kUmt,
  kUme,
  kHighLoss,
  kLowLoss,
  kUmtLoss,
  kUmeLoss,
};

// CLI spelling: random, umt, ume, highloss, lowloss, umt-loss, ume-loss.
std::string_view StrategyName(StrategyKind kind);
// Throws kInvalidArgument for an unknown name.
StrategyKind ParseStrategyName(std::string_view name);
bool StrategyUsesScores(StrategyKind kind);

struct SelectionStrategy {
  StrategyKind kind = StrategyKind::kRandom;
  std::size_t k = 0;
  // 0 for UMT-style, 1 for UME-style sampling. Other values are accepted but
  // experimental.
  double alpha = 0.0;
  std::uint64_t seed = 0;

  // Strategy with the alpha its name implies.
  static SelectionStrategy Named(StrategyKind kind, std::size_t k,
                                 std::uint64_t seed);
  bool ExperimentalAlpha() const;
};

struct SelectionResult {
  // In selection order. Ties in loss are broken by lowest id.
  std::vector<ExampleId> selected_ids;
  SelectionStrategy strategy;
  MsdHistogram per_msd_counts;
};

enum class LossDirection { kHighest, kLowest };

// q_alpha(T) = p(T)^alpha / sum_T' p(T')^alpha over the keys of `histogram`.
std::map<std::string, double> TemplaticDistribution(
    const MsdHistogram& histogram, double alpha);

// Uniform sample without replacement.
SelectionResult SelectRandom(std::span<const SyntheticExample> pool,
                             std::size_t k, std::uint64_t seed);

// Repeatedly draws an MSD from q_alpha, renormalized over MSDs that still
// have candidates, then a uniformly random remaining candidate of that MSD.
// p(T) is measured on the whole pool.
SelectionResult SelectTemplatic(std::span<const SyntheticExample> pool,
                                std::size_t k, double alpha,
                                std::uint64_t seed);

// Exact top-k (or bottom-k) by score. Throws kUnscoredPool.
SelectionResult SelectByLoss(std::span<const SyntheticExample> pool,
                             std::size_t k, LossDirection direction);

// Draws an MSD from q_alpha as in SelectTemplatic, then takes its remaining
// candidate with the highest score. Throws kUnscoredPool.
SelectionResult SelectHybrid(std::span<const SyntheticExample> pool,
                             std::size_t k, double alpha, std::uint64_t seed);

// Dispatch on strategy.kind. All variants throw kKTooLarge for k > |pool|.
SelectionResult Select(std::span<const SyntheticExample> pool,
                       const SelectionStrategy& strategy);

}  // namespace morphaug

#endif  // MORPHAUG_SELECTION_H_

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

#include "morphaug/selection.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "morphaug/random.h"
#include "morphaug/status.h"

namespace morphaug {
namespace {

void CheckK(std::span<const SyntheticExample> pool, std::size_t k) {
  if (k > pool.size()) {
    throw Error(ErrorCode::kKTooLarge,
                "k = " + std::to_string(k) + " exceeds pool size " +
                    std::to_string(pool.size()));
  }
}

void CheckScored(std::span<const SyntheticExample> pool) {
  for (const SyntheticExample& e : pool) {
    if (!e.score) {
      throw Error(ErrorCode::kUnscoredPool,
                  "example " + std::to_string(e.triple.id.value) +
                      " has no score");
    }
  }
}

SelectionResult Finish(std::span<const SyntheticExample> pool,
                       const std::vector<std::size_t>& picked,
                       SelectionStrategy strategy) {
  SelectionResult result;
  result.strategy = strategy;
  result.selected_ids.reserve(picked.size());
  for (std::size_t index : picked) {
    result.selected_ids.push_back(pool[index].triple.id);
    result.per_msd_counts.Add(pool[index].triple.MsdKey());
  }
  return result;
}

// Pool indices grouped by MSD key, groups in key order.
struct MsdGroups {
  std::vector<std::string> keys;
  std::vector<std::vector<std::size_t>> members;
  std::vector<double> weights;
};

MsdGroups GroupByMsd(std::span<const SyntheticExample> pool, double alpha) {
  std::map<std::string, std::vector<std::size_t>> grouped;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    grouped[pool[i].triple.MsdKey()].push_back(i);
  }
  MsdGroups groups;
  const double total = static_cast<double>(pool.size());
  for (auto& [key, members] : grouped) {
    groups.keys.push_back(key);
    groups.weights.push_back(
        std::pow(static_cast<double>(members.size()) / total, alpha));
    groups.members.push_back(std::move(members));
  }
  return groups;
}

// Draws a group index proportionally to weight among nonempty groups.
std::size_t DrawGroup(const MsdGroups& groups, Rng& rng) {
  double mass = 0.0;
  std::size_t last_active = groups.keys.size();
  for (std::size_t g = 0; g < groups.keys.size(); ++g) {
    if (groups.members[g].empty()) continue;
    mass += groups.weights[g];
    last_active = g;
  }
  const double target = rng.UniformDouble() * mass;
  double cumulative = 0.0;
  for (std::size_t g = 0; g < groups.keys.size(); ++g) {
    if (groups.members[g].empty()) continue;
    cumulative += groups.weights[g];
    if (target < cumulative) return g;
  }
  return last_active;
}

bool HigherScoreFirst(const SyntheticExample& a, const SyntheticExample& b) {
  if (*a.score != *b.score) return *a.score > *b.score;
  return a.triple.id < b.triple.id;
}

}  // namespace

std::string_view StrategyName(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::kRandom: return "random";
    case StrategyKind::kUmt: return "umt";
    case StrategyKind::kUme: return "ume";
    case StrategyKind::kHighLoss: return "highloss";
    case StrategyKind::kLowLoss: return "lowloss";
    case StrategyKind::kUmtLoss: return "umt-loss";
    case StrategyKind::kUmeLoss: return "ume-loss";
  }
  return "unknown";
}

StrategyKind ParseStrategyName(std::string_view name) {
  for (StrategyKind kind :
       {StrategyKind::kRandom, StrategyKind::kUmt, StrategyKind::kUme,
        StrategyKind::kHighLoss, StrategyKind::kLowLoss,
        StrategyKind::kUmtLoss, StrategyKind::kUmeLoss}) {
    if (StrategyName(kind) == name) return kind;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown strategy '" + std::string(name) + "'");
}

bool StrategyUsesScores(StrategyKind kind) {
  return kind == StrategyKind::kHighLoss || kind == StrategyKind::kLowLoss ||
         kind == StrategyKind::kUmtLoss || kind == StrategyKind::kUmeLoss;
}

SelectionStrategy SelectionStrategy::Named(StrategyKind kind, std::size_t k,
                                           std::uint64_t seed) {
  const bool empirical =
      kind == StrategyKind::kUme || kind == StrategyKind::kUmeLoss;
  return {kind, k, empirical ? 1.0 : 0.0, seed};
}

bool SelectionStrategy::ExperimentalAlpha() const {
  return alpha != 0.0 && alpha != 1.0;
}

std::map<std::string, double> TemplaticDistribution(
    const MsdHistogram& histogram, double alpha) {
  std::map<std::string, double> q;
  double mass = 0.0;
  for (const auto& [key, count] : histogram.counts()) {
    const double w = std::pow(histogram.Proportion(key), alpha);
    q[key] = w;
    mass += w;
  }
  for (auto& [key, w] : q) w /= mass;
  return q;
}

SelectionResult SelectRandom(std::span<const SyntheticExample> pool,
                             std::size_t k, std::uint64_t seed) {
  CheckK(pool, k);
  std::vector<std::size_t> order(pool.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(seed);
  // Partial Fisher-Yates.
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + rng.UniformIndex(order.size() - i);
    std::swap(order[i], order[j]);
  }
  order.resize(k);
  return Finish(pool, order, {StrategyKind::kRandom, k, 0.0, seed});
}

SelectionResult SelectTemplatic(std::span<const SyntheticExample> pool,
                                std::size_t k, double alpha,
                                std::uint64_t seed) {
  CheckK(pool, k);
  MsdGroups groups = GroupByMsd(pool, alpha);
  Rng rng(seed);
  std::vector<std::size_t> picked;
  picked.reserve(k);
  for (std::size_t step = 0; step < k; ++step) {
    std::vector<std::size_t>& members = groups.members[DrawGroup(groups, rng)];
    const std::size_t j = rng.UniformIndex(members.size());
    picked.push_back(members[j]);
    members[j] = members.back();
    members.pop_back();
  }
  const StrategyKind kind = alpha == 1.0 ? StrategyKind::kUme : StrategyKind::kUmt;
  return Finish(pool, picked, {kind, k, alpha, seed});
}

SelectionResult SelectByLoss(std::span<const SyntheticExample> pool,
                             std::size_t k, LossDirection direction) {
  CheckK(pool, k);
  CheckScored(pool);
  std::vector<std::size_t> order(pool.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto before = [&](std::size_t a, std::size_t b) {
    const SyntheticExample& x = pool[a];
    const SyntheticExample& y = pool[b];
    if (*x.score != *y.score) {
      return direction == LossDirection::kHighest ? *x.score > *y.score
                                                  : *x.score < *y.score;
    }
    return x.triple.id < y.triple.id;
  };
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k),
                    order.end(), before);
  order.resize(k);
  const StrategyKind kind = direction == LossDirection::kHighest
                                ? StrategyKind::kHighLoss
                                : StrategyKind::kLowLoss;
  return Finish(pool, order, {kind, k, 0.0, 0});
}

SelectionResult SelectHybrid(std::span<const SyntheticExample> pool,
                             std::size_t k, double alpha, std::uint64_t seed) {
  CheckK(pool, k);
  CheckScored(pool);
  MsdGroups groups = GroupByMsd(pool, alpha);
  // Lowest priority at the back so candidates pop off in O(1).
  for (std::vector<std::size_t>& members : groups.members) {
    std::sort(members.begin(), members.end(),
              [&](std::size_t a, std::size_t b) {
                return HigherScoreFirst(pool[b], pool[a]);
              });
  }
  Rng rng(seed);
  std::vector<std::size_t> picked;
  picked.reserve(k);
  for (std::size_t step = 0; step < k; ++step) {
    std::vector<std::size_t>& members = groups.members[DrawGroup(groups, rng)];
    picked.push_back(members.back());
    members.pop_back();
  }
  const StrategyKind kind =
      alpha == 1.0 ? StrategyKind::kUmeLoss : StrategyKind::kUmtLoss;
  return Finish(pool, picked, {kind, k, alpha, seed});
}

SelectionResult Select(std::span<const SyntheticExample> pool,
                       const SelectionStrategy& strategy) {
  SelectionResult result;
  switch (strategy.kind) {
    case StrategyKind::kRandom:
      result = SelectRandom(pool, strategy.k, strategy.seed);
      break;
    case StrategyKind::kUmt:
    case StrategyKind::kUme:
      result = SelectTemplatic(pool, strategy.k, strategy.alpha, strategy.seed);
      break;
    case StrategyKind::kHighLoss:
      result = SelectByLoss(pool, strategy.k, LossDirection::kHighest);
      break;
    case StrategyKind::kLowLoss:
      result = SelectByLoss(pool, strategy.k, LossDirection::kLowest);
      break;
    case StrategyKind::kUmtLoss:
    case StrategyKind::kUmeLoss:
      result = SelectHybrid(pool, strategy.k, strategy.alpha, strategy.seed);
      break;
  }
  result.strategy = strategy;
  return result;
}

}  // namespace morphaug

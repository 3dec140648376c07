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
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "morphaug/status.h"
#include "test_oracles.h"

namespace morphaug {
namespace {

SyntheticExample Item(std::uint64_t id, std::string msd,
                      std::optional<double> score = std::nullopt) {
  SyntheticExample e;
  e.triple = {ExampleId{id}, U"abc", U"abcd", ParseMsd(msd)};
  e.source_id = ExampleId{id};
  e.score = score;
  return e;
}

std::vector<SyntheticExample> SplitPool(std::size_t first, std::size_t second) {
  std::vector<SyntheticExample> pool;
  for (std::size_t i = 0; i < first + second; ++i) {
    pool.push_back(Item(i, i < first ? "PL;ERG" : "SG;ERG", 0.01 * i));
  }
  return pool;
}

std::set<std::uint64_t> IdSet(const SelectionResult& r) {
  std::set<std::uint64_t> out;
  for (ExampleId id : r.selected_ids) out.insert(id.value);
  return out;
}

ErrorCode CodeOf(const std::vector<SyntheticExample>& pool,
                 const SelectionStrategy& s) {
  try {
    Select(pool, s);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kIo;
}

// |observed - expected| within 3 binomial standard deviations.
void ExpectWithin3Sigma(double hits, double trials, double p) {
  const double sigma = std::sqrt(trials * p * (1 - p));
  EXPECT_NEAR(hits, trials * p, 3 * sigma) << "p=" << p;
}

TEST(StrategyNameTest, RoundTrip) {
  for (StrategyKind k :
       {StrategyKind::kRandom, StrategyKind::kUmt, StrategyKind::kUme,
        StrategyKind::kHighLoss, StrategyKind::kLowLoss, StrategyKind::kUmtLoss,
        StrategyKind::kUmeLoss}) {
    EXPECT_EQ(ParseStrategyName(StrategyName(k)), k);
  }
  EXPECT_THROW(ParseStrategyName("best"), Error);
  EXPECT_EQ(SelectionStrategy::Named(StrategyKind::kUme, 1, 0).alpha, 1.0);
  EXPECT_EQ(SelectionStrategy::Named(StrategyKind::kUmtLoss, 1, 0).alpha, 0.0);
}

TEST(TemplaticDistributionTest, NineToOne) {
  MsdHistogram h;
  h.Add("PL;ERG", 9);
  h.Add("SG;ERG", 1);
  const auto q1 = TemplaticDistribution(h, 1.0);
  EXPECT_DOUBLE_EQ(q1.at("PL;ERG"), 0.9);
  EXPECT_DOUBLE_EQ(q1.at("SG;ERG"), 0.1);
  const auto q0 = TemplaticDistribution(h, 0.0);
  EXPECT_DOUBLE_EQ(q0.at("PL;ERG"), 0.5);
  EXPECT_DOUBLE_EQ(q0.at("SG;ERG"), 0.5);
}

TEST(SelectRandomTest, EdgeSizes) {
  const auto pool = SplitPool(5, 5);
  EXPECT_EQ(IdSet(SelectRandom(pool, 10, 1)).size(), 10u);
  EXPECT_TRUE(SelectRandom(pool, 0, 1).selected_ids.empty());
  EXPECT_EQ(CodeOf(pool, {StrategyKind::kRandom, 11, 0, 1}),
            ErrorCode::kKTooLarge);
}

TEST(SelectRandomTest, UniformFirstDraw) {
  const auto pool = SplitPool(2, 2);
  std::vector<double> hits(4, 0);
  const int kTrials = 10000;
  for (int t = 0; t < kTrials; ++t) {
    ++hits[SelectRandom(pool, 1, DeriveSeed(5, std::uint64_t(t)))
               .selected_ids[0]
               .value];
  }
  for (double h : hits) ExpectWithin3Sigma(h, kTrials, 0.25);
}

TEST(SelectTemplaticTest, FirstDrawFollowsQAlpha) {
  const auto pool = SplitPool(90, 10);
  const int kTrials = 10000;
  for (double alpha : {0.0, 1.0}) {
    double plural = 0;
    for (int t = 0; t < kTrials; ++t) {
      const SelectionResult r =
          SelectTemplatic(pool, 1, alpha, DeriveSeed(9, std::uint64_t(t)));
      plural += r.selected_ids[0].value < 90;
    }
    ExpectWithin3Sigma(plural, kTrials, alpha == 0.0 ? 0.5 : 0.9);
  }
}

TEST(SelectTemplaticTest, ExhaustsSmallMsdsAndCounts) {
  const auto pool = SplitPool(90, 10);
  const SelectionResult r = SelectTemplatic(pool, 40, 0.0, 3);
  EXPECT_EQ(IdSet(r).size(), 40u);
  EXPECT_EQ(r.per_msd_counts.total(), 40u);
  EXPECT_EQ(r.per_msd_counts.Count("SG;ERG"), 10u);
  EXPECT_EQ(IdSet(SelectTemplatic(pool, 100, 1.0, 3)).size(), 100u);
}

TEST(SelectByLossTest, SmallExample) {
  const std::vector<SyntheticExample> pool = {Item(0, "N", 1.0),
                                              Item(1, "N", 2.0),
                                              Item(2, "N", 0.5)};
  EXPECT_EQ(SelectByLoss(pool, 2, LossDirection::kHighest).selected_ids,
            (std::vector<ExampleId>{ExampleId{1}, ExampleId{0}}));
  EXPECT_EQ(SelectByLoss(pool, 2, LossDirection::kLowest).selected_ids,
            (std::vector<ExampleId>{ExampleId{2}, ExampleId{0}}));
}

TEST(SelectByLossTest, MatchesFullSortOracle) {
  std::mt19937_64 gen(17);
  std::uniform_int_distribution<int> coarse(0, 200);  // plenty of ties
  std::vector<SyntheticExample> pool;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    pool.push_back(Item(i, i % 3 ? "N;SG" : "N;PL", coarse(gen) / 10.0));
  }
  std::shuffle(pool.begin(), pool.end(), gen);
  for (std::size_t k : {1u, 10u, 100u}) {
    EXPECT_EQ(SelectByLoss(pool, k, LossDirection::kHighest).selected_ids,
              oracle::TopKBySort(pool, k, true));
    EXPECT_EQ(SelectByLoss(pool, k, LossDirection::kLowest).selected_ids,
              oracle::TopKBySort(pool, k, false));
  }
}

TEST(SelectByLossTest, Unscored) {
  std::vector<SyntheticExample> pool = {Item(0, "N", 1.0), Item(1, "N")};
  EXPECT_EQ(CodeOf(pool, {StrategyKind::kHighLoss, 1, 0, 0}),
            ErrorCode::kUnscoredPool);
  EXPECT_EQ(CodeOf(pool, {StrategyKind::kUmeLoss, 1, 1, 0}),
            ErrorCode::kUnscoredPool);
  EXPECT_NO_THROW(Select(pool, {StrategyKind::kUmt, 1, 0, 0}));
}

TEST(SelectHybridTest, SingleMsdEqualsHighLoss) {
  std::vector<SyntheticExample> pool;
  for (std::uint64_t i = 0; i < 50; ++i) {
    pool.push_back(Item(i, "N", std::fmod(i * 0.37, 1.0)));
  }
  EXPECT_EQ(IdSet(SelectHybrid(pool, 10, 0.0, 4)),
            IdSet(SelectByLoss(pool, 10, LossDirection::kHighest)));
}

TEST(SelectHybridTest, TwoMsdsTakeEachMax) {
  // Exhaustive check: whatever order the two MSDs are drawn in, k=2 with
  // alpha=0 must give the best item of each.
  const std::vector<SyntheticExample> pool = {
      Item(0, "A", 0.3), Item(1, "A", 0.9), Item(2, "A", 0.1),
      Item(3, "B", 0.8), Item(4, "B", 0.2), Item(5, "B", 0.95)};
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const SelectionResult r = SelectHybrid(pool, 2, 0.0, seed);
    const std::set<std::uint64_t> ids = IdSet(r);
    if (r.per_msd_counts.counts().size() == 2) {
      EXPECT_EQ(ids, (std::set<std::uint64_t>{1, 5}));
    } else {
      // Same MSD twice: its two best items.
      EXPECT_TRUE(ids == (std::set<std::uint64_t>{0, 1}) ||
                  ids == (std::set<std::uint64_t>{3, 5}));
    }
  }
  EXPECT_EQ(IdSet(SelectHybrid(pool, 6, 1.0, 0)).size(), 6u);
}

TEST(SelectTest, FullPoolForEveryStrategy) {
  const auto pool = SplitPool(7, 3);
  for (StrategyKind k :
       {StrategyKind::kRandom, StrategyKind::kUmt, StrategyKind::kUme,
        StrategyKind::kHighLoss, StrategyKind::kLowLoss, StrategyKind::kUmtLoss,
        StrategyKind::kUmeLoss}) {
    const SelectionResult r = Select(pool, SelectionStrategy::Named(k, 10, 2));
    EXPECT_EQ(IdSet(r).size(), 10u);
    EXPECT_EQ(r.per_msd_counts.counts(), oracle::TallyMsds([&] {
                std::vector<InflectionTriple> t;
                for (const auto& e : pool) t.push_back(e.triple);
                return t;
              }()));
  }
}

TEST(SelectTest, Deterministic) {
  const auto pool = SplitPool(60, 40);
  for (StrategyKind k : {StrategyKind::kRandom, StrategyKind::kUmt,
                         StrategyKind::kUmeLoss}) {
    const SelectionStrategy s = SelectionStrategy::Named(k, 30, 77);
    EXPECT_EQ(Select(pool, s).selected_ids, Select(pool, s).selected_ids);
  }
}

}  // namespace
}  // namespace morphaug

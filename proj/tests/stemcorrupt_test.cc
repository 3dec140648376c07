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

#include "morphaug/stemcorrupt.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "morphaug/status.h"
#include "test_oracles.h"

namespace morphaug {
namespace {

constexpr char kGold[] =
    "walk\twalked\tV;PST\n"
    "dog\tdogs\tN;PL\n"
    "schlagen\tgeschlagen\tV;PTCP\n"
    "koira\tkoiran\tN;GEN\n"
    "go\twent\tV;PST\n";

InflectionTriple Triple(std::u32string lemma, std::u32string form,
                        std::vector<std::string> msd) {
  return {ExampleId{0}, std::move(lemma), std::move(form), std::move(msd)};
}

TEST(LevenshteinTest, Basics) {
  EXPECT_EQ(Levenshtein(U"abc", U"abc"), 0u);
  EXPECT_EQ(Levenshtein(U"abc", U"abd"), 1u);
  EXPECT_EQ(Levenshtein(U"", U"abd"), 3u);
  EXPECT_EQ(Levenshtein(U"kitten", U"sitting"), 3u);
}

TEST(LevenshteinTest, MatchesMemoizedRecursion) {
  std::mt19937 gen(1);
  const std::u32string letters = U"abc";
  for (int i = 0; i < 500; ++i) {
    std::u32string a, b;
    for (std::size_t n = gen() % 11; n > 0; --n) a += letters[gen() % 3];
    for (std::size_t n = gen() % 11; n > 0; --n) b += letters[gen() % 3];
    EXPECT_EQ(Levenshtein(a, b), oracle::Levenshtein(a, b)) << i;
  }
}

TEST(CorruptTest, ThetaZeroIsIdentity) {
  const InflectionTriple t = Triple(U"walk", U"walked", {"V", "PST"});
  CorruptionConfig cfg;
  cfg.theta = 0.0;
  Rng rng(1);
  const SyntheticExample e =
      Corrupt(t, Segment(t.lemma, t.form), Alphabet({U'a', U'b'}), cfg, rng);
  EXPECT_EQ(e.triple, t);
  EXPECT_TRUE(e.substituted_lemma_positions.empty());
  EXPECT_EQ(e.lev_to_gold_target, 0u);
}

TEST(CorruptTest, ThetaOneChangesEveryStemPosition) {
  const InflectionTriple t = Triple(U"walk", U"walked", {"V", "PST"});
  const Segmentation seg = Segment(t.lemma, t.form);
  CorruptionConfig cfg;
  cfg.theta = 1.0;
  const Alphabet alphabet({U'a', U'd', U'e', U'k', U'l', U'w'});
  for (std::uint64_t s = 0; s < 200; ++s) {
    Rng rng(s);
    const SyntheticExample e = Corrupt(t, seg, alphabet, cfg, rng);
    ASSERT_EQ(e.substituted_lemma_positions.size(), 4u);
    for (std::size_t i = 0; i < 4; ++i) {
      EXPECT_NE(e.triple.lemma[i], t.lemma[i]);
      EXPECT_EQ(e.triple.lemma[i], e.triple.form[i]);
    }
    EXPECT_EQ(e.triple.form.substr(4), U"ed");
    EXPECT_EQ(e.triple.msd, t.msd);
    EXPECT_EQ(e.lev_to_gold_target, Levenshtein(e.triple.form, t.form));
  }
}

TEST(CorruptTest, MeanSubstitutedFractionAtHalf) {
  const InflectionTriple t = Triple(U"abcdef", U"abcdefxy", {"N"});
  const Segmentation seg = Segment(t.lemma, t.form);
  CorruptionConfig cfg;
  cfg.theta = 0.5;
  const Alphabet alphabet = Alphabet({U'a', U'b', U'c', U'd', U'e', U'f'});
  double total = 0.0;
  const int kTrials = 10000;
  for (int i = 0; i < kTrials; ++i) {
    Rng rng(DeriveSeed(99, static_cast<std::uint64_t>(i)));
    total += Corrupt(t, seg, alphabet, cfg, rng).substituted_lemma_positions.size();
  }
  const double mean_fraction = total / (6.0 * kTrials);
  const double sigma = std::sqrt(0.25 / (6.0 * kTrials));
  EXPECT_NEAR(mean_fraction, 0.5, 3 * sigma);
}

TEST(CorruptTest, AlphabetTooSmall) {
  const InflectionTriple t = Triple(U"aaa", U"aaab", {"N"});
  CorruptionConfig cfg;
  Rng rng(0);
  try {
    Corrupt(t, Segment(t.lemma, t.form), Alphabet({U'a'}), cfg, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAlphabetTooSmall);
  }
  cfg.exclude_original = false;
  EXPECT_NO_THROW(
      Corrupt(t, Segment(t.lemma, t.form), Alphabet({U'a'}), cfg, rng));
}

TEST(CorruptTest, RejectsForeignSegmentation) {
  const InflectionTriple t = Triple(U"walk", U"walked", {"V"});
  Rng rng(0);
  EXPECT_THROW(Corrupt(t, Segment(U"talk", U"talked"), Alphabet({U'a', U'b'}),
                       CorruptionConfig{}, rng),
               Error);
}

TEST(CorruptTest, InvalidTheta) {
  CorruptionConfig cfg;
  cfg.theta = 1.5;
  EXPECT_THROW(cfg.Validate(), Error);
  cfg.theta = std::nan("");
  EXPECT_THROW(cfg.Validate(), Error);
}

TEST(GeneratePoolTest, SingleTripleThetaZero) {
  const Dataset gold = ParseUnimorph("walk\twalked\tV;PST\n");
  CorruptionConfig cfg;
  cfg.theta = 0.0;
  const SyntheticPool pool = GeneratePool(gold, 1, ExtractAlphabet(gold), cfg);
  ASSERT_EQ(pool.size(), 1u);
  EXPECT_EQ(pool.examples[0].triple, gold.triples[0]);
}

TEST(GeneratePoolTest, SizeIdsAndRedraws) {
  const Dataset gold = ParseUnimorph(kGold);
  CorruptionConfig cfg;
  cfg.seed = 7;
  const SyntheticPool pool = GeneratePool(gold, 2000, ExtractAlphabet(gold), cfg);
  ASSERT_EQ(pool.size(), 2000u);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    EXPECT_EQ(pool.examples[i].triple.id.value, i);
    EXPECT_NE(pool.examples[i].source_id.value, 4u);  // go/went has no stem
  }
  EXPECT_EQ(pool.unalignable_gold_ids, std::vector<ExampleId>{ExampleId{4}});
  EXPECT_GT(pool.skipped_draws, 0u);
}

TEST(GeneratePoolTest, DeterministicAndPrefixStable) {
  const Dataset gold = ParseUnimorph(kGold);
  CorruptionConfig cfg;
  cfg.seed = 3;
  const Alphabet alphabet = ExtractAlphabet(gold);
  const SyntheticPool a = GeneratePool(gold, 300, alphabet, cfg);
  const SyntheticPool b = GeneratePool(gold, 300, alphabet, cfg);
  const SyntheticPool c = GeneratePool(gold, 100, alphabet, cfg);
  EXPECT_EQ(a.AsDataset(), b.AsDataset());
  for (std::size_t i = 0; i < c.size(); ++i) {
    EXPECT_EQ(a.examples[i].triple, c.examples[i].triple);
  }
  cfg.seed = 4;
  EXPECT_NE(GeneratePool(gold, 300, alphabet, cfg).AsDataset(), a.AsDataset());
}

TEST(GeneratePoolTest, NoAlignableTriples) {
  const Dataset gold = ParseUnimorph("go\twent\tV;PST\nbe\twas\tV;PST\n");
  try {
    GeneratePool(gold, 10, ExtractAlphabet(gold), CorruptionConfig{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoAlignableTriples);
  }
}

TEST(GeneratePoolTest, SubstitutionCountsFollowBinomial) {
  const Dataset gold = ParseUnimorph(kGold);
  const Alphabet alphabet = ExtractAlphabet(gold);
  for (double theta : {0.25, 0.5, 1.0}) {
    CorruptionConfig cfg;
    cfg.theta = theta;
    cfg.seed = 21;
    const SyntheticPool pool = GeneratePool(gold, 10000, alphabet, cfg);
    std::vector<double> observed(16, 0.0);
    std::vector<double> expected(16, 0.0);
    for (const SyntheticExample& e : pool.examples) {
      const std::size_t len = e.StemLength();
      observed[e.substituted_lemma_positions.size()] += 1;
      for (std::size_t k = 0; k <= len; ++k) {
        expected[k] += oracle::BinomialPmf(len, k, theta);
      }
    }
    EXPECT_GT(oracle::ChiSquarePValue(observed, expected), 0.01) << theta;
  }
}

}  // namespace
}  // namespace morphaug

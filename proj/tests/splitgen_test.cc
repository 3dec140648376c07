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

#include "morphaug/splitgen.h"

#include <random>
#include <set>

#include "gtest/gtest.h"
#include "morphaug/text.h"

namespace morphaug {
namespace {

TEST(LemmaSplitTest, DogAndCat) {
  const Dataset full = ParseUnimorph(
      "dog\tdogs\tN;PL\ndog\tdog\tN;SG\ncat\tcats\tN;PL\ncat\tcat\tN;SG\n");
  const Dataset train = ParseUnimorph("dog\tdogs\tN;PL\n");
  const LemmaSplit split = MakeLemmaSplit(full, train);
  ASSERT_EQ(split.test.size(), 2u);
  EXPECT_EQ(split.test.triples[0].lemma, U"cat");
  EXPECT_EQ(split.test.triples[0].id.value, 2u);
  EXPECT_EQ(split.excluded, 2u);
  EXPECT_FALSE(split.empty_test());
}

TEST(LemmaSplitTest, EmptyTrainKeepsEverything) {
  const Dataset full = ParseUnimorph("dog\tdogs\tN;PL\ncat\tcats\tN;PL\n");
  const LemmaSplit split = MakeLemmaSplit(full, Dataset{});
  EXPECT_EQ(split.test.triples, full.triples);
  EXPECT_EQ(split.excluded, 0u);
}

TEST(LemmaSplitTest, EverythingExcludedIsFlagged) {
  const Dataset full = ParseUnimorph("dog\tdogs\tN;PL\n");
  EXPECT_TRUE(MakeLemmaSplit(full, full).empty_test());
}

TEST(LemmaSplitTest, ComparesNormalizedLemmas) {
  // Decomposed vs precomposed a-umlaut.
  const Dataset full = ParseUnimorph("Ba\xcc\x88r\tBa\xcc\x88ren\tN;PL\n");
  const Dataset train = ParseUnimorph("B\xc3\xa4r\tB\xc3\xa4r\tN;SG\n");
  EXPECT_TRUE(MakeLemmaSplit(full, train).empty_test());
}

TEST(LemmaSplitTest, InvariantsOnRandomFixture) {
  std::mt19937 gen(23);
  std::vector<std::string> lemmas;
  for (int i = 0; i < 150; ++i) lemmas.push_back("lex" + std::to_string(i));
  std::string full_text;
  for (int i = 0; i < 1000; ++i) {
    const std::string& l = lemmas[gen() % lemmas.size()];
    full_text += l + "\t" + l + "s\tN;PL\n";
  }
  std::set<std::u32string> train_lemmas;
  std::string train_text;
  for (int i = 0; i < 100; ++i) {
    const std::string& l = lemmas[gen() % lemmas.size()];
    train_lemmas.insert(DecodeUtf8(l));
    train_text += l + "\t" + l + "\tN;SG\n";
  }
  const Dataset full = ParseUnimorph(full_text);
  const LemmaSplit split = MakeLemmaSplit(full, ParseUnimorph(train_text));

  std::vector<InflectionTriple> expected;
  for (const InflectionTriple& t : full.triples) {
    if (!train_lemmas.count(t.lemma)) expected.push_back(t);
  }
  EXPECT_EQ(split.test.triples, expected);
  EXPECT_EQ(split.train_lemmas, train_lemmas);
  EXPECT_EQ(split.test.size() + split.excluded, full.size());
  for (const InflectionTriple& t : split.test.triples) {
    EXPECT_FALSE(train_lemmas.count(t.lemma));
  }
}

}  // namespace
}  // namespace morphaug

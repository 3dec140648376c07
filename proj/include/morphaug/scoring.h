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

#ifndef MORPHAUG_SCORING_H_
#define MORPHAUG_SCORING_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "morphaug/corpus.h"
#include "morphaug/stemcorrupt.h"

namespace morphaug {

// Average negative log-likelihood of the target, in nats per token.
struct UncertaintyScore {
  ExampleId example_id;
  double nll = 0.0;
};

// Anything that can assign log p(y_j | y_<j, X, T) to each target character
// plus a final end-of-sequence token (|Y| + 1 values, natural log).
class Scorer {
 public:
  virtual ~Scorer() = default;
  virtual std::vector<double> TargetLogProbs(
      const InflectionTriple& triple) const = 0;
};

// Every token has probability 1 / vocab_size.
class UniformScorer final : public Scorer {
 public:
  explicit UniformScorer(std::size_t vocab_size);
  std::vector<double> TargetLogProbs(
      const InflectionTriple& triple) const override;

 private:
  double log_prob_;
};

struct NGramOptions {
  std::size_t order = 3;
  // Add-k smoothing constant.
  double smoothing = 0.1;
};

// Add-k smoothed character n-gram model over "X # T # Y EOS", where T
// contributes one token per feature. Contexts are padded with BOS, which is
// never predicted. Characters and features outside the training data map to
// UNK.
class NGramScorer final : public Scorer {
 public:
  using TokenId = std::uint32_t;
  static constexpr TokenId kBos = 0;
  static constexpr TokenId kSeparator = 1;
  static constexpr TokenId kEos = 2;
  static constexpr TokenId kUnk = 3;

  // Throws kEmptyDataset, or kInvalidArgument for order 0 or smoothing <= 0.
  static NGramScorer Train(const Dataset& gold, NGramOptions options = {});

  std::vector<double> TargetLogProbs(
      const InflectionTriple& triple) const override;

  // Size of the predicted vocabulary: separator, EOS, UNK, characters and
  // features.
  std::size_t vocab_size() const { return next_token_ - 1; }
  std::size_t order() const { return options_.order; }
  double smoothing() const { return options_.smoothing; }

  TokenId CharToken(char32_t c) const;
  TokenId FeatureToken(const std::string& feature) const;

  std::vector<TokenId> Encode(const InflectionTriple& triple) const;
  std::size_t CountUnknown(const InflectionTriple& triple) const;

  // p(next | last order-1 tokens of context); shorter contexts are BOS-padded.
  double Probability(std::span<const TokenId> context, TokenId next) const;
  // Probabilities of all predicted tokens, indexed by TokenId - 1.
  std::vector<double> Distribution(std::span<const TokenId> context) const;

 private:
  struct ContextStats {
    std::uint64_t total = 0;
    std::unordered_map<TokenId, std::uint64_t> next;
  };

  std::vector<TokenId> ContextKey(std::span<const TokenId> history) const;

  NGramOptions options_;
  std::map<char32_t, TokenId> char_tokens_;
  std::map<std::string, TokenId> feature_tokens_;
  TokenId next_token_ = kUnk + 1;
  std::map<std::vector<TokenId>, ContextStats> contexts_;
};

// nll = -(1/n) * sum_j log p(y_j | ...), n = |Y| + 1.
UncertaintyScore Score(const Scorer& scorer, const SyntheticExample& example);

// Fills every example's score.
void ScorePool(const Scorer& scorer, SyntheticPool& pool);

// Score TSV: "example_id<TAB>nll" with the shortest round-trip decimal.
void WriteScoresTsv(const SyntheticPool& pool, std::ostream& out);
std::string FormatScore(double nll);

// Reads a score TSV and checks it covers the pool exactly. Errors, in the
// order they are checked per line: kMalformedLine, kNonNumericScore (also
// for negative or non-finite values), kUnknownId, kDuplicateId; after the
// whole file, kMissingId naming the first uncovered id.
std::unordered_map<ExampleId, UncertaintyScore, ExampleIdHash>
LoadExternalScores(std::istream& in, const SyntheticPool& pool);

// Attaches loaded scores to the pool examples.
void AttachScores(
    const std::unordered_map<ExampleId, UncertaintyScore, ExampleIdHash>&
        scores,
    SyntheticPool& pool);

}  // namespace morphaug

#endif  // MORPHAUG_SCORING_H_

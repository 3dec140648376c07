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

#include "morphaug/scoring.h"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "morphaug/status.h"

namespace morphaug {
namespace {

double MeanNegated(const std::vector<double>& log_probs) {
  // Running mean keeps the result exact when every term is equal.
  double mean = 0.0;
  for (std::size_t i = 0; i < log_probs.size(); ++i) {
    mean += (-log_probs[i] - mean) / static_cast<double>(i + 1);
  }
  return mean;
}

}  // namespace

UniformScorer::UniformScorer(std::size_t vocab_size) {
  if (vocab_size == 0) {
    throw Error(ErrorCode::kInvalidArgument, "vocabulary must be nonempty");
  }
  log_prob_ = -std::log(static_cast<double>(vocab_size));
}

std::vector<double> UniformScorer::TargetLogProbs(
    const InflectionTriple& triple) const {
  return std::vector<double>(triple.form.size() + 1, log_prob_);
}

NGramScorer NGramScorer::Train(const Dataset& gold, NGramOptions options) {
  if (gold.empty()) {
    throw Error(ErrorCode::kEmptyDataset, "cannot train on an empty dataset");
  }
  if (options.order == 0) {
    throw Error(ErrorCode::kInvalidArgument, "n-gram order must be >= 1");
  }
  if (!(options.smoothing > 0.0) || !std::isfinite(options.smoothing)) {
    throw Error(ErrorCode::kInvalidArgument, "smoothing must be positive");
  }
  NGramScorer scorer;
  scorer.options_ = options;
  const Alphabet alphabet = ExtractAlphabet(gold);
  for (char32_t c : alphabet.chars()) {
    scorer.char_tokens_.emplace(c, scorer.next_token_++);
  }
  std::map<std::string, int> features;
  for (const InflectionTriple& t : gold.triples) {
    for (const std::string& f : t.msd) features.emplace(f, 0);
  }
  for (const auto& [feature, unused] : features) {
    scorer.feature_tokens_.emplace(feature, scorer.next_token_++);
  }
  for (const InflectionTriple& t : gold.triples) {
    const std::vector<TokenId> tokens = scorer.Encode(t);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      ContextStats& stats = scorer.contexts_[scorer.ContextKey(
          std::span<const TokenId>(tokens.data(), i))];
      ++stats.total;
      ++stats.next[tokens[i]];
    }
  }
  return scorer;
}

NGramScorer::TokenId NGramScorer::CharToken(char32_t c) const {
  const auto it = char_tokens_.find(c);
  return it == char_tokens_.end() ? kUnk : it->second;
}

NGramScorer::TokenId NGramScorer::FeatureToken(
    const std::string& feature) const {
  const auto it = feature_tokens_.find(feature);
  return it == feature_tokens_.end() ? kUnk : it->second;
}

std::vector<NGramScorer::TokenId> NGramScorer::Encode(
    const InflectionTriple& triple) const {
  std::vector<TokenId> tokens;
  tokens.reserve(triple.lemma.size() + triple.msd.size() +
                 triple.form.size() + 3);
  for (char32_t c : triple.lemma) tokens.push_back(CharToken(c));
  tokens.push_back(kSeparator);
  for (const std::string& f : triple.msd) tokens.push_back(FeatureToken(f));
  tokens.push_back(kSeparator);
  for (char32_t c : triple.form) tokens.push_back(CharToken(c));
  tokens.push_back(kEos);
  return tokens;
}

std::size_t NGramScorer::CountUnknown(const InflectionTriple& triple) const {
  std::size_t unknown = 0;
  for (TokenId t : Encode(triple)) unknown += t == kUnk;
  return unknown;
}

std::vector<NGramScorer::TokenId> NGramScorer::ContextKey(
    std::span<const TokenId> history) const {
  const std::size_t width = options_.order - 1;
  std::vector<TokenId> key(width, kBos);
  const std::size_t take = std::min(width, history.size());
  std::copy(history.end() - static_cast<std::ptrdiff_t>(take), history.end(),
            key.end() - static_cast<std::ptrdiff_t>(take));
  return key;
}

double NGramScorer::Probability(std::span<const TokenId> context,
                                TokenId next) const {
  const double k = options_.smoothing;
  const double vocab = static_cast<double>(vocab_size());
  const auto it = contexts_.find(ContextKey(context));
  if (it == contexts_.end()) return 1.0 / vocab;
  const ContextStats& stats = it->second;
  const auto hit = stats.next.find(next);
  const double count = hit == stats.next.end() ? 0.0 : hit->second;
  return (count + k) / (static_cast<double>(stats.total) + k * vocab);
}

std::vector<double> NGramScorer::Distribution(
    std::span<const TokenId> context) const {
  std::vector<double> probs(vocab_size());
  for (TokenId t = 1; t < next_token_; ++t) {
    probs[t - 1] = Probability(context, t);
  }
  return probs;
}

std::vector<double> NGramScorer::TargetLogProbs(
    const InflectionTriple& triple) const {
  const std::vector<TokenId> tokens = Encode(triple);
  const std::size_t targets = triple.form.size() + 1;
  std::vector<double> log_probs;
  log_probs.reserve(targets);
  for (std::size_t i = tokens.size() - targets; i < tokens.size(); ++i) {
    log_probs.push_back(std::log(Probability(
        std::span<const TokenId>(tokens.data(), i), tokens[i])));
  }
  return log_probs;
}

UncertaintyScore Score(const Scorer& scorer, const SyntheticExample& example) {
  return {example.triple.id,
          MeanNegated(scorer.TargetLogProbs(example.triple))};
}

void ScorePool(const Scorer& scorer, SyntheticPool& pool) {
  for (SyntheticExample& e : pool.examples) e.score = Score(scorer, e).nll;
}

std::string FormatScore(double nll) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), nll);
  return std::string(buffer, result.ptr);
}

void WriteScoresTsv(const SyntheticPool& pool, std::ostream& out) {
  for (const SyntheticExample& e : pool.examples) {
    if (!e.score) {
      throw Error(ErrorCode::kUnscoredPool,
                  "example " + std::to_string(e.triple.id.value) +
                      " has no score");
    }
    out << e.triple.id.value << '\t' << FormatScore(*e.score) << '\n';
  }
}

std::unordered_map<ExampleId, UncertaintyScore, ExampleIdHash>
LoadExternalScores(std::istream& in, const SyntheticPool& pool) {
  std::unordered_set<ExampleId, ExampleIdHash> known;
  for (const SyntheticExample& e : pool.examples) known.insert(e.triple.id);

  std::unordered_map<ExampleId, UncertaintyScore, ExampleIdHash> scores;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
    if (view.empty()) continue;
    const std::size_t tab = view.find('\t');
    if (tab == std::string_view::npos ||
        view.find('\t', tab + 1) != std::string_view::npos) {
      throw Error(ErrorCode::kMalformedLine,
                  "expected example_id<TAB>nll", line_no);
    }
    const std::string_view id_text = view.substr(0, tab);
    const std::string_view nll_text = view.substr(tab + 1);

    double nll = 0.0;
    const auto nll_parse =
        std::from_chars(nll_text.data(), nll_text.data() + nll_text.size(), nll);
    if (nll_parse.ec != std::errc() ||
        nll_parse.ptr != nll_text.data() + nll_text.size() ||
        !std::isfinite(nll) || nll < 0.0) {
      throw Error(ErrorCode::kNonNumericScore,
                  "score '" + std::string(nll_text) +
                      "' is not a finite nonnegative number",
                  line_no);
    }
    std::uint64_t raw_id = 0;
    const auto id_parse =
        std::from_chars(id_text.data(), id_text.data() + id_text.size(), raw_id);
    const ExampleId id{raw_id};
    if (id_parse.ec != std::errc() ||
        id_parse.ptr != id_text.data() + id_text.size() || !known.count(id)) {
      throw Error(ErrorCode::kUnknownId,
                  "id '" + std::string(id_text) + "' is not in the pool",
                  line_no);
    }
    if (!scores.emplace(id, UncertaintyScore{id, nll}).second) {
      throw Error(ErrorCode::kDuplicateId,
                  "id " + std::string(id_text) + " scored twice", line_no);
    }
  }
  for (const SyntheticExample& e : pool.examples) {
    if (!scores.count(e.triple.id)) {
      throw Error(ErrorCode::kMissingId,
                  "no score for id " + std::to_string(e.triple.id.value));
    }
  }
  return scores;
}

void AttachScores(
    const std::unordered_map<ExampleId, UncertaintyScore, ExampleIdHash>&
        scores,
    SyntheticPool& pool) {
  for (SyntheticExample& e : pool.examples) {
    const auto it = scores.find(e.triple.id);
    if (it == scores.end()) {
      throw Error(ErrorCode::kMissingId,
                  "no score for id " + std::to_string(e.triple.id.value));
    }
    e.score = it->second.nll;
  }
}

}  // namespace morphaug

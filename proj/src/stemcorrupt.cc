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

#include <algorithm>
#include <numeric>

#include "morphaug/status.h"

namespace morphaug {

void CorruptionConfig::Validate() const {
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "theta must lie in [0, 1]");
  }
  if (min_run == 0) {
    throw Error(ErrorCode::kInvalidArgument, "min_run must be positive");
  }
}

std::size_t SyntheticExample::StemLength() const {
  std::size_t length = 0;
  for (const StemRun& r : stem_runs) length += r.length;
  return length;
}

Segmentation SyntheticExample::GetSegmentation() const {
  return Segmentation(triple.lemma, triple.form, stem_runs);
}

Dataset SyntheticPool::AsDataset() const {
  Dataset dataset;
  dataset.name = name;
  dataset.triples.reserve(examples.size());
  for (const SyntheticExample& e : examples) dataset.triples.push_back(e.triple);
  return dataset;
}

bool SyntheticPool::FullyScored() const {
  return std::all_of(examples.begin(), examples.end(),
                     [](const SyntheticExample& e) { return e.score.has_value(); });
}

std::size_t Levenshtein(std::u32string_view a, std::u32string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diagonal = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t above = row[j];
      row[j] = std::min({above + 1, row[j - 1] + 1,
                         diagonal + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diagonal = above;
    }
  }
  return row[b.size()];
}

SyntheticExample Corrupt(const InflectionTriple& triple,
                         const Segmentation& segmentation,
                         const Alphabet& alphabet, const CorruptionConfig& cfg,
                         Rng& rng) {
  cfg.Validate();
  if (cfg.exclude_original && alphabet.size() < 2) {
    throw Error(ErrorCode::kAlphabetTooSmall,
                "need at least 2 characters to substitute without repeating "
                "the original");
  }
  if (segmentation.lemma() != triple.lemma ||
      segmentation.form() != triple.form) {
    throw Error(ErrorCode::kInvalidArgument,
                "segmentation does not belong to this triple");
  }
  SyntheticExample out;
  out.triple = triple;
  out.source_id = triple.id;
  out.stem_runs = segmentation.runs();
  const auto chars = alphabet.chars();
  for (const StemRun& run : segmentation.runs()) {
    for (std::size_t offset = 0; offset < run.length; ++offset) {
      if (!rng.Bernoulli(cfg.theta)) continue;
      const std::size_t lemma_pos = run.lemma_begin + offset;
      const std::size_t form_pos = run.form_begin + offset;
      const char32_t original = triple.lemma[lemma_pos];
      char32_t replacement;
      const std::size_t original_index = alphabet.IndexOf(original);
      if (cfg.exclude_original && original_index < chars.size()) {
        std::size_t pick = rng.UniformIndex(chars.size() - 1);
        if (pick >= original_index) ++pick;
        replacement = chars[pick];
      } else {
        replacement = chars[rng.UniformIndex(chars.size())];
      }
      out.triple.lemma[lemma_pos] = replacement;
      out.triple.form[form_pos] = replacement;
      out.substituted_lemma_positions.push_back(lemma_pos);
      out.substituted_form_positions.push_back(form_pos);
    }
  }
  out.lev_to_gold_target = Levenshtein(out.triple.form, triple.form);
  return out;
}

SyntheticPool GeneratePool(const Dataset& gold, std::size_t n,
                           const Alphabet& alphabet,
                           const CorruptionConfig& cfg) {
  cfg.Validate();
  std::vector<std::optional<Segmentation>> segmentations;
  segmentations.reserve(gold.size());
  for (const InflectionTriple& t : gold.triples) {
    try {
      segmentations.emplace_back(Segment(t.lemma, t.form, cfg.min_run));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNoStem) throw;
      segmentations.emplace_back(std::nullopt);
    }
  }
  return GeneratePool(gold, segmentations, n, alphabet, cfg);
}

SyntheticPool GeneratePool(
    const Dataset& gold,
    std::span<const std::optional<Segmentation>> segmentations, std::size_t n,
    const Alphabet& alphabet, const CorruptionConfig& cfg) {
  cfg.Validate();
  if (n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "pool size must be at least 1");
  }
  if (segmentations.size() != gold.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "one segmentation slot per gold triple is required");
  }
  SyntheticPool pool;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (!segmentations[i]) pool.unalignable_gold_ids.push_back(gold.triples[i].id);
  }
  if (pool.unalignable_gold_ids.size() == gold.size()) {
    throw Error(ErrorCode::kNoAlignableTriples,
                "no gold triple has a stem of length >= " +
                    std::to_string(cfg.min_run));
  }
  pool.examples.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(DeriveSeed(cfg.seed, static_cast<std::uint64_t>(i)));
    std::size_t source = rng.UniformIndex(gold.size());
    while (!segmentations[source]) {
      ++pool.skipped_draws;
      source = rng.UniformIndex(gold.size());
    }
    SyntheticExample example = Corrupt(gold.triples[source],
                                       *segmentations[source], alphabet, cfg,
                                       rng);
    example.triple.id = ExampleId{i};
    pool.examples.push_back(std::move(example));
  }
  return pool;
}

}  // namespace morphaug

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

#ifndef MORPHAUG_STEMCORRUPT_H_
#define MORPHAUG_STEMCORRUPT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "morphaug/alignment.h"
#include "morphaug/corpus.h"
#include "morphaug/random.h"

namespace morphaug {

struct CorruptionConfig {
  // Per-position substitution probability.
  double theta = 0.5;
  // Draw replacements from the alphabet minus the character being replaced,
  // so that theta is exactly the expected changed fraction.
  bool exclude_original = true;
  std::size_t min_run = kDefaultMinRun;
  std::uint64_t seed = 0;

  // Throws kInvalidArgument for theta outside [0, 1] or min_run == 0.
  void Validate() const;
};

struct SyntheticExample {
  // Corrupted lemma and form with the original MSD.
  InflectionTriple triple;
  ExampleId source_id;
  std::vector<std::size_t> substituted_lemma_positions;
  std::vector<std::size_t> substituted_form_positions;
  // Stem runs of the source pair; corruption preserves their positions.
  std::vector<StemRun> stem_runs;
  std::size_t lev_to_gold_target = 0;
  std::optional<double> score;

  std::size_t StemLength() const;
  Segmentation GetSegmentation() const;
};

struct SyntheticPool {
  std::string name = "syn-pool";
  std::vector<SyntheticExample> examples;
  // Draws that landed on a gold triple without a stem and were redrawn.
  std::size_t skipped_draws = 0;
  std::vector<ExampleId> unalignable_gold_ids;

  std::size_t size() const { return examples.size(); }
  Dataset AsDataset() const;
  bool FullyScored() const;
};

// Unit-cost edit distance.
std::size_t Levenshtein(std::u32string_view a, std::u32string_view b);

// Substitutes stem characters of `triple`. Each stem position flips an
// independent Bernoulli(theta); on success the lemma and form characters at
// that aligned position receive the same uniformly drawn replacement. Affixes
// and the MSD are untouched. Throws kAlphabetTooSmall when exclude_original is
// set and the alphabet cannot offer an alternative character.
SyntheticExample Corrupt(const InflectionTriple& triple,
                         const Segmentation& segmentation,
                         const Alphabet& alphabet, const CorruptionConfig& cfg,
                         Rng& rng);

// Builds n synthetic examples by sampling gold triples uniformly with
// replacement and corrupting them. Example i draws from its own stream
// DeriveSeed(cfg.seed, i), so the pool of size n is a prefix of any larger
// pool built with the same seed. Triples without a stem are redrawn; if no
// triple has one, throws kNoAlignableTriples.
SyntheticPool GeneratePool(const Dataset& gold, std::size_t n,
                           const Alphabet& alphabet,
                           const CorruptionConfig& cfg);

// Same, with the segmentation of every gold triple supplied by the caller.
// A disengaged entry marks a triple without a stem.
SyntheticPool GeneratePool(
    const Dataset& gold,
    std::span<const std::optional<Segmentation>> segmentations, std::size_t n,
    const Alphabet& alphabet, const CorruptionConfig& cfg);

}  // namespace morphaug

#endif  // MORPHAUG_STEMCORRUPT_H_

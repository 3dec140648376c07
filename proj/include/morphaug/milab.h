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

#ifndef MORPHAUG_MILAB_H_
#define MORPHAUG_MILAB_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "morphaug/alignment.h"
#include "morphaug/corpus.h"
#include "morphaug/stats.h"

namespace morphaug {

// ---------------------------------------------------------------------------
// Toy concatenative grammars.

enum class VowelClass { kNone, kBack, kFront };

// Turkish-style front/back classes: a ı o u are back, e i ö ü are front.
VowelClass ToyVowelClass(char32_t c);

// Rewrites the suffix vowels into the class of the last classed vowel of
// `stem` (a<->e, ı<->i, o<->ö, u<->ü). A stem without such a vowel leaves the
// suffix unchanged.
std::u32string HarmonizeSuffix(std::u32string_view stem,
                               std::u32string_view suffix);

// Suffixing morphology: form = stem ++ affix_map[T], lemma = stem ++
// lemma_affixes[stem_class[stem]]. With harmony on, the suffix is run through
// HarmonizeSuffix against the stem.
struct ToyGrammar {
  std::vector<std::u32string> stems;
  std::vector<std::size_t> stem_class;
  std::vector<std::u32string> lemma_affixes;
  std::map<std::string, std::u32string> affix_map;
  bool harmony = false;

  // Throws kInvalidArgument: stems must be >= 3 characters, distinct MSDs
  // must carry distinct affixes, and every stem needs a valid class.
  void Validate() const;

  std::u32string Lemma(std::size_t stem_index) const;
  std::u32string Inflect(std::size_t stem_index, const std::string& msd) const;
};

struct ToyGrammarOptions {
  std::size_t num_stems = 50;
  std::size_t num_msds = 5;
  // Lemma affixes are consonant-only, so they carry no harmony class.
  std::size_t num_lemma_classes = 2;
  bool harmony = false;
  std::uint64_t seed = 0;
};

// Stems, affixes and lemma affixes over the four letters {a, d, e, l}.
// Stems are distinct strings of the shortest length >= 3 that fits
// num_stems; affix templates use 'a' as their only vowel.
ToyGrammar MakeToyGrammar(const ToyGrammarOptions& options);

struct ToyDataset {
  Dataset data;
  // Ground-truth boundaries: the stem is one run at the start of both sides.
  std::vector<Segmentation> segmentations;
};

// n triples with stem and MSD drawn independently and uniformly.
ToyDataset GenerateGold(const ToyGrammar& grammar, std::size_t n,
                        std::uint64_t seed);

// Fraction of triples whose alignment-derived stem (min run 3) differs from
// the ground-truth stem, counting NoStem as a disagreement.
double AlignmentDisagreement(const ToyDataset& toy);

// ---------------------------------------------------------------------------
// Plug-in mutual information.

enum class MiPair {
  kStemTag,          // I(Y_stem; T)
  kStemLemmaAffix,   // I(Y_stem; X_affix)
  kAffixStem,        // I(Y_affix; Y_stem)
  kAffixLemmaStem,   // I(Y_affix; X_stem)
};
inline constexpr std::array<MiPair, 4> kAllMiPairs = {
    MiPair::kStemTag, MiPair::kStemLemmaAffix, MiPair::kAffixStem,
    MiPair::kAffixLemmaStem};
std::string_view MiPairName(MiPair pair);

using CategoricalPair = std::pair<std::uint32_t, std::uint32_t>;

struct MiEstimate {
  MiPair pair = MiPair::kStemTag;
  double bits = 0.0;
  std::size_t n_samples = 0;
  double lambda = 1.0;
};

// sum p(a,b) log2 [p(a,b) / (p(a) p(b))] over the empirical joint. Never
// negative. Empty input gives 0.
double PluginMutualInformationBits(std::span<const CategoricalPair> samples);

MiEstimate EstimateMi(std::span<const CategoricalPair> samples,
                      MiPair pair = MiPair::kStemTag, double lambda = 1.0);

// Exact mutual information of a joint table of nonnegative weights, which
// are normalized first.
double MutualInformationBits(const std::vector<std::vector<double>>& joint);

// I <= lambda * I_G + (1 - lambda) * I_A + epsilon.
bool ConvexityBoundHolds(double gold_bits, double synthetic_bits,
                         double lambda, double mixture_bits,
                         double epsilon = 0.02);

// Gold/synthetic blend; lambda is always derived from the counts.
struct MixtureSpec {
  std::size_t gold_count = 0;
  std::size_t syn_count = 0;

  double lambda() const {
    return static_cast<double>(gold_count) /
           static_cast<double>(gold_count + syn_count);
  }
};

// ---------------------------------------------------------------------------
// Factorization of P(Y | X, T).

struct FactorizationGap {
  // Mean over qualifying (X, T) cells of the total variation distance between
  // P(Y | X, T) and P(Y_affix | X_affix, T) * P(Y_stem | X_stem).
  double tv_distance = 0.0;
  std::size_t cells_used = 0;
  // Cells with fewer than min_cell observations.
  std::size_t cells_skipped = 0;

  double skip_rate() const {
    const std::size_t all = cells_used + cells_skipped;
    return all == 0 ? 0.0 : static_cast<double>(cells_skipped) / all;
  }
};

// Throws kInsufficientSupport when no cell reaches min_cell observations.
FactorizationGap ComputeFactorizationGap(
    const Dataset& dataset, std::span<const Segmentation> segmentations,
    std::size_t min_cell = 5);

// ---------------------------------------------------------------------------
// MI decay under growing amounts of synthetic data.

struct MilabOptions {
  std::size_t gold_n = 500;
  std::vector<std::size_t> syn_sizes = {0, 500, 5000, 50000};
  double theta = 1.0;
  // Replacements are drawn from the whole alphabet so the synthetic stems are
  // independent of everything else.
  bool exclude_original = false;
  std::uint64_t seed = 0;
  std::size_t bootstrap_resamples = 200;
  double level = 0.95;
  double epsilon = 0.02;
  std::size_t min_cell = 5;
};

struct MiCurveEntry {
  MiPair pair = MiPair::kStemTag;
  // Mixture estimate with its bootstrap interval.
  BootstrapCi mixture;
  // I_G on the gold slice and I_A on the synthetic slice (absent without
  // synthetic data).
  double gold_bits = 0.0;
  std::optional<double> synthetic_bits;
  double bound = 0.0;
  bool convexity_holds = false;
};

struct CurvePoint {
  MixtureSpec mixture;
  std::array<MiCurveEntry, 4> mi;
  std::optional<FactorizationGap> gap;
};

struct MiDecayCurve {
  std::vector<CurvePoint> points;
  MilabOptions options;
  double alignment_disagreement = 0.0;
};

// Gold data from `grammar`, one synthetic pool of the largest requested size
// (smaller sizes are its prefixes) built by corrupting the ground-truth stems,
// and the four MIs, convexity verdicts and factorization gap per size.
MiDecayCurve ComputeMiDecayCurve(const ToyGrammar& grammar,
                                 const MilabOptions& options);

}  // namespace morphaug

#endif  // MORPHAUG_MILAB_H_

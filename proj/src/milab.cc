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

#include "morphaug/milab.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <unordered_map>

#include "morphaug/random.h"
#include "morphaug/status.h"
#include "morphaug/stemcorrupt.h"

namespace morphaug {
namespace {

constexpr char32_t kToyLetters[] = {U'a', U'd', U'e', U'l'};
constexpr char32_t kToyConsonants[] = {U'd', U'l'};
constexpr char32_t kToyAffixLetters[] = {U'a', U'd', U'l'};
constexpr const char* kToyCaseNames[] = {"N;NOM", "N;ACC", "N;GEN", "N;DAT",
                                         "N;LOC", "N;ABL", "N;INS", "N;ESS"};

struct VowelPair {
  char32_t back;
  char32_t front;
};
constexpr VowelPair kVowelPairs[] = {
    {U'a', U'e'}, {U'ı', U'i'}, {U'o', U'ö'}, {U'u', U'ü'}};

// All strings of `length` over `letters`, in lexicographic order.
std::vector<std::u32string> AllStrings(std::span<const char32_t> letters,
                                       std::size_t length) {
  std::vector<std::u32string> out = {U""};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<std::u32string> next;
    next.reserve(out.size() * letters.size());
    for (const std::u32string& prefix : out) {
      for (char32_t c : letters) next.push_back(prefix + c);
    }
    out = std::move(next);
  }
  return out;
}

std::uint64_t Pack(std::uint32_t a, std::uint32_t b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

// Dense codes for the values of one variable.
template <typename Key>
class Interner {
 public:
  std::uint32_t Code(const Key& key) {
    const auto [it, inserted] =
        codes_.emplace(key, static_cast<std::uint32_t>(codes_.size()));
    return it->second;
  }

 private:
  std::unordered_map<Key, std::uint32_t> codes_;
};

// One example reduced to the codes of the variables the lab looks at.
struct EncodedRow {
  std::uint32_t lemma;
  std::uint32_t msd;
  std::uint32_t lemma_stem;
  std::uint32_t lemma_affix;
  std::uint32_t form_stem;
  std::uint32_t form_affix;
};

class RowEncoder {
 public:
  EncodedRow Encode(const InflectionTriple& triple,
                    const Segmentation& segmentation) {
    return {lemma_.Code(triple.lemma),       msd_.Code(triple.MsdKey()),
            lemma_stem_.Code(segmentation.LemmaStem()),
            lemma_affix_.Code(segmentation.LemmaAffix()),
            form_stem_.Code(segmentation.FormStem()),
            form_affix_.Code(segmentation.FormAffix())};
  }

 private:
  Interner<std::u32string> lemma_;
  Interner<std::string> msd_;
  Interner<std::u32string> lemma_stem_;
  Interner<std::u32string> lemma_affix_;
  Interner<std::u32string> form_stem_;
  Interner<std::u32string> form_affix_;
};

CategoricalPair Project(const EncodedRow& row, MiPair pair) {
  switch (pair) {
    case MiPair::kStemTag: return {row.form_stem, row.msd};
    case MiPair::kStemLemmaAffix: return {row.form_stem, row.lemma_affix};
    case MiPair::kAffixStem: return {row.form_affix, row.form_stem};
    case MiPair::kAffixLemmaStem: return {row.form_affix, row.lemma_stem};
  }
  return {0, 0};
}

template <typename RowIndex>
double MiOverRows(std::span<const EncodedRow> rows, RowIndex&& indices,
                  std::size_t count, MiPair pair) {
  std::vector<CategoricalPair> samples;
  samples.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    samples.push_back(Project(rows[indices(i)], pair));
  }
  return PluginMutualInformationBits(samples);
}

double MiOverSlice(std::span<const EncodedRow> rows, MiPair pair) {
  return MiOverRows(rows, [](std::size_t i) { return i; }, rows.size(), pair);
}

FactorizationGap GapFromRows(std::span<const EncodedRow> rows,
                             std::size_t min_cell) {
  struct Cell {
    std::size_t total = 0;
    std::uint32_t lemma_stem = 0;
    std::uint32_t lemma_affix = 0;
    std::uint32_t msd = 0;
    std::unordered_map<std::uint64_t, std::size_t> outcomes;
  };
  struct Conditional {
    std::size_t total = 0;
    std::unordered_map<std::uint32_t, std::size_t> outcomes;

    double P(std::uint32_t value) const {
      const auto it = outcomes.find(value);
      return it == outcomes.end()
                 ? 0.0
                 : static_cast<double>(it->second) / static_cast<double>(total);
    }
  };

  std::unordered_map<std::uint64_t, Cell> cells;
  std::unordered_map<std::uint32_t, Conditional> stem_given_stem;
  std::unordered_map<std::uint64_t, Conditional> affix_given_affix_tag;
  for (const EncodedRow& row : rows) {
    Cell& cell = cells[Pack(row.lemma, row.msd)];
    if (cell.total == 0) {
      cell.lemma_stem = row.lemma_stem;
      cell.lemma_affix = row.lemma_affix;
      cell.msd = row.msd;
    }
    ++cell.total;
    ++cell.outcomes[Pack(row.form_stem, row.form_affix)];
    Conditional& stem = stem_given_stem[row.lemma_stem];
    ++stem.total;
    ++stem.outcomes[row.form_stem];
    Conditional& affix = affix_given_affix_tag[Pack(row.lemma_affix, row.msd)];
    ++affix.total;
    ++affix.outcomes[row.form_affix];
  }

  std::vector<std::uint64_t> keys;
  keys.reserve(cells.size());
  for (const auto& [key, cell] : cells) keys.push_back(key);
  std::sort(keys.begin(), keys.end());

  FactorizationGap gap;
  double tv_sum = 0.0;
  for (std::uint64_t key : keys) {
    const Cell& cell = cells.at(key);
    if (cell.total < min_cell) {
      ++gap.cells_skipped;
      continue;
    }
    const Conditional& stem = stem_given_stem.at(cell.lemma_stem);
    const Conditional& affix =
        affix_given_affix_tag.at(Pack(cell.lemma_affix, cell.msd));
    std::vector<std::uint64_t> outcomes;
    for (const auto& [y, count] : cell.outcomes) outcomes.push_back(y);
    std::sort(outcomes.begin(), outcomes.end());
    double abs_sum = 0.0;
    double product_mass_on_support = 0.0;
    for (std::uint64_t y : outcomes) {
      const double p = static_cast<double>(cell.outcomes.at(y)) /
                       static_cast<double>(cell.total);
      const auto form_stem = static_cast<std::uint32_t>(y >> 32);
      const auto form_affix = static_cast<std::uint32_t>(y & 0xffffffffu);
      const double q = affix.P(form_affix) * stem.P(form_stem);
      abs_sum += std::abs(p - q);
      product_mass_on_support += q;
    }
    // The product distribution's mass outside the cell's observed support.
    abs_sum += std::max(0.0, 1.0 - product_mass_on_support);
    tv_sum += 0.5 * abs_sum;
    ++gap.cells_used;
  }
  if (gap.cells_used == 0) {
    throw Error(ErrorCode::kInsufficientSupport,
                "no (lemma, MSD) cell has at least " +
                    std::to_string(min_cell) + " observations");
  }
  gap.tv_distance = std::clamp(tv_sum / gap.cells_used, 0.0, 1.0);
  return gap;
}

}  // namespace

VowelClass ToyVowelClass(char32_t c) {
  for (const VowelPair& pair : kVowelPairs) {
    if (c == pair.back) return VowelClass::kBack;
    if (c == pair.front) return VowelClass::kFront;
  }
  return VowelClass::kNone;
}

std::u32string HarmonizeSuffix(std::u32string_view stem,
                               std::u32string_view suffix) {
  VowelClass governing = VowelClass::kNone;
  for (auto it = stem.rbegin(); it != stem.rend(); ++it) {
    governing = ToyVowelClass(*it);
    if (governing != VowelClass::kNone) break;
  }
  std::u32string out(suffix);
  if (governing == VowelClass::kNone) return out;
  for (char32_t& c : out) {
    for (const VowelPair& pair : kVowelPairs) {
      if (c == pair.back || c == pair.front) {
        c = governing == VowelClass::kBack ? pair.back : pair.front;
        break;
      }
    }
  }
  return out;
}

void ToyGrammar::Validate() const {
  if (stems.empty() || affix_map.empty() || lemma_affixes.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "toy grammar needs stems, affixes and a lemma affix");
  }
  if (stem_class.size() != stems.size()) {
    throw Error(ErrorCode::kInvalidArgument, "one class per stem is required");
  }
  for (std::size_t i = 0; i < stems.size(); ++i) {
    if (stems[i].size() < kDefaultMinRun) {
      throw Error(ErrorCode::kInvalidArgument,
                  "toy stems must be at least 3 characters long");
    }
    if (stem_class[i] >= lemma_affixes.size()) {
      throw Error(ErrorCode::kInvalidArgument, "stem class out of range");
    }
  }
  std::set<std::u32string> affixes;
  for (const auto& [msd, affix] : affix_map) {
    ParseMsd(msd);
    if (!affixes.insert(affix).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "two MSDs share the affix of '" + msd + "'");
    }
  }
}

std::u32string ToyGrammar::Lemma(std::size_t stem_index) const {
  return stems.at(stem_index) + lemma_affixes.at(stem_class.at(stem_index));
}

std::u32string ToyGrammar::Inflect(std::size_t stem_index,
                                   const std::string& msd) const {
  const std::u32string& stem = stems.at(stem_index);
  const std::u32string& affix = affix_map.at(msd);
  return stem + (harmony ? HarmonizeSuffix(stem, affix) : affix);
}

ToyGrammar MakeToyGrammar(const ToyGrammarOptions& options) {
  if (options.num_stems == 0 || options.num_msds == 0 ||
      options.num_lemma_classes == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "toy grammar needs at least one stem, MSD and lemma class");
  }
  ToyGrammar grammar;
  grammar.harmony = options.harmony;

  std::size_t length = kDefaultMinRun;
  while (std::pow(4.0, static_cast<double>(length)) <
         static_cast<double>(options.num_stems)) {
    ++length;
  }
  std::vector<std::u32string> candidates = AllStrings(kToyLetters, length);
  Rng rng(DeriveSeed(options.seed, "toy-grammar"));
  for (std::size_t i = 0; i < options.num_stems; ++i) {
    std::swap(candidates[i], candidates[i + rng.UniformIndex(candidates.size() - i)]);
    grammar.stems.push_back(candidates[i]);
    grammar.stem_class.push_back(i % options.num_lemma_classes);
  }

  for (std::size_t len = 1; grammar.lemma_affixes.size() < options.num_lemma_classes; ++len) {
    for (const std::u32string& s : AllStrings(kToyConsonants, len)) {
      if (grammar.lemma_affixes.size() == options.num_lemma_classes) break;
      grammar.lemma_affixes.push_back(s);
    }
  }

  std::size_t msd_index = 0;
  for (std::size_t len = 1; msd_index < options.num_msds; ++len) {
    for (const std::u32string& s : AllStrings(kToyAffixLetters, len)) {
      if (msd_index == options.num_msds) break;
      if (s.find(U'a') == std::u32string::npos) continue;
      const std::string name =
          msd_index < std::size(kToyCaseNames)
              ? kToyCaseNames[msd_index]
              : "N;K" + std::to_string(msd_index);
      grammar.affix_map.emplace(name, s);
      ++msd_index;
    }
  }
  grammar.Validate();
  return grammar;
}

ToyDataset GenerateGold(const ToyGrammar& grammar, std::size_t n,
                        std::uint64_t seed) {
  grammar.Validate();
  std::vector<std::string> msds;
  for (const auto& [msd, affix] : grammar.affix_map) msds.push_back(msd);
  Rng rng(seed);
  ToyDataset toy;
  toy.data.name = "toy-gold";
  toy.data.triples.reserve(n);
  toy.segmentations.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t stem = rng.UniformIndex(grammar.stems.size());
    const std::string& msd = msds[rng.UniformIndex(msds.size())];
    InflectionTriple triple{ExampleId{i}, grammar.Lemma(stem),
                            grammar.Inflect(stem, msd), ParseMsd(msd)};
    toy.segmentations.emplace_back(
        triple.lemma, triple.form,
        std::vector<StemRun>{{0, 0, grammar.stems[stem].size()}});
    toy.data.triples.push_back(std::move(triple));
  }
  return toy;
}

double AlignmentDisagreement(const ToyDataset& toy) {
  if (toy.data.empty()) return 0.0;
  std::size_t disagree = 0;
  for (std::size_t i = 0; i < toy.data.size(); ++i) {
    const InflectionTriple& t = toy.data.triples[i];
    try {
      if (Segment(t.lemma, t.form).runs() != toy.segmentations[i].runs()) {
        ++disagree;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNoStem) throw;
      ++disagree;
    }
  }
  return static_cast<double>(disagree) / static_cast<double>(toy.data.size());
}

std::string_view MiPairName(MiPair pair) {
  switch (pair) {
    case MiPair::kStemTag: return "I(Y_stem;T)";
    case MiPair::kStemLemmaAffix: return "I(Y_stem;X_affix)";
    case MiPair::kAffixStem: return "I(Y_affix;Y_stem)";
    case MiPair::kAffixLemmaStem: return "I(Y_affix;X_stem)";
  }
  return "unknown";
}

double PluginMutualInformationBits(std::span<const CategoricalPair> samples) {
  if (samples.empty()) return 0.0;
  std::uint32_t max_a = 0;
  std::uint32_t max_b = 0;
  for (const auto& [a, b] : samples) {
    max_a = std::max(max_a, a);
    max_b = std::max(max_b, b);
  }
  std::vector<std::uint32_t> count_a(max_a + std::size_t{1}, 0);
  std::vector<std::uint32_t> count_b(max_b + std::size_t{1}, 0);
  for (const auto& [a, b] : samples) {
    ++count_a[a];
    ++count_b[b];
  }
  const double n = static_cast<double>(samples.size());
  double sum = 0.0;
  const auto add_cell = [&](std::uint32_t a, std::uint32_t b, double joint) {
    sum += joint * std::log2(joint * n /
                             (static_cast<double>(count_a[a]) * count_b[b]));
  };

  const std::size_t width = max_b + std::size_t{1};
  if ((max_a + std::size_t{1}) * width <= (std::size_t{1} << 22)) {
    std::vector<std::uint32_t> joint((max_a + std::size_t{1}) * width, 0);
    for (const auto& [a, b] : samples) ++joint[a * width + b];
    // Visit each occupied cell once, in first-occurrence order.
    for (const auto& [a, b] : samples) {
      std::uint32_t& cell = joint[a * width + b];
      if (cell == 0) continue;
      add_cell(a, b, cell);
      cell = 0;
    }
  } else {
    std::vector<std::uint64_t> keys;
    keys.reserve(samples.size());
    for (const auto& [a, b] : samples) keys.push_back(Pack(a, b));
    std::sort(keys.begin(), keys.end());
    for (std::size_t i = 0; i < keys.size();) {
      std::size_t j = i;
      while (j < keys.size() && keys[j] == keys[i]) ++j;
      add_cell(static_cast<std::uint32_t>(keys[i] >> 32),
               static_cast<std::uint32_t>(keys[i] & 0xffffffffu),
               static_cast<double>(j - i));
      i = j;
    }
  }
  return std::max(0.0, sum / n);
}

MiEstimate EstimateMi(std::span<const CategoricalPair> samples, MiPair pair,
                      double lambda) {
  return {pair, PluginMutualInformationBits(samples), samples.size(), lambda};
}

double MutualInformationBits(const std::vector<std::vector<double>>& joint) {
  double total = 0.0;
  std::vector<double> row_mass(joint.size(), 0.0);
  std::vector<double> col_mass;
  for (std::size_t a = 0; a < joint.size(); ++a) {
    if (joint[a].size() > col_mass.size()) col_mass.resize(joint[a].size(), 0.0);
    for (std::size_t b = 0; b < joint[a].size(); ++b) {
      if (joint[a][b] < 0.0) {
        throw Error(ErrorCode::kInvalidArgument, "negative joint weight");
      }
      row_mass[a] += joint[a][b];
      col_mass[b] += joint[a][b];
      total += joint[a][b];
    }
  }
  if (total <= 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "joint table has no mass");
  }
  double bits = 0.0;
  for (std::size_t a = 0; a < joint.size(); ++a) {
    for (std::size_t b = 0; b < joint[a].size(); ++b) {
      const double p = joint[a][b] / total;
      if (p == 0.0) continue;
      bits += p * std::log2(p / ((row_mass[a] / total) * (col_mass[b] / total)));
    }
  }
  return std::max(0.0, bits);
}

bool ConvexityBoundHolds(double gold_bits, double synthetic_bits,
                         double lambda, double mixture_bits, double epsilon) {
  return mixture_bits <=
         lambda * gold_bits + (1.0 - lambda) * synthetic_bits + epsilon;
}

FactorizationGap ComputeFactorizationGap(
    const Dataset& dataset, std::span<const Segmentation> segmentations,
    std::size_t min_cell) {
  if (segmentations.size() != dataset.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "every triple needs a segmentation");
  }
  RowEncoder encoder;
  std::vector<EncodedRow> rows;
  rows.reserve(dataset.size());
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    rows.push_back(encoder.Encode(dataset.triples[i], segmentations[i]));
  }
  return GapFromRows(rows, min_cell);
}

MiDecayCurve ComputeMiDecayCurve(const ToyGrammar& grammar,
                                 const MilabOptions& options) {
  grammar.Validate();
  if (options.gold_n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "gold_n must be at least 1");
  }
  if (options.syn_sizes.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no synthetic sizes requested");
  }

  MiDecayCurve curve;
  curve.options = options;
  const ToyDataset gold =
      GenerateGold(grammar, options.gold_n, DeriveSeed(options.seed, "gold"));
  curve.alignment_disagreement = AlignmentDisagreement(gold);

  RowEncoder encoder;
  std::vector<EncodedRow> rows;
  for (std::size_t i = 0; i < gold.data.size(); ++i) {
    rows.push_back(encoder.Encode(gold.data.triples[i], gold.segmentations[i]));
  }
  const std::size_t max_syn =
      *std::max_element(options.syn_sizes.begin(), options.syn_sizes.end());
  if (max_syn > 0) {
    CorruptionConfig cfg;
    cfg.theta = options.theta;
    cfg.exclude_original = options.exclude_original;
    cfg.min_run = 1;
    cfg.seed = DeriveSeed(options.seed, "corrupt");
    std::vector<std::optional<Segmentation>> segmentations(
        gold.segmentations.begin(), gold.segmentations.end());
    const SyntheticPool pool = GeneratePool(
        gold.data, segmentations, max_syn, ExtractAlphabet(gold.data), cfg);
    for (const SyntheticExample& e : pool.examples) {
      rows.push_back(encoder.Encode(e.triple, e.GetSegmentation()));
    }
  }

  const std::span<const EncodedRow> all_rows(rows);
  const std::span<const EncodedRow> gold_rows = all_rows.first(options.gold_n);
  std::array<double, 4> gold_bits;
  for (std::size_t p = 0; p < kAllMiPairs.size(); ++p) {
    gold_bits[p] = MiOverSlice(gold_rows, kAllMiPairs[p]);
  }

  const std::uint64_t bootstrap_seed = DeriveSeed(options.seed, "bootstrap");
  for (std::size_t syn : options.syn_sizes) {
    CurvePoint point;
    point.mixture = {options.gold_n, syn};
    const double lambda = point.mixture.lambda();
    const std::span<const EncodedRow> mixture =
        all_rows.first(options.gold_n + syn);
    const std::span<const EncodedRow> synthetic =
        all_rows.subspan(options.gold_n, syn);
    BootstrapOptions bootstrap;
    bootstrap.resamples = options.bootstrap_resamples;
    bootstrap.level = options.level;
    bootstrap.seed = DeriveSeed(bootstrap_seed, static_cast<std::uint64_t>(syn));

    for (std::size_t p = 0; p < kAllMiPairs.size(); ++p) {
      const MiPair pair = kAllMiPairs[p];
      MiCurveEntry& entry = point.mi[p];
      entry.pair = pair;
      entry.gold_bits = gold_bits[p];
      if (syn > 0) entry.synthetic_bits = MiOverSlice(synthetic, pair);
      entry.mixture = BootstrapPercentileIndexed(
          mixture.size(),
          [&](std::span<const std::size_t> picked) {
            return MiOverRows(
                mixture, [&](std::size_t i) { return picked[i]; },
                picked.size(), pair);
          },
          std::string(MiPairName(pair)), bootstrap);
      entry.bound = lambda * entry.gold_bits +
                    (1.0 - lambda) * entry.synthetic_bits.value_or(0.0);
      entry.convexity_holds =
          ConvexityBoundHolds(entry.gold_bits, entry.synthetic_bits.value_or(0.0),
                              lambda, entry.mixture.point, options.epsilon);
    }
    try {
      point.gap = GapFromRows(mixture, options.min_cell);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInsufficientSupport) throw;
    }
    curve.points.push_back(std::move(point));
  }
  return curve;
}

}  // namespace morphaug

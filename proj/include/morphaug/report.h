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

#ifndef MORPHAUG_REPORT_H_
#define MORPHAUG_REPORT_H_

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "morphaug/alignment.h"
#include "morphaug/selection.h"
#include "morphaug/stats.h"
#include "morphaug/stemcorrupt.h"

namespace morphaug {

// Pearson correlations of the per-example NLL against corruption and length.
struct CorrelationReport {
  double pearson_nll_levenshtein = 0.0;
  double pearson_nll_stem_length = 0.0;
  double pearson_nll_target_length = 0.0;
  std::size_t n = 0;
};

enum class CorrelationVariable { kLevenshtein, kStemLength, kTargetLength };
std::string_view CorrelationVariableName(CorrelationVariable variable);

// r(nll, variable) over the scored pool. Throws kUnscoredPool,
// kTooFewSamples below 3 examples and kZeroVariance naming the constant
// variable.
double ComputeCorrelation(const SyntheticPool& pool,
                          CorrelationVariable variable);
CorrelationReport ComputeCorrelations(const SyntheticPool& pool);

// Most frequent MSD of a selection and its count, ties to the
// lexicographically smallest MSD. Throws kEmptySelection.
std::pair<std::string, std::size_t> MsdModeFrequency(
    const SelectionResult& selection);

// Vowel -> class label. Characters without an entry are consonants; vowels
// labelled "neutral" never govern and never violate.
class HarmonyConfig {
 public:
  static constexpr std::string_view kNeutral = "neutral";

  HarmonyConfig() = default;
  explicit HarmonyConfig(std::map<char32_t, std::string> classes);

  const std::map<char32_t, std::string>& classes() const { return classes_; }
  bool empty() const { return classes_.empty(); }
  // Class of `c`, or nullptr for consonants and neutral vowels.
  const std::string* Governing(char32_t c) const;

 private:
  std::map<char32_t, std::string> classes_;
};

// "vowel<TAB>class" per line; blank lines and lines starting with '#' are
// skipped. Throws kMalformedLine for anything else that is not a single
// character followed by a non-empty label, or a vowel listed twice.
HarmonyConfig ParseHarmonyTsv(std::istream& in);

// True iff some classed form-affix vowel disagrees with the class of the
// last classed vowel of the form stem. No governing stem vowel means no
// violation.
bool ViolatesHarmony(const Segmentation& segmentation,
                     const HarmonyConfig& config);

struct HarmonyOptions {
  std::size_t resamples = 10000;
  double level = 0.95;
  std::uint64_t seed = 0;
};

struct HarmonyViolationStats {
  std::size_t n = 0;
  std::size_t violating = 0;
  double violation_rate = 0.0;
  std::optional<double> mean_nll_violating;
  std::optional<double> mean_nll_adhering;
  // Violating minus adhering, present when both groups have >= 2 examples.
  std::optional<MeanDifferenceTest> test;
};

// Needs a scored pool. Throws kNoVowelsConfigured for an empty config.
HarmonyViolationStats ComputeHarmonyViolationStats(
    const SyntheticPool& pool, const HarmonyConfig& config,
    const HarmonyOptions& options = {});

}  // namespace morphaug

#endif  // MORPHAUG_REPORT_H_

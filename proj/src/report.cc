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

#include "morphaug/report.h"

#include <algorithm>
#include <string>

#include "morphaug/status.h"
#include "morphaug/text.h"

namespace morphaug {
namespace {

void RequireScored(const SyntheticPool& pool) {
  if (!pool.FullyScored()) {
    throw Error(ErrorCode::kUnscoredPool, "every pool example needs a score");
  }
}

double VariableValue(const SyntheticExample& e, CorrelationVariable variable) {
  switch (variable) {
    case CorrelationVariable::kLevenshtein:
      return static_cast<double>(e.lev_to_gold_target);
    case CorrelationVariable::kStemLength:
      return static_cast<double>(e.StemLength());
    case CorrelationVariable::kTargetLength:
      return static_cast<double>(e.triple.form.size());
  }
  return 0.0;
}

}  // namespace

std::string_view CorrelationVariableName(CorrelationVariable variable) {
  switch (variable) {
    case CorrelationVariable::kLevenshtein: return "lev_to_gold_target";
    case CorrelationVariable::kStemLength: return "stem_length";
    case CorrelationVariable::kTargetLength: return "target_length";
  }
  return "unknown";
}

double ComputeCorrelation(const SyntheticPool& pool,
                          CorrelationVariable variable) {
  RequireScored(pool);
  if (pool.size() < 3) {
    throw Error(ErrorCode::kTooFewSamples,
                "correlations need at least 3 scored examples");
  }
  std::vector<double> nll;
  std::vector<double> values;
  nll.reserve(pool.size());
  values.reserve(pool.size());
  for (const SyntheticExample& e : pool.examples) {
    nll.push_back(*e.score);
    values.push_back(VariableValue(e, variable));
  }
  return PearsonCorrelation(nll, values, "nll",
                            std::string(CorrelationVariableName(variable)));
}

CorrelationReport ComputeCorrelations(const SyntheticPool& pool) {
  CorrelationReport report;
  report.pearson_nll_levenshtein =
      ComputeCorrelation(pool, CorrelationVariable::kLevenshtein);
  report.pearson_nll_stem_length =
      ComputeCorrelation(pool, CorrelationVariable::kStemLength);
  report.pearson_nll_target_length =
      ComputeCorrelation(pool, CorrelationVariable::kTargetLength);
  report.n = pool.size();
  return report;
}

std::pair<std::string, std::size_t> MsdModeFrequency(
    const SelectionResult& selection) {
  const auto& counts = selection.per_msd_counts.counts();
  if (selection.per_msd_counts.total() == 0 || counts.empty()) {
    throw Error(ErrorCode::kEmptySelection, "selection is empty");
  }
  // std::map iterates in key order, so strict > keeps the smallest MSD.
  std::pair<std::string, std::size_t> mode{"", 0};
  for (const auto& [msd, count] : counts) {
    if (count > mode.second) mode = {msd, count};
  }
  return mode;
}

HarmonyConfig::HarmonyConfig(std::map<char32_t, std::string> classes)
    : classes_(std::move(classes)) {}

const std::string* HarmonyConfig::Governing(char32_t c) const {
  const auto it = classes_.find(c);
  if (it == classes_.end() || it->second == kNeutral) return nullptr;
  return &it->second;
}

HarmonyConfig ParseHarmonyTsv(std::istream& in) {
  std::map<char32_t, std::string> classes;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw Error(ErrorCode::kMalformedLine,
                  "expected vowel<TAB>class", line_no);
    }
    std::u32string vowel;
    try {
      vowel = NormalizeNfc(DecodeUtf8(line.substr(0, tab)));
    } catch (const Error& e) {
      throw Error(e.code(), e.what(), line_no);
    }
    const std::string label = line.substr(tab + 1);
    if (vowel.size() != 1 || label.empty()) {
      throw Error(ErrorCode::kMalformedLine,
                  "expected a single character and a class label", line_no);
    }
    if (!classes.emplace(vowel[0], label).second) {
      throw Error(ErrorCode::kMalformedLine,
                  "vowel listed twice: " + line.substr(0, tab), line_no);
    }
  }
  return HarmonyConfig(std::move(classes));
}

bool ViolatesHarmony(const Segmentation& segmentation,
                     const HarmonyConfig& config) {
  const std::u32string& form = segmentation.form();
  const std::vector<bool> stem_mask = segmentation.FormStemMask();
  const std::string* governing = nullptr;
  for (std::size_t i = form.size(); i-- > 0;) {
    if (!stem_mask[i]) continue;
    governing = config.Governing(form[i]);
    if (governing != nullptr) break;
  }
  if (governing == nullptr) return false;
  for (std::size_t i = 0; i < form.size(); ++i) {
    if (stem_mask[i]) continue;
    const std::string* cls = config.Governing(form[i]);
    if (cls != nullptr && *cls != *governing) return true;
  }
  return false;
}

HarmonyViolationStats ComputeHarmonyViolationStats(
    const SyntheticPool& pool, const HarmonyConfig& config,
    const HarmonyOptions& options) {
  if (config.empty()) {
    throw Error(ErrorCode::kNoVowelsConfigured,
                "the harmony config lists no vowels");
  }
  RequireScored(pool);
  HarmonyViolationStats stats;
  std::vector<double> violating;
  std::vector<double> adhering;
  for (const SyntheticExample& e : pool.examples) {
    if (ViolatesHarmony(e.GetSegmentation(), config)) {
      violating.push_back(*e.score);
    } else {
      adhering.push_back(*e.score);
    }
  }
  stats.n = pool.size();
  stats.violating = violating.size();
  if (stats.n > 0) {
    stats.violation_rate =
        static_cast<double>(stats.violating) / static_cast<double>(stats.n);
  }
  if (!violating.empty()) stats.mean_nll_violating = Mean(violating);
  if (!adhering.empty()) stats.mean_nll_adhering = Mean(adhering);
  if (violating.size() >= 2 && adhering.size() >= 2) {
    BootstrapOptions bootstrap;
    bootstrap.resamples = options.resamples;
    bootstrap.level = options.level;
    bootstrap.seed = options.seed;
    stats.test = BootstrapMeanDifference(violating, adhering, bootstrap);
  }
  return stats;
}

}  // namespace morphaug

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

#ifndef MORPHAUG_STAGES_H_
#define MORPHAUG_STAGES_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace morphaug {

using Path = std::filesystem::path;

// Progress and warnings go to `log` unless quiet.
struct StageContext {
  bool quiet = false;
  std::ostream* log = nullptr;

  void Info(const std::string& message) const;
  // Warnings are printed even when quiet.
  void Warn(const std::string& message) const;
};

struct ParseParams {
  Path in;
  Path out;
  std::optional<Path> alignments;
  std::size_t min_run = 3;
  std::uint64_t seed = 0;
};

struct AugmentParams {
  Path gold;
  Path out;
  std::optional<Path> tsv;
  std::size_t n = 10000;
  double theta = 0.5;
  std::size_t min_run = 3;
  bool keep_original = false;
  std::uint64_t seed = 0;
};

struct ScoreParams {
  Path gold;
  Path pool;
  Path out;
  std::string scorer = "ngram";
  std::size_t order = 3;
  double smoothing = 0.1;
  std::uint64_t seed = 0;
};

struct SelectParams {
  Path pool;
  std::optional<Path> scores;
  Path out;
  std::string strategy = "random";
  std::size_t k = 128;
  std::optional<double> alpha;
  std::optional<Path> gold;
  std::optional<Path> merged;
  std::uint64_t seed = 0;
};

struct SplitParams {
  Path full;
  Path train;
  Path out;
  std::uint64_t seed = 0;
};

struct MilabParams {
  std::size_t stems = 50;
  std::size_t msds = 5;
  std::size_t gold = 500;
  std::vector<std::size_t> syn_sizes = {0, 500, 5000, 50000};
  double theta = 1.0;
  bool harmony = false;
  std::size_t resamples = 200;
  double epsilon = 0.02;
  std::size_t min_cell = 5;
  Path out;
  std::uint64_t seed = 0;
};

struct ReportParams {
  Path pool;
  std::optional<Path> scores;
  std::vector<Path> selections;
  std::optional<Path> harmony;
  Path out;
  std::size_t resamples = 10000;
  std::uint64_t seed = 0;
};

// The config echoed into each stage's provenance block.
nlohmann::json ToJson(const ParseParams& p);
nlohmann::json ToJson(const AugmentParams& p);
nlohmann::json ToJson(const ScoreParams& p);
nlohmann::json ToJson(const SelectParams& p);
nlohmann::json ToJson(const SplitParams& p);
nlohmann::json ToJson(const MilabParams& p);
nlohmann::json ToJson(const ReportParams& p);

// Every stage reads its inputs, writes its artifacts atomically and throws
// morphaug::Error on bad data. Stage randomness comes from
// DeriveSeed(seed, stage name).
void RunParse(const ParseParams& p, const StageContext& ctx);
void RunAugment(const AugmentParams& p, const StageContext& ctx);
void RunScore(const ScoreParams& p, const StageContext& ctx);
void RunSelect(const SelectParams& p, const StageContext& ctx);
void RunSplit(const SplitParams& p, const StageContext& ctx);
void RunMilab(const MilabParams& p, const StageContext& ctx);
void RunReport(const ReportParams& p, const StageContext& ctx);

// "key = value" lines; '#' starts a comment. Throws kMalformedLine.
std::map<std::string, std::string> ParseKeyValueConfig(const std::string& text);

inline constexpr std::size_t kSweepSizes[] = {128, 256, 512, 1024, 2048};

// Runs parse, augment, score, select (every strategy x every k), split when
// a full dataset is configured, milab when enabled, and report. Relative
// paths are resolved against the config file's directory. Throws
// kMissingConfigKey naming the first absent required key.
void RunPipeline(const Path& config_path, std::optional<Path> out_dir,
                 std::optional<std::uint64_t> seed, const StageContext& ctx);

// Comma-separated non-negative integers. Throws kInvalidArgument.
std::vector<std::size_t> ParseSizeList(const std::string& text);

}  // namespace morphaug

#endif  // MORPHAUG_STAGES_H_

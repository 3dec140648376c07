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

#include "morphaug/stages.h"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

#include "morphaug/alignment.h"
#include "morphaug/artifacts.h"
#include "morphaug/corpus.h"
#include "morphaug/milab.h"
#include "morphaug/random.h"
#include "morphaug/report.h"
#include "morphaug/scoring.h"
#include "morphaug/selection.h"
#include "morphaug/splitgen.h"
#include "morphaug/status.h"
#include "morphaug/stemcorrupt.h"
#include "morphaug/text.h"

namespace morphaug {
namespace {

using nlohmann::json;

json OptionalPath(const std::optional<Path>& p) {
  return p ? json(p->string()) : json(nullptr);
}

// Runs `fn` and tags any data error it raises with `file`.
template <typename Fn>
auto WithFile(const Path& file, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (!e.file().empty()) throw;
    throw e.WithFile(file.string());
  }
}

Dataset ReadUnimorphFile(const Path& path, std::string name) {
  const std::string text = ReadFile(path);
  return WithFile(path, [&] { return ParseUnimorph(text, std::move(name)); });
}

SyntheticPool ReadPool(const Path& path) {
  const std::string text = ReadFile(path);
  return WithFile(path, [&] { return ParsePoolJsonl(text); });
}

void AttachScoreFile(const Path& path, SyntheticPool& pool) {
  std::istringstream in(ReadFile(path));
  WithFile(path, [&] {
    AttachScores(LoadExternalScores(in, pool), pool);
    return 0;
  });
}

void WriteJson(const Path& path, const json& value) {
  WriteFileAtomic(path, value.dump(2) + "\n");
}

// TSV artifacts carry their provenance next to them.
void WriteTsvWithSidecar(const Path& path, const std::string& contents,
                         const json& provenance) {
  WriteFileAtomic(path, contents);
  WriteJson(SidecarPath(path), json{{"provenance", provenance}});
}

json CiToJson(const BootstrapCi& ci) {
  return {{"statistic", ci.statistic}, {"point", ci.point},
          {"lower", ci.lower},         {"upper", ci.upper},
          {"resamples", ci.resamples}, {"level", ci.level}};
}

template <typename T>
json OptionalNumber(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

void StageContext::Info(const std::string& message) const {
  if (!quiet && log != nullptr) *log << message << '\n';
}

void StageContext::Warn(const std::string& message) const {
  if (log != nullptr) *log << "warning: " << message << '\n';
}

json ToJson(const ParseParams& p) {
  return {{"in", p.in.string()}, {"out", p.out.string()},
          {"alignments", OptionalPath(p.alignments)}, {"min_run", p.min_run}};
}

json ToJson(const AugmentParams& p) {
  return {{"gold", p.gold.string()}, {"out", p.out.string()},
          {"tsv", OptionalPath(p.tsv)}, {"n", p.n}, {"theta", p.theta},
          {"min_run", p.min_run}, {"keep_original", p.keep_original}};
}

json ToJson(const ScoreParams& p) {
  return {{"gold", p.gold.string()}, {"pool", p.pool.string()},
          {"out", p.out.string()},   {"scorer", p.scorer},
          {"order", p.order},        {"smoothing", p.smoothing}};
}

json ToJson(const SelectParams& p) {
  return {{"pool", p.pool.string()}, {"scores", OptionalPath(p.scores)},
          {"out", p.out.string()},   {"strategy", p.strategy},
          {"k", p.k},                {"alpha", OptionalNumber(p.alpha)},
          {"gold", OptionalPath(p.gold)}, {"merged", OptionalPath(p.merged)}};
}

json ToJson(const SplitParams& p) {
  return {{"full", p.full.string()}, {"train", p.train.string()},
          {"out", p.out.string()}};
}

json ToJson(const MilabParams& p) {
  return {{"stems", p.stems},       {"msds", p.msds},
          {"gold", p.gold},         {"syn_sizes", p.syn_sizes},
          {"theta", p.theta},       {"harmony", p.harmony},
          {"resamples", p.resamples}, {"epsilon", p.epsilon},
          {"min_cell", p.min_cell}, {"out", p.out.string()}};
}

json ToJson(const ReportParams& p) {
  json selections = json::array();
  for (const Path& s : p.selections) selections.push_back(s.string());
  return {{"pool", p.pool.string()}, {"scores", OptionalPath(p.scores)},
          {"selections", selections}, {"harmony", OptionalPath(p.harmony)},
          {"out", p.out.string()},   {"resamples", p.resamples}};
}

void RunParse(const ParseParams& p, const StageContext& ctx) {
  const Dataset data = ReadUnimorphFile(p.in, p.in.stem().string());
  const json provenance = MakeProvenance("parse", ToJson(p), p.seed);
  std::ostringstream out;
  out << json{{"provenance", provenance}}.dump() << '\n';
  WriteTriplesJsonl(data, out);
  WriteFileAtomic(p.out, out.str());
  ctx.Info("parsed " + std::to_string(data.size()) + " triples");

  if (p.alignments) {
    std::string lines = json{{"provenance", provenance}}.dump() + "\n";
    std::size_t without_stem = 0;
    for (const InflectionTriple& t : data.triples) {
      const CharAlignment alignment = Align(t.lemma, t.form);
      json record = json::parse(AlignmentDebugJson(alignment, p.min_run));
      if (record.at("stem_spans").empty()) ++without_stem;
      record["id"] = t.id.value;
      lines += record.dump();
      lines += '\n';
    }
    WriteFileAtomic(*p.alignments, lines);
    if (without_stem > 0) {
      ctx.Warn(std::to_string(without_stem) + " triples have no stem run of length >= " +
               std::to_string(p.min_run));
    }
  }
}

void RunAugment(const AugmentParams& p, const StageContext& ctx) {
  const Dataset gold = ReadUnimorphFile(p.gold, "gold");
  CorruptionConfig cfg;
  cfg.theta = p.theta;
  cfg.min_run = p.min_run;
  cfg.exclude_original = !p.keep_original;
  cfg.seed = DeriveSeed(p.seed, "augment");
  cfg.Validate();
  const SyntheticPool pool =
      WithFile(p.gold, [&] {
        return GeneratePool(gold, p.n, ExtractAlphabet(gold), cfg);
      });
  if (!pool.unalignable_gold_ids.empty()) {
    ctx.Warn(std::to_string(pool.unalignable_gold_ids.size()) +
             " gold triples have no stem and were never sampled");
  }
  const json provenance = MakeProvenance("augment", ToJson(p), p.seed);
  WriteFileAtomic(p.out, SerializePoolJsonl(pool, provenance));
  if (p.tsv) {
    WriteTsvWithSidecar(*p.tsv, SerializeUnimorph(pool.AsDataset()), provenance);
  }
  ctx.Info("wrote " + std::to_string(pool.size()) + " synthetic examples");
}

void RunScore(const ScoreParams& p, const StageContext& ctx) {
  const Dataset gold = ReadUnimorphFile(p.gold, "gold");
  SyntheticPool pool = ReadPool(p.pool);
  const NGramScorer ngram =
      NGramScorer::Train(gold, {p.order, p.smoothing});
  if (p.scorer == "ngram") {
    ScorePool(ngram, pool);
  } else if (p.scorer == "uniform") {
    ScorePool(UniformScorer(ngram.vocab_size()), pool);
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown scorer '" + p.scorer + "' (ngram or uniform)");
  }
  std::ostringstream out;
  WriteScoresTsv(pool, out);
  WriteTsvWithSidecar(p.out, out.str(),
                      MakeProvenance("score", ToJson(p), p.seed));
  ctx.Info("scored " + std::to_string(pool.size()) + " examples");
}

void RunSelect(const SelectParams& p, const StageContext& ctx) {
  SyntheticPool pool = ReadPool(p.pool);
  SelectionStrategy strategy = SelectionStrategy::Named(
      ParseStrategyName(p.strategy), p.k, DeriveSeed(p.seed, "select"));
  if (p.alpha) strategy.alpha = *p.alpha;
  if (strategy.ExperimentalAlpha()) {
    ctx.Warn("alpha outside {0, 1} is experimental");
  }
  if (StrategyUsesScores(strategy.kind)) {
    if (!p.scores) {
      throw Error(ErrorCode::kUnscoredPool,
                  "strategy '" + p.strategy + "' needs --scores");
    }
    AttachScoreFile(*p.scores, pool);
  }
  const SelectionResult selection = Select(pool.examples, strategy);
  const json provenance = MakeProvenance("select", ToJson(p), p.seed);
  json doc = SelectionToJson(selection);
  doc["provenance"] = provenance;
  WriteJson(p.out, doc);

  if (p.merged) {
    if (!p.gold) {
      throw Error(ErrorCode::kInvalidArgument, "--merged needs --gold");
    }
    Dataset merged = ReadUnimorphFile(*p.gold, "train+syn");
    std::unordered_map<ExampleId, const SyntheticExample*, ExampleIdHash> by_id;
    for (const SyntheticExample& e : pool.examples) by_id[e.triple.id] = &e;
    for (ExampleId id : selection.selected_ids) {
      InflectionTriple t = by_id.at(id)->triple;
      t.id = ExampleId{merged.size()};
      merged.triples.push_back(std::move(t));
    }
    WriteTsvWithSidecar(*p.merged, SerializeUnimorph(merged), provenance);
  }
  ctx.Info("selected " + std::to_string(selection.selected_ids.size()) +
           " examples with " + p.strategy);
}

void RunSplit(const SplitParams& p, const StageContext& ctx) {
  const Dataset full = ReadUnimorphFile(p.full, "full");
  const Dataset train = ReadUnimorphFile(p.train, "train");
  const LemmaSplit split = MakeLemmaSplit(full, train);
  if (split.empty_test()) {
    ctx.Warn("every lemma of " + p.full.string() +
             " occurs in the training data; the test split is empty");
  }
  WriteTsvWithSidecar(p.out, SerializeUnimorph(split.test),
                      MakeProvenance("split", ToJson(p), p.seed));
  ctx.Info("test split: " + std::to_string(split.test.size()) + " triples, " +
           std::to_string(split.excluded) + " excluded");
}

void RunMilab(const MilabParams& p, const StageContext& ctx) {
  ToyGrammarOptions grammar_options;
  grammar_options.num_stems = p.stems;
  grammar_options.num_msds = p.msds;
  grammar_options.harmony = p.harmony;
  grammar_options.seed = DeriveSeed(p.seed, "milab-grammar");
  const ToyGrammar grammar = MakeToyGrammar(grammar_options);

  MilabOptions options;
  options.gold_n = p.gold;
  options.syn_sizes = p.syn_sizes;
  options.theta = p.theta;
  options.seed = DeriveSeed(p.seed, "milab");
  options.bootstrap_resamples = p.resamples;
  options.epsilon = p.epsilon;
  options.min_cell = p.min_cell;
  const MiDecayCurve curve = ComputeMiDecayCurve(grammar, options);

  json points = json::array();
  for (const CurvePoint& point : curve.points) {
    json mi = json::array();
    for (const MiCurveEntry& e : point.mi) {
      mi.push_back({{"pair", MiPairName(e.pair)},
                    {"mixture", CiToJson(e.mixture)},
                    {"gold_bits", e.gold_bits},
                    {"synthetic_bits", OptionalNumber(e.synthetic_bits)},
                    {"bound", e.bound},
                    {"convexity_holds", e.convexity_holds}});
    }
    json gap = nullptr;
    if (point.gap) {
      gap = {{"tv_distance", point.gap->tv_distance},
             {"cells_used", point.gap->cells_used},
             {"cells_skipped", point.gap->cells_skipped},
             {"skip_rate", point.gap->skip_rate()}};
    }
    points.push_back({{"gold_count", point.mixture.gold_count},
                      {"syn_count", point.mixture.syn_count},
                      {"lambda", point.mixture.lambda()},
                      {"mi", mi},
                      {"factorization_gap", gap}});
  }
  json affixes = json::object();
  for (const auto& [msd, affix] : grammar.affix_map) {
    affixes[msd] = EncodeUtf8(affix);
  }
  const json doc = {
      {"provenance", MakeProvenance("milab", ToJson(p), p.seed)},
      {"grammar", {{"stems", grammar.stems.size()},
                   {"affixes", affixes},
                   {"harmony", grammar.harmony}}},
      {"alignment_disagreement", curve.alignment_disagreement},
      {"points", points}};
  WriteJson(p.out, doc);
  ctx.Info("milab: " + std::to_string(curve.points.size()) + " curve points");
}

void RunReport(const ReportParams& p, const StageContext& ctx) {
  SyntheticPool pool = ReadPool(p.pool);
  const std::uint64_t seed = DeriveSeed(p.seed, "report");
  json doc;
  doc["provenance"] = MakeProvenance("report", ToJson(p), p.seed);
  doc["pool_size"] = pool.size();

  if (p.scores) {
    AttachScoreFile(*p.scores, pool);
    json correlations = {{"n", pool.size()}};
    for (CorrelationVariable v :
         {CorrelationVariable::kLevenshtein, CorrelationVariable::kStemLength,
          CorrelationVariable::kTargetLength}) {
      const std::string key = "pearson_nll_" + std::string(CorrelationVariableName(v));
      try {
        correlations[key] = ComputeCorrelation(pool, v);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kZeroVariance &&
            e.code() != ErrorCode::kTooFewSamples) {
          throw;
        }
        correlations[key] = {{"undefined", ErrorCodeName(e.code())},
                             {"detail", e.what()}};
        ctx.Warn(key + " is undefined: " + e.what());
      }
    }
    doc["correlations"] = correlations;

    std::vector<double> nll;
    for (const SyntheticExample& e : pool.examples) nll.push_back(*e.score);
    if (nll.size() >= 2) {
      BootstrapOptions bootstrap;
      bootstrap.resamples = p.resamples;
      bootstrap.seed = DeriveSeed(seed, "mean-nll");
      doc["mean_nll"] = CiToJson(BootstrapPercentile(
          nll, [](std::span<const double> s) { return Mean(s); }, "mean_nll",
          bootstrap));
    }
  } else {
    doc["correlations"] = nullptr;
  }

  json selections = json::array();
  for (const Path& path : p.selections) {
    const SelectionResult selection = WithFile(path, [&] {
      return SelectionFromJson(json::parse(ReadFile(path)));
    });
    json block = SelectionToJson(selection);
    block.erase("selected_ids");
    block["path"] = path.string();
    try {
      const auto [msd, count] = MsdModeFrequency(selection);
      block["mode"] = {{"msd", msd}, {"count", count}};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kEmptySelection) throw;
      block["mode"] = nullptr;
    }
    selections.push_back(block);
  }
  doc["msd_mode_frequency"] = selections;

  if (p.harmony) {
    if (!p.scores) {
      throw Error(ErrorCode::kUnscoredPool, "--harmony needs --scores");
    }
    std::istringstream in(ReadFile(*p.harmony));
    const HarmonyConfig config =
        WithFile(*p.harmony, [&] { return ParseHarmonyTsv(in); });
    HarmonyOptions options;
    options.resamples = p.resamples;
    options.seed = DeriveSeed(seed, "harmony");
    const HarmonyViolationStats stats =
        ComputeHarmonyViolationStats(pool, config, options);
    json block = {{"n", stats.n},
                  {"violating", stats.violating},
                  {"violation_rate", stats.violation_rate},
                  {"mean_nll_violating", OptionalNumber(stats.mean_nll_violating)},
                  {"mean_nll_adhering", OptionalNumber(stats.mean_nll_adhering)},
                  {"difference", nullptr},
                  {"bootstrap_p", nullptr}};
    if (stats.test) {
      block["difference"] = CiToJson(stats.test->difference);
      block["bootstrap_p"] = stats.test->p_value;
    }
    doc["harmony"] = block;
  } else {
    doc["harmony"] = nullptr;
  }
  WriteJson(p.out, doc);
  ctx.Info("report written to " + p.out.string());
}

std::map<std::string, std::string> ParseKeyValueConfig(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  const auto trim = [](std::string s) {
    const auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
  };
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kMalformedLine, "expected key = value", line_no);
    }
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) {
      throw Error(ErrorCode::kMalformedLine, "empty key", line_no);
    }
    if (!out.emplace(key, trim(line.substr(eq + 1))).second) {
      throw Error(ErrorCode::kMalformedLine, "duplicate key '" + key + "'",
                  line_no);
    }
  }
  return out;
}

std::vector<std::size_t> ParseSizeList(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(start, end - start);
    std::size_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "not a list of non-negative integers: '" + text + "'");
    }
    out.push_back(value);
    start = end + 1;
  }
  return out;
}

namespace {

class PipelineConfig {
 public:
  PipelineConfig(std::map<std::string, std::string> values, Path base)
      : values_(std::move(values)), base_(std::move(base)) {}

  const std::string& Required(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end() || it->second.empty()) {
      throw Error(ErrorCode::kMissingConfigKey,
                  "missing required key '" + key + "'");
    }
    return it->second;
  }
  std::optional<std::string> Optional(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end() || it->second.empty()) return std::nullopt;
    return it->second;
  }
  Path ResolvePath(const std::string& value) const {
    const Path p(value);
    return p.is_absolute() ? p : base_ / p;
  }
  std::size_t Size(const std::string& key, std::size_t fallback) const {
    const auto v = Optional(key);
    return v ? ParseSingle<std::size_t>(key, *v) : fallback;
  }
  double Real(const std::string& key, double fallback) const {
    const auto v = Optional(key);
    return v ? ParseSingle<double>(key, *v) : fallback;
  }
  template <typename T>
  static T ParseSingle(const std::string& key, const std::string& text) {
    T value{};
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bad value for '" + key + "': '" + text + "'");
    }
    return value;
  }

 private:
  std::map<std::string, std::string> values_;
  Path base_;
};

std::vector<std::string> SplitCommas(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(),
                              [](unsigned char c) { return std::isspace(c); }),
               item.end());
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

void RunPipeline(const Path& config_path, std::optional<Path> out_dir,
                 std::optional<std::uint64_t> seed_override,
                 const StageContext& ctx) {
  const std::string text = ReadFile(config_path);
  const PipelineConfig cfg(
      WithFile(config_path, [&] { return ParseKeyValueConfig(text); }),
      config_path.parent_path());

  const Path gold = cfg.ResolvePath(cfg.Required("gold"));
  const Path out = out_dir ? *out_dir : cfg.ResolvePath(cfg.Required("out_dir"));
  const std::size_t n = PipelineConfig::ParseSingle<std::size_t>("n", cfg.Required("n"));
  const double theta =
      PipelineConfig::ParseSingle<double>("theta", cfg.Required("theta"));
  const std::string k_spec = cfg.Required("k");
  const std::uint64_t seed =
      seed_override ? *seed_override
                    : static_cast<std::uint64_t>(cfg.Size("seed", 0));
  std::vector<std::size_t> ks;
  if (k_spec == "sweep") {
    ks.assign(std::begin(kSweepSizes), std::end(kSweepSizes));
  } else {
    ks = ParseSizeList(k_spec);
  }
  std::vector<std::string> strategies;
  if (const auto s = cfg.Optional("strategies")) {
    strategies = SplitCommas(*s);
  } else {
    for (StrategyKind kind :
         {StrategyKind::kRandom, StrategyKind::kUmt, StrategyKind::kUme,
          StrategyKind::kHighLoss, StrategyKind::kLowLoss,
          StrategyKind::kUmtLoss, StrategyKind::kUmeLoss}) {
      strategies.emplace_back(StrategyName(kind));
    }
  }
  for (const std::string& s : strategies) ParseStrategyName(s);

  std::filesystem::create_directories(out / "selections");

  ParseParams parse;
  parse.in = gold;
  parse.out = out / "gold.jsonl";
  parse.alignments = out / "alignments.jsonl";
  parse.min_run = cfg.Size("min_run", 3);
  parse.seed = seed;
  ctx.Info("[parse]");
  RunParse(parse, ctx);

  AugmentParams augment;
  augment.gold = gold;
  augment.out = out / "pool.jsonl";
  augment.n = n;
  augment.theta = theta;
  augment.min_run = parse.min_run;
  augment.seed = seed;
  ctx.Info("[augment]");
  RunAugment(augment, ctx);

  ScoreParams score;
  score.gold = gold;
  score.pool = augment.out;
  score.out = out / "scores.tsv";
  score.scorer = cfg.Optional("scorer").value_or("ngram");
  score.order = cfg.Size("order", 3);
  score.smoothing = cfg.Real("smoothing", 0.1);
  score.seed = seed;
  ctx.Info("[score]");
  RunScore(score, ctx);

  ReportParams report;
  ctx.Info("[select]");
  for (const std::string& strategy : strategies) {
    for (std::size_t k : ks) {
      SelectParams select;
      select.pool = augment.out;
      select.scores = score.out;
      select.strategy = strategy;
      select.k = k;
      select.out = out / "selections" /
                   (strategy + "-k" + std::to_string(k) + ".json");
      select.gold = gold;
      select.merged = out / "selections" /
                      (strategy + "-k" + std::to_string(k) + ".train.tsv");
      select.seed = seed;
      RunSelect(select, ctx);
      report.selections.push_back(select.out);
    }
  }

  if (const auto full = cfg.Optional("full")) {
    SplitParams split;
    split.full = cfg.ResolvePath(*full);
    split.train = gold;
    split.out = out / "test.tsv";
    split.seed = seed;
    ctx.Info("[split]");
    RunSplit(split, ctx);
  }

  if (cfg.Optional("milab").value_or("off") == "on") {
    MilabParams milab;
    milab.stems = cfg.Size("milab_stems", milab.stems);
    milab.msds = cfg.Size("milab_msds", milab.msds);
    milab.gold = cfg.Size("milab_gold", milab.gold);
    if (const auto sizes = cfg.Optional("milab_syn_sizes")) {
      milab.syn_sizes = ParseSizeList(*sizes);
    }
    milab.theta = cfg.Real("milab_theta", milab.theta);
    milab.harmony = cfg.Optional("milab_harmony").value_or("off") == "on";
    milab.resamples = cfg.Size("milab_resamples", milab.resamples);
    milab.out = out / "milab.json";
    milab.seed = seed;
    ctx.Info("[milab]");
    RunMilab(milab, ctx);
  }

  report.pool = augment.out;
  report.scores = score.out;
  if (const auto harmony = cfg.Optional("harmony")) {
    report.harmony = cfg.ResolvePath(*harmony);
  }
  report.out = out / "report.json";
  report.resamples = cfg.Size("resamples", 10000);
  report.seed = seed;
  ctx.Info("[report]");
  RunReport(report, ctx);
}

}  // namespace morphaug

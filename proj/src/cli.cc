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

#include "morphaug/cli.h"

#include <filesystem>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "morphaug/stages.h"
#include "morphaug/status.h"

namespace morphaug {
namespace {

// Stage options that CLI11 fills before the stage runs.
struct Options {
  std::uint64_t seed = 0;
  std::string out;
  bool quiet = false;

  ParseParams parse;
  std::string parse_alignments;
  AugmentParams augment;
  std::string augment_tsv;
  ScoreParams score;
  SelectParams select;
  std::string select_scores;
  std::string select_gold;
  std::string select_merged;
  double select_alpha = 0.0;
  SplitParams split;
  MilabParams milab;
  std::string milab_sizes = "0,500,5000,50000";
  std::string milab_harmony = "off";
  ReportParams report;
  std::string report_scores;
  std::string report_harmony;
  std::vector<std::string> report_selections;
  std::string pipeline_config;
};

std::optional<Path> NonEmpty(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return Path(s);
}

Path RequireOut(const Options& o, const char* subcommand) {
  if (o.out.empty()) {
    throw CLI::RequiredError(std::string("--out (required by ") + subcommand +
                             ")");
  }
  return o.out;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  Options o;
  CLI::App app{"Stem-corruption data augmentation toolkit", "morphaug"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--seed", o.seed, "Top-level seed; stages derive their own");
  app.add_option("--out", o.out, "Output artifact (directory for pipeline)");
  app.add_flag("--quiet", o.quiet, "Only print warnings and errors");

  CLI::App* parse = app.add_subcommand("parse", "Read UniMorph TSV into JSONL");
  parse->add_option("--in", o.parse.in, "UniMorph TSV")->required();
  parse->add_option("--alignments", o.parse_alignments,
                    "Also write per-triple alignments as JSONL");
  parse->add_option("--min-run", o.parse.min_run, "Minimum stem run length")
      ->check(CLI::PositiveNumber);

  CLI::App* augment = app.add_subcommand("augment", "Build a synthetic pool");
  augment->add_option("--gold", o.augment.gold, "Gold UniMorph TSV")->required();
  augment->add_option("--n", o.augment.n, "Pool size")->required();
  augment->add_option("--theta", o.augment.theta, "Substitution probability")
      ->check(CLI::Range(0.0, 1.0));
  augment->add_option("--min-run", o.augment.min_run, "Minimum stem run length")
      ->check(CLI::PositiveNumber);
  augment->add_option("--tsv", o.augment_tsv, "Also write the pool as TSV");
  augment->add_flag("--keep-original", o.augment.keep_original,
                    "Allow a substitution to redraw the original character");

  CLI::App* score = app.add_subcommand("score", "Score a pool");
  score->add_option("--gold", o.score.gold, "Gold UniMorph TSV")->required();
  score->add_option("--pool", o.score.pool, "Pool JSONL")->required();
  score->add_option("--scorer", o.score.scorer, "ngram or uniform")
      ->check(CLI::IsMember({"ngram", "uniform"}));
  score->add_option("--order", o.score.order, "N-gram order")
      ->check(CLI::PositiveNumber);
  score->add_option("--smoothing", o.score.smoothing, "Add-k constant")
      ->check(CLI::PositiveNumber);

  CLI::App* select = app.add_subcommand("select", "Select a subset of a pool");
  select->add_option("--pool", o.select.pool, "Pool JSONL")->required();
  select->add_option("--scores", o.select_scores, "Score TSV");
  select->add_option("--strategy", o.select.strategy, "Selection strategy")
      ->required()
      ->check(CLI::IsMember({"random", "umt", "ume", "highloss", "lowloss",
                             "umt-loss", "ume-loss"}));
  select->add_option("--k", o.select.k, "Subset size")->required();
  CLI::Option* alpha = select->add_option(
      "--alpha", o.select_alpha, "Override the MSD temperature");
  select->add_option("--gold", o.select_gold, "Gold TSV for --merged");
  select->add_option("--merged", o.select_merged,
                     "Write gold plus the selection as UniMorph TSV");

  CLI::App* split = app.add_subcommand("split", "Lemma-disjoint test split");
  split->add_option("--full", o.split.full, "Full UniMorph TSV")->required();
  split->add_option("--train", o.split.train, "Training UniMorph TSV")
      ->required();

  CLI::App* milab = app.add_subcommand("milab", "Toy-grammar MI lab");
  milab->add_option("--stems", o.milab.stems, "Stems in the toy grammar")->check(CLI::PositiveNumber);
  milab->add_option("--msds", o.milab.msds, "MSDs in the toy grammar")->check(CLI::PositiveNumber);
  milab->add_option("--gold", o.milab.gold, "Gold sample size")->check(CLI::PositiveNumber);
  milab->add_option("--syn-sizes", o.milab_sizes, "Comma-separated sizes");
  milab->add_option("--theta", o.milab.theta, "Substitution probability")->check(CLI::Range(0.0, 1.0));
  milab->add_option("--harmony", o.milab_harmony, "Couple affix vowels to the stem")
      ->check(CLI::IsMember({"on", "off"}));
  milab->add_option("--resamples", o.milab.resamples, "Bootstrap resamples")
      ->check(CLI::PositiveNumber);
  milab->add_option("--epsilon", o.milab.epsilon, "Convexity tolerance in bits")
      ->check(CLI::NonNegativeNumber);
  milab->add_option("--min-cell", o.milab.min_cell,
                    "Minimum count per cell for the gap")
      ->check(CLI::PositiveNumber);

  CLI::App* report = app.add_subcommand("report", "Diagnostics over a pool");
  report->add_option("--pool", o.report.pool, "Pool JSONL")->required();
  report->add_option("--scores", o.report_scores, "Score TSV");
  report->add_option("--selection", o.report_selections,
                     "Selection JSON (repeatable)");
  report->add_option("--harmony", o.report_harmony, "Vowel class TSV");
  report->add_option("--resamples", o.report.resamples, "Bootstrap resamples")
      ->check(CLI::PositiveNumber);

  CLI::App* pipeline = app.add_subcommand("pipeline", "Run every stage");
  pipeline->add_option("--config", o.pipeline_config, "key = value file")
      ->required();

  std::vector<const char*> argv = {"morphaug"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  StageContext ctx{o.quiet, &err};
  try {
    if (parse->parsed()) {
      o.parse.out = RequireOut(o, "parse");
      o.parse.alignments = NonEmpty(o.parse_alignments);
      o.parse.seed = o.seed;
      RunParse(o.parse, ctx);
    } else if (augment->parsed()) {
      o.augment.out = RequireOut(o, "augment");
      o.augment.tsv = NonEmpty(o.augment_tsv);
      o.augment.seed = o.seed;
      RunAugment(o.augment, ctx);
    } else if (score->parsed()) {
      o.score.out = RequireOut(o, "score");
      o.score.seed = o.seed;
      RunScore(o.score, ctx);
    } else if (select->parsed()) {
      o.select.out = RequireOut(o, "select");
      o.select.scores = NonEmpty(o.select_scores);
      o.select.gold = NonEmpty(o.select_gold);
      o.select.merged = NonEmpty(o.select_merged);
      if (alpha->count() > 0) o.select.alpha = o.select_alpha;
      if (o.select.merged && !o.select.gold) {
        throw CLI::RequiredError("--gold (required by --merged)");
      }
      o.select.seed = o.seed;
      RunSelect(o.select, ctx);
    } else if (split->parsed()) {
      o.split.out = RequireOut(o, "split");
      o.split.seed = o.seed;
      RunSplit(o.split, ctx);
    } else if (milab->parsed()) {
      o.milab.out = RequireOut(o, "milab");
      o.milab.harmony = o.milab_harmony == "on";
      o.milab.seed = o.seed;
      try {
        o.milab.syn_sizes = ParseSizeList(o.milab_sizes);
      } catch (const Error& e) {
        throw CLI::ValidationError("--syn-sizes", e.what());
      }
      RunMilab(o.milab, ctx);
    } else if (report->parsed()) {
      o.report.out = RequireOut(o, "report");
      o.report.scores = NonEmpty(o.report_scores);
      o.report.harmony = NonEmpty(o.report_harmony);
      for (const std::string& s : o.report_selections) {
        o.report.selections.emplace_back(s);
      }
      o.report.seed = o.seed;
      RunReport(o.report, ctx);
    } else if (pipeline->parsed()) {
      std::optional<std::uint64_t> seed;
      if (app.get_option("--seed")->count() > 0) seed = o.seed;
      RunPipeline(o.pipeline_config, NonEmpty(o.out), seed, ctx);
    }
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.Describe() << '\n';
    const bool usage = e.code() == ErrorCode::kMissingConfigKey ||
                       e.code() == ErrorCode::kInvalidArgument;
    return usage ? kExitUsage : kExitDataError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  }
  return kExitOk;
}

}  // namespace morphaug

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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "morphaug/artifacts.h"
#include "morphaug/cli.h"
#include "morphaug/milab.h"
#include "morphaug/random.h"
#include "morphaug/report.h"
#include "morphaug/scoring.h"
#include "morphaug/selection.h"
#include "morphaug/splitgen.h"
#include "morphaug/status.h"
#include "morphaug/stemcorrupt.h"
#include "morphaug/text.h"
#include "test_oracles.h"

namespace morphaug {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void Require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string Fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

SyntheticExample ScoredItem(std::uint64_t id, const std::string& msd,
                            double score) {
  SyntheticExample e;
  e.triple = {ExampleId{id}, U"abc", U"abcd", ParseMsd(msd)};
  e.source_id = e.triple.id;
  e.score = score;
  return e;
}

// 1. MI decay on the 50-stem, 5-MSD grammar.
Outcome MiDecay(MiDecayCurve* keep) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  MilabOptions options;
  options.gold_n = 500;
  options.syn_sizes = {0, 500, 5000, 50000};
  options.theta = 1.0;
  options.seed = 2024;
  const MiDecayCurve curve =
      ComputeMiDecayCurve(MakeToyGrammar({50, 5, 2, false, 2024}), options);
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  for (std::size_t p = 0; p < 4; ++p) {
    const std::string name(MiPairName(kAllMiPairs[p]));
    for (std::size_t i = 1; i < curve.points.size(); ++i) {
      o.Require(curve.points[i].mi[p].mixture.lower <=
                    curve.points[i - 1].mi[p].mixture.upper,
                name + " increases at point " + std::to_string(i));
    }
    const double gold = curve.points.front().mi[p].gold_bits;
    const double last = curve.points.back().mi[p].mixture.point;
    o.Require(last < 0.1 * gold, name + " final " + Fmt(last) +
                                     " not below 10% of gold " + Fmt(gold));
  }
  o.Require(seconds < 60.0, "runtime " + Fmt(seconds) + " s");
  if (o.pass) {
    o.detail = "final/gold:";
    for (std::size_t p = 0; p < 4; ++p) {
      o.detail += " " + Fmt(curve.points.back().mi[p].mixture.point /
                            curve.points.front().mi[p].gold_bits);
    }
    o.detail += ", " + Fmt(seconds) + " s";
  }
  *keep = curve;
  return o;
}

// 2. Convexity bound on the curve (eps 0.02) and exactly on closed-form joints.
Outcome Convexity(const MiDecayCurve& curve) {
  Outcome o;
  for (const CurvePoint& point : curve.points) {
    for (const MiCurveEntry& e : point.mi) {
      o.Require(ConvexityBoundHolds(e.gold_bits, e.synthetic_bits.value_or(0.0),
                                    point.mixture.lambda(), e.mixture.point,
                                    0.02),
                std::string(MiPairName(e.pair)) + " at lambda " +
                    Fmt(point.mixture.lambda()));
    }
  }
  const std::vector<std::vector<std::vector<double>>> golds = {
      {{0.5, 0.0}, {0.0, 0.5}},
      {{1.0 / 3, 0, 0}, {0, 1.0 / 3, 0}, {0, 0, 1.0 / 3}},
      {{0.4, 0.1}, {0.1, 0.4}}};
  for (const auto& gold : golds) {
    const std::size_t n = gold.size();
    // Product of the gold marginals: I_A = 0 exactly.
    std::vector<double> marg(n, 1.0 / n);
    std::vector<std::vector<double>> syn(n, std::vector<double>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) syn[a][b] = marg[a] * marg[b];
    }
    const double ig = MutualInformationBits(gold);
    const double ia = MutualInformationBits(syn);
    for (int step = 0; step <= 20; ++step) {
      const double lambda = step / 20.0;
      std::vector<std::vector<double>> mix(n, std::vector<double>(n));
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          mix[a][b] = lambda * gold[a][b] + (1 - lambda) * syn[a][b];
        }
      }
      o.Require(ConvexityBoundHolds(ig, ia, lambda, MutualInformationBits(mix),
                                    0.0),
                "exact joint violates the bound at lambda " + Fmt(lambda));
    }
  }
  if (o.pass) o.detail = "all curve points and 63 exact joints";
  return o;
}

// 3. Factorization gap with and without harmony.
Outcome Factorization(const MiDecayCurve& curve) {
  Outcome o;
  double off_gap = -1.0;
  for (const CurvePoint& point : curve.points) {
    if (point.mixture.lambda() <= 0.01) {
      o.Require(point.gap.has_value(), "no qualifying cells at small lambda");
      if (point.gap) {
        off_gap = point.gap->tv_distance;
        o.Require(off_gap < 0.02, "harmony-off gap " + Fmt(off_gap));
      }
    }
  }
  o.Require(off_gap >= 0.0, "no point with lambda <= 0.01");
  const ToyGrammar harmony = MakeToyGrammar({50, 5, 2, true, 2024});
  const ToyDataset toy = GenerateGold(harmony, 10000, 7);
  const double on_gap =
      ComputeFactorizationGap(toy.data, toy.segmentations, 5).tv_distance;
  o.Require(on_gap > 0.05, "harmony-on gap " + Fmt(on_gap));
  if (o.pass) {
    o.detail = "off " + Fmt(off_gap) + " at lambda<=0.01, on " + Fmt(on_gap);
  }
  return o;
}

// 4. Substitution counts against Binomial(|stem|, theta); affixes intact.
Outcome CorruptionStats() {
  Outcome o;
  const Dataset gold = ParseUnimorph(
      "walk\twalked\tV;PST\n"
      "dog\tdogs\tN;PL\n"
      "schlagen\tgeschlagen\tV;V.PTCP;PST\n"
      "koira\tkoiran\tN;SG;GEN\n"
      "kitap\tkitaplar\tN;PL\n"
      "dal\tdalların\tN;PL;GEN\n"
      "Haus\tHäuser\tN;PL\n"
      "international\tinternationally\tADV\n");
  const Alphabet alphabet = ExtractAlphabet(gold);
  std::string pvalues;
  for (double theta : {0.25, 0.5, 1.0}) {
    CorruptionConfig cfg;
    cfg.theta = theta;
    cfg.seed = DeriveSeed(31, "acceptance");
    const SyntheticPool pool = GeneratePool(gold, 10000, alphabet, cfg);
    std::vector<double> observed(32, 0.0), expected(32, 0.0);
    for (const SyntheticExample& e : pool.examples) {
      const InflectionTriple& source = gold.triples[e.source_id.value];
      const Segmentation before = Segment(source.lemma, source.form);
      const Segmentation after = e.GetSegmentation();
      o.Require(after.LemmaAffix() == before.LemmaAffix() &&
                    after.FormAffix() == before.FormAffix() &&
                    e.triple.msd == source.msd,
                "affix or MSD changed");
      const std::size_t len = e.StemLength();
      observed[e.substituted_lemma_positions.size()] += 1;
      for (std::size_t k = 0; k <= len; ++k) {
        expected[k] += oracle::BinomialPmf(len, k, theta);
      }
    }
    const double p = oracle::ChiSquarePValue(observed, expected);
    o.Require(p > 0.01, "chi-square p " + Fmt(p) + " at theta " + Fmt(theta));
    pvalues += " " + Fmt(p);
  }
  if (o.pass) o.detail = "chi-square p:" + pvalues + "; affixes intact";
  return o;
}

// 5. Alignment cost and stem runs against independent oracles.
Outcome AlignmentOracle() {
  Outcome o;
  std::mt19937_64 gen(55);
  const std::u32string letters = U"abcd";
  std::uniform_int_distribution<std::size_t> len(1, 12);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::size_t with_stem = 0;
  for (int i = 0; i < 1000; ++i) {
    std::u32string a, b;
    for (std::size_t n = len(gen); n > 0; --n) a += letters[pick(gen)];
    // Half the pairs share a mutated copy so stems actually occur.
    if (i % 2 == 0) {
      b = a;
      for (char32_t& c : b) {
        if (gen() % 4 == 0) c = letters[pick(gen)];
      }
      if (gen() % 2) b += letters[pick(gen)];
    } else {
      for (std::size_t n = len(gen); n > 0; --n) b += letters[pick(gen)];
    }
    const CharAlignment al = Align(a, b);
    o.Require(al.cost == oracle::Levenshtein(a, b),
              "cost mismatch on " + EncodeUtf8(a) + "/" + EncodeUtf8(b));
    const std::vector<StemRun> expected = oracle::MaximalRuns(al, 3);
    std::vector<StemRun> got;
    try {
      got = ExtractStem(al, 3).runs();
      ++with_stem;
    } catch (const Error&) {
    }
    o.Require(got == expected,
              "runs mismatch on " + EncodeUtf8(a) + "/" + EncodeUtf8(b));
  }
  if (o.pass) {
    o.detail = "1000 pairs, " + std::to_string(with_stem) + " with stems";
  }
  return o;
}

// 6. Loss selection against a sort oracle; templatic first draws.
Outcome SelectionExactness() {
  Outcome o;
  std::mt19937_64 gen(66);
  std::uniform_int_distribution<int> coarse(0, 300);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<SyntheticExample> pool;
    for (std::uint64_t i = 0; i < 1000; ++i) {
      pool.push_back(ScoredItem(i, "N;K" + std::to_string(i % 7), coarse(gen) / 7.0));
    }
    std::shuffle(pool.begin(), pool.end(), gen);
    for (std::size_t k : {1u, 10u, 100u}) {
      o.Require(SelectByLoss(pool, k, LossDirection::kHighest).selected_ids ==
                    oracle::TopKBySort(pool, k, true),
                "highloss k=" + std::to_string(k));
      o.Require(SelectByLoss(pool, k, LossDirection::kLowest).selected_ids ==
                    oracle::TopKBySort(pool, k, false),
                "lowloss k=" + std::to_string(k));
    }
  }
  MsdHistogram nine_one;
  nine_one.Add("PL;ERG", 9);
  nine_one.Add("SG;ERG", 1);
  const auto q1 = TemplaticDistribution(nine_one, 1.0);
  o.Require(q1.at("PL;ERG") == 0.9 && q1.at("SG;ERG") == 0.1, "q_1 on 9-vs-1");

  std::vector<SyntheticExample> pool;
  for (std::uint64_t i = 0; i < 100; ++i) {
    pool.push_back(ScoredItem(i, i < 90 ? "PL;ERG" : "SG;ERG", 0.0));
  }
  const int kTrials = 10000;
  std::string freqs;
  for (double alpha : {0.0, 1.0}) {
    const double expected = alpha == 0.0 ? 0.5 : 0.9;
    double hits = 0;
    for (int t = 0; t < kTrials; ++t) {
      const SelectionResult r = SelectTemplatic(
          pool, 1, alpha, DeriveSeed(DeriveSeed(6, "templatic"), std::uint64_t(t)));
      hits += r.selected_ids[0].value < 90;
    }
    const double sigma = std::sqrt(kTrials * expected * (1 - expected));
    o.Require(std::abs(hits - kTrials * expected) <= 3 * sigma,
              "q_" + Fmt(alpha) + " first-draw frequency " + Fmt(hits / kTrials));
    freqs += " q" + Fmt(alpha) + "=" + Fmt(hits / kTrials);
  }
  if (o.pass) o.detail = "sort oracle exact;" + freqs;
  return o;
}

// 7. MSD concentration of HighLoss against UMT+Loss.
Outcome ModeConcentration() {
  Outcome o;
  const std::size_t k = 64;
  std::vector<SyntheticExample> pool;
  std::mt19937_64 gen(77);
  std::uniform_real_distribution<double> low(0.0, 1.0);
  std::uniform_real_distribution<double> high(2.0, 3.0);
  for (std::uint64_t i = 0; i < 400; ++i) {
    const std::string msd = "V;K" + std::to_string(i % 4);
    // MSD V;K0 owns every score above the rest.
    pool.push_back(ScoredItem(i, msd, i % 4 == 0 ? high(gen) : low(gen)));
  }
  const std::size_t high_mode =
      MsdModeFrequency(Select(pool, SelectionStrategy::Named(
                                        StrategyKind::kHighLoss, k, 1)))
          .second;
  const std::size_t hybrid_mode =
      MsdModeFrequency(Select(pool, SelectionStrategy::Named(
                                        StrategyKind::kUmtLoss, k, 1)))
          .second;
  o.Require(high_mode == k, "highloss mode " + std::to_string(high_mode));
  o.Require(hybrid_mode < high_mode,
            "umt-loss mode " + std::to_string(hybrid_mode));
  o.detail = "highloss " + std::to_string(high_mode) + ", umt-loss " +
             std::to_string(hybrid_mode) + " of k=" + std::to_string(k);
  return o;
}

// 8. Uniform scorer and trigram chain rule.
Outcome ScoringSanity() {
  Outcome o;
  for (std::size_t v : {2u, 4u, 7u, 31u, 100u}) {
    const UniformScorer scorer(v);
    for (const char32_t* form : {U"a", U"abcdefgh", U"xyzzy"}) {
      SyntheticExample e;
      e.triple = {ExampleId{0}, U"lemma", form, {"N"}};
      o.Require(Score(scorer, e).nll == std::log(static_cast<double>(v)),
                "uniform nll for V=" + std::to_string(v));
    }
  }
  const Dataset gold = ParseUnimorph(
      "dog\tdogs\tN;PL\ncat\tcats\tN;PL\nwalk\twalked\tV;PST\n");
  const NGramScorer trigram = NGramScorer::Train(gold, {3, 0.1});
  double worst = 0.0;
  for (const InflectionTriple& t : gold.triples) {
    SyntheticExample e;
    e.triple = t;
    worst = std::max(worst, std::abs(Score(trigram, e).nll -
                                     oracle::TrigramChainRuleNll(gold, t, 0.1)));
  }
  o.Require(worst <= 1e-9, "trigram deviates by " + Fmt(worst));
  if (o.pass) o.detail = "max trigram deviation " + Fmt(worst);
  return o;
}

// 9. Every subcommand twice, byte-compared.
Outcome Determinism() {
  Outcome o;
  namespace fs = std::filesystem;
  const fs::path dir =
      fs::temp_directory_path() / ("morphaug_accept_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto path = [&](const std::string& n) { return (dir / n).string(); };
  std::ofstream(dir / "gold.tsv")
      << "walk\twalked\tV;PST\nwalk\twalks\tV;PRS;3;SG\ndog\tdogs\tN;PL\n"
         "kitap\tkitaplar\tN;PL\ndal\tdalların\tN;PL;GEN\nev\tevler\tN;PL\n"
         "koira\tkoiran\tN;SG;GEN\nplay\tplaying\tV;V.PTCP;PRS\n"
         "talk\ttalked\tV;PST\ngöz\tgözler\tN;PL\n";
  std::ofstream(dir / "vowels.tsv") << "a\tback\no\tback\nı\tback\nu\tback\n"
                                       "e\tfront\ni\tfront\nö\tfront\nü\tfront\n";
  std::ofstream(dir / "run.cfg")
      << "gold = gold.tsv\nout_dir = pipe\nn = 2048\ntheta = 0.5\nk = sweep\n"
         "seed = 5\nharmony = vowels.tsv\nfull = gold.tsv\nresamples = 200\n";
  const std::vector<std::vector<std::string>> steps = {
      {"parse", "--in", path("gold.tsv"), "--out", path("gold.jsonl"),
       "--alignments", path("align.jsonl")},
      {"augment", "--gold", path("gold.tsv"), "--n", "1000", "--theta", "0.5",
       "--seed", "7", "--out", path("pool.jsonl"), "--tsv", path("pool.tsv")},
      {"score", "--gold", path("gold.tsv"), "--pool", path("pool.jsonl"),
       "--out", path("scores.tsv")},
      {"select", "--pool", path("pool.jsonl"), "--scores", path("scores.tsv"),
       "--strategy", "umt-loss", "--k", "128", "--seed", "1", "--gold",
       path("gold.tsv"), "--merged", path("merged.tsv"), "--out",
       path("sel.json")},
      {"split", "--full", path("gold.tsv"), "--train", path("pool.tsv"),
       "--out", path("test.tsv")},
      {"milab", "--stems", "50", "--msds", "5", "--gold", "500", "--syn-sizes",
       "0,100,1000,10000", "--theta", "1.0", "--harmony", "on", "--seed", "3",
       "--resamples", "50", "--out", path("curve.json")},
      {"report", "--pool", path("pool.jsonl"), "--scores", path("scores.tsv"),
       "--selection", path("sel.json"), "--harmony", path("vowels.tsv"),
       "--resamples", "500", "--out", path("report.json")},
      {"--quiet", "pipeline", "--config", path("run.cfg")},
  };
  const auto snapshot = [&] {
    std::map<std::string, std::uint64_t> hashes;
    for (const auto& e : fs::recursive_directory_iterator(dir)) {
      if (e.is_regular_file()) {
        hashes[fs::relative(e.path(), dir).string()] =
            Fnv1a64(ReadFile(e.path()));
      }
    }
    return hashes;
  };
  std::ostringstream sink;
  std::map<std::string, std::uint64_t> first;
  for (int round = 0; round < 2; ++round) {
    for (const auto& step : steps) {
      const int rc = RunCli(step, sink, sink);
      o.Require(rc == 0, step[0] + " exited " + std::to_string(rc) + ": " +
                             sink.str());
    }
    if (round == 0) first = snapshot();
  }
  const auto second = snapshot();
  o.Require(first == second, "artifacts differ between runs");
  if (o.pass) {
    o.detail = std::to_string(first.size()) + " artifacts identical";
  }
  fs::remove_all(dir);
  return o;
}

// 10. Lemma split invariants against a brute-force filter.
Outcome LemmaSplitInvariants() {
  Outcome o;
  std::mt19937_64 gen(1010);
  std::string full_text, train_text;
  for (int i = 0; i < 1000; ++i) {
    const int lemma = static_cast<int>(gen() % 300);
    full_text += "lx" + std::to_string(lemma) + "\tlx" + std::to_string(lemma) +
                 "e\tV;K" + std::to_string(i % 5) + "\n";
  }
  for (int i = 0; i < 100; ++i) {
    const int lemma = static_cast<int>(gen() % 400);
    train_text += "lx" + std::to_string(lemma) + "\tlx" + std::to_string(lemma) +
                  "\tV;NFIN\n";
  }
  const Dataset full = ParseUnimorph(full_text);
  const Dataset train = ParseUnimorph(train_text);
  const LemmaSplit split = MakeLemmaSplit(full, train);
  std::set<std::u32string> train_lemmas;
  for (const auto& t : train.triples) train_lemmas.insert(t.lemma);
  std::size_t expected_test = 0;
  for (const auto& t : full.triples) expected_test += !train_lemmas.count(t.lemma);
  for (const auto& t : split.test.triples) {
    o.Require(!train_lemmas.count(t.lemma), "lemma leaked into test");
  }
  o.Require(split.test.size() + split.excluded == full.size(), "conservation");
  o.Require(split.test.size() == expected_test,
            "test size " + std::to_string(split.test.size()) + " vs " +
                std::to_string(expected_test));
  if (o.pass) {
    o.detail = std::to_string(split.test.size()) + " test, " +
               std::to_string(split.excluded) + " excluded";
  }
  return o;
}

}  // namespace
}  // namespace morphaug

int main() {
  using namespace morphaug;
  MiDecayCurve curve;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> checks = {
      {"MI decay", [&] { return MiDecay(&curve); }},
      {"convexity bound", [&] { return Convexity(curve); }},
      {"factorization", [&] { return Factorization(curve); }},
      {"corruption statistics", CorruptionStats},
      {"alignment oracle", AlignmentOracle},
      {"selection exactness", SelectionExactness},
      {"MSD mode concentration", ModeConcentration},
      {"scoring sanity", ScoringSanity},
      {"determinism", Determinism},
      {"lemma split", LemmaSplitInvariants},
  };
  int failures = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    Outcome o;
    try {
      o = checks[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                checks[i].first.c_str(), o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}

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

#include "morphaug/alignment.h"

#include <limits>

#include "json.hpp"
#include "morphaug/status.h"
#include "morphaug/text.h"

namespace morphaug {
namespace {

// Objective for the suffix table: fewer edits first, then more matches.
struct Cell {
  std::uint32_t cost = 0;
  std::uint32_t matches = 0;

  bool BetterThan(const Cell& other) const {
    if (cost != other.cost) return cost < other.cost;
    return matches > other.matches;
  }
  bool operator==(const Cell&) const = default;
};

std::vector<bool> StemMask(std::size_t length, const std::vector<StemRun>& runs,
                           bool lemma_side) {
  std::vector<bool> mask(length, false);
  for (const StemRun& run : runs) {
    const std::size_t begin = lemma_side ? run.lemma_begin : run.form_begin;
    for (std::size_t i = 0; i < run.length; ++i) mask[begin + i] = true;
  }
  return mask;
}

std::u32string Pick(const std::u32string& text, const std::vector<bool>& mask,
                    bool want) {
  std::u32string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (mask[i] == want) out.push_back(text[i]);
  }
  return out;
}

}  // namespace

std::size_t CharAlignment::MatchCount() const {
  std::size_t matches = 0;
  for (const AlignedPair& p : pairs) matches += p.op == EditOp::kMatch;
  return matches;
}

Segmentation::Segmentation(std::u32string lemma, std::u32string form,
                           std::vector<StemRun> runs, std::size_t min_run)
    : lemma_(std::move(lemma)), form_(std::move(form)), runs_(std::move(runs)) {
  std::size_t lemma_floor = 0;
  std::size_t form_floor = 0;
  for (const StemRun& run : runs_) {
    if (run.length < std::max<std::size_t>(min_run, 1) ||
        run.lemma_begin < lemma_floor || run.form_begin < form_floor ||
        run.lemma_begin + run.length > lemma_.size() ||
        run.form_begin + run.length > form_.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "stem runs must be ordered, in range and >= min_run long");
    }
    for (std::size_t i = 0; i < run.length; ++i) {
      if (lemma_[run.lemma_begin + i] != form_[run.form_begin + i]) {
        throw Error(ErrorCode::kInvalidArgument,
                    "stem run characters differ between lemma and form");
      }
    }
    lemma_floor = run.lemma_begin + run.length;
    form_floor = run.form_begin + run.length;
  }
}

std::vector<Span> Segmentation::LemmaStemSpans() const {
  std::vector<Span> spans;
  for (const StemRun& r : runs_) {
    spans.push_back({r.lemma_begin, r.lemma_begin + r.length});
  }
  return spans;
}

std::vector<Span> Segmentation::FormStemSpans() const {
  std::vector<Span> spans;
  for (const StemRun& r : runs_) {
    spans.push_back({r.form_begin, r.form_begin + r.length});
  }
  return spans;
}

std::vector<bool> Segmentation::LemmaStemMask() const {
  return StemMask(lemma_.size(), runs_, true);
}

std::vector<bool> Segmentation::FormStemMask() const {
  return StemMask(form_.size(), runs_, false);
}

std::u32string Segmentation::LemmaStem() const {
  return Pick(lemma_, LemmaStemMask(), true);
}
std::u32string Segmentation::LemmaAffix() const {
  return Pick(lemma_, LemmaStemMask(), false);
}
std::u32string Segmentation::FormStem() const {
  return Pick(form_, FormStemMask(), true);
}
std::u32string Segmentation::FormAffix() const {
  return Pick(form_, FormStemMask(), false);
}

std::size_t Segmentation::StemLength() const {
  std::size_t length = 0;
  for (const StemRun& r : runs_) length += r.length;
  return length;
}

CharAlignment Align(std::u32string_view lemma, std::u32string_view form) {
  if (lemma.empty() || form.empty()) {
    throw Error(ErrorCode::kEmptyInput, "cannot align an empty string");
  }
  const std::size_t n = lemma.size();
  const std::size_t m = form.size();
  const std::size_t width = m + 1;
  // table[i * width + j] describes the best alignment of lemma[i:], form[j:].
  std::vector<Cell> table((n + 1) * width);
  for (std::size_t i = n + 1; i-- > 0;) {
    for (std::size_t j = m + 1; j-- > 0;) {
      Cell& cell = table[i * width + j];
      if (i == n && j == m) continue;
      Cell best{std::numeric_limits<std::uint32_t>::max(), 0};
      if (i < n && j < m) {
        const Cell& diag = table[(i + 1) * width + j + 1];
        Cell candidate = diag;
        if (lemma[i] == form[j]) {
          ++candidate.matches;
        } else {
          ++candidate.cost;
        }
        if (candidate.BetterThan(best)) best = candidate;
      }
      if (i < n) {
        Cell candidate = table[(i + 1) * width + j];
        ++candidate.cost;
        if (candidate.BetterThan(best)) best = candidate;
      }
      if (j < m) {
        Cell candidate = table[i * width + j + 1];
        ++candidate.cost;
        if (candidate.BetterThan(best)) best = candidate;
      }
      cell = best;
    }
  }

  CharAlignment alignment;
  alignment.lemma = std::u32string(lemma);
  alignment.form = std::u32string(form);
  alignment.cost = table[0].cost;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < n || j < m) {
    const Cell& here = table[i * width + j];
    if (i < n && j < m) {
      Cell via = table[(i + 1) * width + j + 1];
      const bool same = lemma[i] == form[j];
      if (same) {
        ++via.matches;
      } else {
        ++via.cost;
      }
      if (via == here) {
        alignment.pairs.push_back(
            {i, j, same ? EditOp::kMatch : EditOp::kSubstitute});
        ++i;
        ++j;
        continue;
      }
    }
    if (i < n) {
      Cell via = table[(i + 1) * width + j];
      ++via.cost;
      if (via == here) {
        alignment.pairs.push_back({i, std::nullopt, EditOp::kDelete});
        ++i;
        continue;
      }
    }
    alignment.pairs.push_back({std::nullopt, j, EditOp::kInsert});
    ++j;
  }
  return alignment;
}

Segmentation ExtractStem(const CharAlignment& alignment, std::size_t min_run) {
  if (min_run == 0) {
    throw Error(ErrorCode::kInvalidArgument, "min_run must be positive");
  }
  std::vector<StemRun> runs;
  const auto& pairs = alignment.pairs;
  std::size_t k = 0;
  while (k < pairs.size()) {
    if (pairs[k].op != EditOp::kMatch) {
      ++k;
      continue;
    }
    std::size_t end = k;
    while (end < pairs.size() && pairs[end].op == EditOp::kMatch) ++end;
    if (end - k >= min_run) {
      runs.push_back({*pairs[k].lemma_index, *pairs[k].form_index, end - k});
    }
    k = end;
  }
  if (runs.empty()) {
    throw Error(ErrorCode::kNoStem,
                "no aligned run of length >= " + std::to_string(min_run) +
                    " between '" + EncodeUtf8(alignment.lemma) + "' and '" +
                    EncodeUtf8(alignment.form) + "'");
  }
  return Segmentation(alignment.lemma, alignment.form, std::move(runs),
                      min_run);
}

Segmentation Segment(std::u32string_view lemma, std::u32string_view form,
                     std::size_t min_run) {
  return ExtractStem(Align(lemma, form), min_run);
}

std::string AlignmentDebugJson(const CharAlignment& alignment,
                               std::size_t min_run) {
  nlohmann::ordered_json record;
  record["lemma"] = EncodeUtf8(alignment.lemma);
  record["form"] = EncodeUtf8(alignment.form);
  nlohmann::json pairs = nlohmann::json::array();
  for (const AlignedPair& p : alignment.pairs) {
    pairs.push_back({p.lemma_index ? nlohmann::json(*p.lemma_index) : nullptr,
                     p.form_index ? nlohmann::json(*p.form_index) : nullptr});
  }
  record["pairs"] = std::move(pairs);
  record["cost"] = alignment.cost;
  nlohmann::json spans = nlohmann::json::array();
  try {
    const Segmentation seg = ExtractStem(alignment, min_run);
    for (const StemRun& r : seg.runs()) {
      spans.push_back({{"lemma", {r.lemma_begin, r.lemma_begin + r.length}},
                       {"form", {r.form_begin, r.form_begin + r.length}}});
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoStem) throw;
  }
  record["stem_spans"] = std::move(spans);
  return record.dump();
}

}  // namespace morphaug

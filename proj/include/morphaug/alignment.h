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

#ifndef MORPHAUG_ALIGNMENT_H_
#define MORPHAUG_ALIGNMENT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace morphaug {

inline constexpr std::size_t kDefaultMinRun = 3;

enum class EditOp : std::uint8_t { kMatch, kSubstitute, kDelete, kInsert };

// kDelete consumes a lemma character only, kInsert a form character only.
struct AlignedPair {
  std::optional<std::size_t> lemma_index;
  std::optional<std::size_t> form_index;
  EditOp op;

  bool operator==(const AlignedPair&) const = default;
};

// Monotone character alignment of a lemma against its inflected form.
struct CharAlignment {
  std::u32string lemma;
  std::u32string form;
  std::vector<AlignedPair> pairs;
  std::size_t cost = 0;

  std::size_t MatchCount() const;
};

// A maximal run of matched characters: lemma[lemma_begin, lemma_begin+length)
// equals form[form_begin, form_begin+length).
struct StemRun {
  std::size_t lemma_begin = 0;
  std::size_t form_begin = 0;
  std::size_t length = 0;

  bool operator==(const StemRun&) const = default;
};

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool operator==(const Span&) const = default;
};

// Stem/affix decomposition of a lemma-form pair. Stem runs are ordered and
// non-overlapping on both sides; everything outside them is affix.
class Segmentation {
 public:
  // Validates that the runs are ordered, in range, at least `min_run` long
  // and carry identical characters on both sides. Throws kInvalidArgument.
  Segmentation(std::u32string lemma, std::u32string form,
               std::vector<StemRun> runs, std::size_t min_run = 1);

  const std::u32string& lemma() const { return lemma_; }
  const std::u32string& form() const { return form_; }
  const std::vector<StemRun>& runs() const { return runs_; }

  std::vector<Span> LemmaStemSpans() const;
  std::vector<Span> FormStemSpans() const;

  // Stem characters concatenated in order; affix is the complement.
  std::u32string LemmaStem() const;
  std::u32string LemmaAffix() const;
  std::u32string FormStem() const;
  std::u32string FormAffix() const;

  std::size_t StemLength() const;
  std::vector<bool> LemmaStemMask() const;
  std::vector<bool> FormStemMask() const;

 private:
  std::u32string lemma_;
  std::u32string form_;
  std::vector<StemRun> runs_;
};

// Minimum unit-cost edit alignment. Among minimum-cost alignments the one
// with the most matched characters wins; remaining ties resolve to the
// leftmost choice in the order match, substitution, deletion, insertion.
// Throws kEmptyInput if either side is empty.
CharAlignment Align(std::u32string_view lemma, std::u32string_view form);

// Maximal runs of consecutive matches of length >= min_run become the stem.
// Throws kNoStem when no run qualifies.
Segmentation ExtractStem(const CharAlignment& alignment,
                         std::size_t min_run = kDefaultMinRun);

// Align + ExtractStem.
Segmentation Segment(std::u32string_view lemma, std::u32string_view form,
                     std::size_t min_run = kDefaultMinRun);

// JSON object {lemma, form, pairs, cost, stem_spans} for debug export.
// stem_spans is empty when the pair has no stem.
std::string AlignmentDebugJson(const CharAlignment& alignment,
                               std::size_t min_run = kDefaultMinRun);

}  // namespace morphaug

#endif  // MORPHAUG_ALIGNMENT_H_

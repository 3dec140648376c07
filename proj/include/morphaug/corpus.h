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

#ifndef MORPHAUG_CORPUS_H_
#define MORPHAUG_CORPUS_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace morphaug {

struct ExampleId {
  std::uint64_t value = 0;

  auto operator<=>(const ExampleId&) const = default;
};

struct ExampleIdHash {
  std::size_t operator()(ExampleId id) const {
    return std::hash<std::uint64_t>{}(id.value);
  }
};

// One gold or synthetic example: lemma X, inflected form Y and the
// morphosyntactic description T as an ordered list of feature tokens.
struct InflectionTriple {
  ExampleId id;
  std::u32string lemma;
  std::u32string form;
  std::vector<std::string> msd;

  // Feature tokens joined with ';' in their given order.
  std::string MsdKey() const;

  bool operator==(const InflectionTriple&) const = default;
};

struct Dataset {
  std::string name;
  std::vector<InflectionTriple> triples;

  std::size_t size() const { return triples.size(); }
  bool empty() const { return triples.empty(); }

  bool operator==(const Dataset&) const = default;
};

// Ordered set of code points.
class Alphabet {
 public:
  // Sorts and deduplicates. Throws kInvalidArgument when empty.
  explicit Alphabet(std::vector<char32_t> chars);

  std::span<const char32_t> chars() const { return chars_; }
  std::size_t size() const { return chars_.size(); }
  bool Contains(char32_t c) const;
  // Position of `c` in sorted order, or size() if absent.
  std::size_t IndexOf(char32_t c) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<char32_t> chars_;
};

// Empirical distribution over canonical MSD strings.
class MsdHistogram {
 public:
  void Add(const std::string& msd_key, std::size_t count = 1);

  const std::map<std::string, std::size_t>& counts() const { return counts_; }
  std::size_t total() const { return total_; }
  std::size_t Count(const std::string& msd_key) const;
  // counts/total; 0 for unseen keys or an empty histogram.
  double Proportion(const std::string& msd_key) const;

  bool operator==(const MsdHistogram&) const = default;

 private:
  std::map<std::string, std::size_t> counts_;
  std::size_t total_ = 0;
};

// Splits "N;PL" into {"N", "PL"}. Throws kEmptyField for an empty token and
// kMalformedLine for a token containing whitespace.
std::vector<std::string> ParseMsd(std::string_view msd, std::size_t line = 0);

// UniMorph TSV: lemma<TAB>form<TAB>MSD per line. Blank lines are skipped and
// ids follow the order of the parsed triples, starting at 0. A trailing '\r'
// is tolerated.
Dataset ParseUnimorph(std::istream& in, std::string name = "gold");
Dataset ParseUnimorph(std::string_view text, std::string name = "gold");

void WriteUnimorph(const Dataset& dataset, std::ostream& out);
std::string SerializeUnimorph(const Dataset& dataset);

// JSONL with one {id, lemma, form, msd} object per line.
void WriteTriplesJsonl(const Dataset& dataset, std::ostream& out);

Alphabet ExtractAlphabet(const Dataset& dataset);
MsdHistogram BuildMsdHistogram(const Dataset& dataset);
MsdHistogram BuildMsdHistogram(std::span<const InflectionTriple> triples);

}  // namespace morphaug

#endif  // MORPHAUG_CORPUS_H_

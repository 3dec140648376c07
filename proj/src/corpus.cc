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

#include "morphaug/corpus.h"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "morphaug/status.h"
#include "morphaug/text.h"

namespace morphaug {
namespace {

bool IsBlank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\r';
  });
}

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

}  // namespace

std::string InflectionTriple::MsdKey() const {
  std::string key;
  for (std::size_t i = 0; i < msd.size(); ++i) {
    if (i > 0) key += ';';
    key += msd[i];
  }
  return key;
}

Alphabet::Alphabet(std::vector<char32_t> chars) : chars_(std::move(chars)) {
  std::sort(chars_.begin(), chars_.end());
  chars_.erase(std::unique(chars_.begin(), chars_.end()), chars_.end());
  if (chars_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "alphabet must be nonempty");
  }
}

bool Alphabet::Contains(char32_t c) const {
  return std::binary_search(chars_.begin(), chars_.end(), c);
}

std::size_t Alphabet::IndexOf(char32_t c) const {
  const auto it = std::lower_bound(chars_.begin(), chars_.end(), c);
  if (it == chars_.end() || *it != c) return chars_.size();
  return static_cast<std::size_t>(it - chars_.begin());
}

void MsdHistogram::Add(const std::string& msd_key, std::size_t count) {
  if (count == 0) return;
  counts_[msd_key] += count;
  total_ += count;
}

std::size_t MsdHistogram::Count(const std::string& msd_key) const {
  const auto it = counts_.find(msd_key);
  return it == counts_.end() ? 0 : it->second;
}

double MsdHistogram::Proportion(const std::string& msd_key) const {
  if (total_ == 0) return 0.0;
  return static_cast<double>(Count(msd_key)) / static_cast<double>(total_);
}

std::vector<std::string> ParseMsd(std::string_view msd, std::size_t line) {
  std::vector<std::string> tokens;
  std::size_t start = 0;
  while (true) {
    const std::size_t semi = msd.find(';', start);
    const std::string_view token =
        msd.substr(start, semi == std::string_view::npos ? msd.npos
                                                          : semi - start);
    if (token.empty()) {
      throw Error(ErrorCode::kEmptyField, "empty MSD feature token", line);
    }
    if (token.find_first_of(" \t\r\n\f\v") != std::string_view::npos) {
      throw Error(ErrorCode::kMalformedLine,
                  "MSD feature token contains whitespace", line);
    }
    tokens.emplace_back(token);
    if (semi == std::string_view::npos) return tokens;
    start = semi + 1;
  }
}

Dataset ParseUnimorph(std::istream& in, std::string name) {
  Dataset dataset;
  dataset.name = std::move(name);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
    if (IsBlank(view)) continue;
    const std::vector<std::string_view> fields = SplitTabs(view);
    if (fields.size() != 3) {
      throw Error(ErrorCode::kMalformedLine,
                  "expected 3 tab-separated fields, found " +
                      std::to_string(fields.size()),
                  line_no);
    }
    for (std::string_view field : fields) {
      if (field.empty()) {
        throw Error(ErrorCode::kEmptyField, "empty lemma, form or MSD",
                    line_no);
      }
    }
    InflectionTriple triple;
    triple.id = ExampleId{dataset.triples.size()};
    try {
      triple.lemma = DecodeUtf8(fields[0]);
      triple.form = DecodeUtf8(fields[1]);
    } catch (const Error& e) {
      throw Error(e.code(), e.what(), line_no);
    }
    triple.msd = ParseMsd(fields[2], line_no);
    dataset.triples.push_back(std::move(triple));
  }
  return dataset;
}

Dataset ParseUnimorph(std::string_view text, std::string name) {
  std::istringstream in{std::string(text)};
  return ParseUnimorph(in, std::move(name));
}

void WriteUnimorph(const Dataset& dataset, std::ostream& out) {
  for (const InflectionTriple& t : dataset.triples) {
    out << EncodeUtf8(t.lemma) << '\t' << EncodeUtf8(t.form) << '\t'
        << t.MsdKey() << '\n';
  }
}

std::string SerializeUnimorph(const Dataset& dataset) {
  std::ostringstream out;
  WriteUnimorph(dataset, out);
  return out.str();
}

void WriteTriplesJsonl(const Dataset& dataset, std::ostream& out) {
  for (const InflectionTriple& t : dataset.triples) {
    nlohmann::ordered_json record;
    record["id"] = t.id.value;
    record["lemma"] = EncodeUtf8(t.lemma);
    record["form"] = EncodeUtf8(t.form);
    record["msd"] = t.MsdKey();
    out << record.dump() << '\n';
  }
}

Alphabet ExtractAlphabet(const Dataset& dataset) {
  if (dataset.empty()) {
    throw Error(ErrorCode::kEmptyDataset,
                "cannot extract an alphabet from an empty dataset");
  }
  std::unordered_set<char32_t> seen;
  for (const InflectionTriple& t : dataset.triples) {
    seen.insert(t.lemma.begin(), t.lemma.end());
    seen.insert(t.form.begin(), t.form.end());
  }
  return Alphabet(std::vector<char32_t>(seen.begin(), seen.end()));
}

MsdHistogram BuildMsdHistogram(const Dataset& dataset) {
  return BuildMsdHistogram(std::span<const InflectionTriple>(dataset.triples));
}

MsdHistogram BuildMsdHistogram(std::span<const InflectionTriple> triples) {
  MsdHistogram histogram;
  for (const InflectionTriple& t : triples) histogram.Add(t.MsdKey());
  return histogram;
}

}  // namespace morphaug

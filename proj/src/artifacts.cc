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

#include "morphaug/artifacts.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

#include "morphaug/random.h"
#include "morphaug/status.h"
#include "morphaug/text.h"

namespace morphaug {
namespace {

using nlohmann::json;

json RunsToJson(const std::vector<StemRun>& runs) {
  json out = json::array();
  for (const StemRun& r : runs) {
    out.push_back({r.lemma_begin, r.form_begin, r.length});
  }
  return out;
}

std::vector<StemRun> RunsFromJson(const json& value) {
  std::vector<StemRun> runs;
  for (const json& r : value) {
    if (!r.is_array() || r.size() != 3) {
      throw std::invalid_argument("stem run must be [lemma, form, length]");
    }
    runs.push_back({r[0].get<std::size_t>(), r[1].get<std::size_t>(),
                    r[2].get<std::size_t>()});
  }
  return runs;
}

}  // namespace

std::string ConfigHash(const json& config) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(Fnv1a64(config.dump())));
  return buf;
}

json MakeProvenance(std::string_view stage, const json& config,
                    std::uint64_t seed) {
  return {{"tool", kToolName},
          {"format_version", kFormatVersion},
          {"stage", stage},
          {"seed", seed},
          {"config", config},
          {"config_hash", ConfigHash(config)}};
}

void WriteFileAtomic(const std::filesystem::path& path,
                     std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error(ErrorCode::kIo, "cannot write " + tmp.string());
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw Error(ErrorCode::kIo, "short write to " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw Error(ErrorCode::kIo,
                "cannot rename onto " + path.string() + ": " + ec.message());
  }
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::filesystem::path SidecarPath(const std::filesystem::path& artifact) {
  std::filesystem::path out = artifact;
  out += ".prov.json";
  return out;
}

std::string SerializePoolJsonl(const SyntheticPool& pool,
                               const json& provenance) {
  std::string out = json{{"provenance", provenance}}.dump();
  out += '\n';
  for (const SyntheticExample& e : pool.examples) {
    json line = {{"id", e.triple.id.value},
                 {"source_id", e.source_id.value},
                 {"lemma", EncodeUtf8(e.triple.lemma)},
                 {"form", EncodeUtf8(e.triple.form)},
                 {"msd", e.triple.MsdKey()},
                 {"substituted_lemma_positions", e.substituted_lemma_positions},
                 {"substituted_form_positions", e.substituted_form_positions},
                 {"lev_to_gold_target", e.lev_to_gold_target},
                 {"stem_runs", RunsToJson(e.stem_runs)}};
    out += line.dump();
    out += '\n';
  }
  return out;
}

SyntheticPool ParsePoolJsonl(std::string_view text, json* provenance) {
  SyntheticPool pool;
  std::size_t line_no = 0;
  bool seen_header = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    try {
      const json value = json::parse(line);
      if (!seen_header && value.is_object() && value.contains("provenance")) {
        seen_header = true;
        if (provenance != nullptr) *provenance = value.at("provenance");
        continue;
      }
      seen_header = true;
      SyntheticExample e;
      e.triple.id = ExampleId{value.at("id").get<std::uint64_t>()};
      e.source_id = ExampleId{value.at("source_id").get<std::uint64_t>()};
      e.triple.lemma = DecodeUtf8(value.at("lemma").get<std::string>());
      e.triple.form = DecodeUtf8(value.at("form").get<std::string>());
      e.triple.msd = ParseMsd(value.at("msd").get<std::string>(), line_no);
      e.substituted_lemma_positions =
          value.at("substituted_lemma_positions").get<std::vector<std::size_t>>();
      e.substituted_form_positions =
          value.at("substituted_form_positions").get<std::vector<std::size_t>>();
      e.lev_to_gold_target = value.at("lev_to_gold_target").get<std::size_t>();
      e.stem_runs = RunsFromJson(value.at("stem_runs"));
      e.GetSegmentation();  // validates the runs against the strings
      pool.examples.push_back(std::move(e));
    } catch (const Error& e) {
      throw Error(e.code(), e.what(), line_no);
    } catch (const std::exception& e) {
      throw Error(ErrorCode::kMalformedLine,
                  std::string("bad pool record: ") + e.what(), line_no);
    }
  }
  return pool;
}

json SelectionToJson(const SelectionResult& selection) {
  json ids = json::array();
  for (ExampleId id : selection.selected_ids) ids.push_back(id.value);
  json counts = json::object();
  for (const auto& [msd, count] : selection.per_msd_counts.counts()) {
    counts[msd] = count;
  }
  return {{"strategy", StrategyName(selection.strategy.kind)},
          {"k", selection.strategy.k},
          {"alpha", selection.strategy.alpha},
          {"seed", selection.strategy.seed},
          {"selected_ids", ids},
          {"per_msd_counts", counts}};
}

SelectionResult SelectionFromJson(const json& document) {
  try {
    SelectionResult out;
    out.strategy.kind =
        ParseStrategyName(document.at("strategy").get<std::string>());
    out.strategy.k = document.at("k").get<std::size_t>();
    out.strategy.alpha = document.at("alpha").get<double>();
    out.strategy.seed = document.at("seed").get<std::uint64_t>();
    for (const json& id : document.at("selected_ids")) {
      out.selected_ids.push_back(ExampleId{id.get<std::uint64_t>()});
    }
    for (const auto& [msd, count] : document.at("per_msd_counts").items()) {
      out.per_msd_counts.Add(msd, count.get<std::size_t>());
    }
    return out;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::kMalformedLine,
                std::string("not a selection document: ") + e.what());
  }
}

}  // namespace morphaug

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

#ifndef MORPHAUG_ARTIFACTS_H_
#define MORPHAUG_ARTIFACTS_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "morphaug/selection.h"
#include "morphaug/stemcorrupt.h"

namespace morphaug {

inline constexpr std::string_view kFormatVersion = "morphaug-artifact/1";
inline constexpr std::string_view kToolName = "morphaug";

// FNV-1a of the compact JSON dump, as 16 lowercase hex digits.
std::string ConfigHash(const nlohmann::json& config);

// {tool, format_version, stage, seed, config, config_hash}. Contains no
// timestamps or host details so reruns are byte-identical.
nlohmann::json MakeProvenance(std::string_view stage,
                              const nlohmann::json& config, std::uint64_t seed);

// Writes to a temporary sibling and renames it over `path`, so readers never
// see a partial file. Throws kIo.
void WriteFileAtomic(const std::filesystem::path& path,
                     std::string_view contents);
// Throws kIo.
std::string ReadFile(const std::filesystem::path& path);

// Provenance for artifacts without room for it, e.g. TSV files.
std::filesystem::path SidecarPath(const std::filesystem::path& artifact);

// One JSON object per example, after a first {"provenance": ...} line.
std::string SerializePoolJsonl(const SyntheticPool& pool,
                               const nlohmann::json& provenance);
// Inverse of SerializePoolJsonl. Scores are not part of the format. Throws
// kMalformedLine with the 1-based line number. `provenance` receives the
// header when given.
SyntheticPool ParsePoolJsonl(std::string_view text,
                             nlohmann::json* provenance = nullptr);

nlohmann::json SelectionToJson(const SelectionResult& selection);
// Throws kMalformedLine for a document that is not a selection.
SelectionResult SelectionFromJson(const nlohmann::json& document);

}  // namespace morphaug

#endif  // MORPHAUG_ARTIFACTS_H_

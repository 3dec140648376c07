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

#include "morphaug/status.h"

namespace morphaug {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInvalidUtf8: return "InvalidUtf8";
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kEmptyField: return "EmptyField";
    case ErrorCode::kEmptyDataset: return "EmptyDataset";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kNoStem: return "NoStem";
    case ErrorCode::kAlphabetTooSmall: return "AlphabetTooSmall";
    case ErrorCode::kNoAlignableTriples: return "NoAlignableTriples";
    case ErrorCode::kMissingId: return "MissingId";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kNonNumericScore: return "NonNumericScore";
    case ErrorCode::kUnknownId: return "UnknownId";
    case ErrorCode::kKTooLarge: return "KTooLarge";
    case ErrorCode::kUnscoredPool: return "UnscoredPool";
    case ErrorCode::kZeroVariance: return "ZeroVariance";
    case ErrorCode::kEmptySelection: return "EmptySelection";
    case ErrorCode::kNoVowelsConfigured: return "NoVowelsConfigured";
    case ErrorCode::kTooFewSamples: return "TooFewSamples";
    case ErrorCode::kInsufficientSupport: return "InsufficientSupport";
    case ErrorCode::kMissingConfigKey: return "MissingConfigKey";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::size_t line)
    : std::runtime_error(message), code_(code), line_(line) {}

Error Error::WithFile(std::string file) const {
  Error copy = *this;
  copy.file_ = std::move(file);
  return copy;
}

std::string Error::Describe() const {
  std::string out;
  if (!file_.empty()) {
    out += file_;
    out += line_ > 0 ? ":" + std::to_string(line_) : "";
    out += ": ";
  } else if (line_ > 0) {
    out += "line " + std::to_string(line_) + ": ";
  }
  out += ErrorCodeName(code_);
  out += ": ";
  out += what();
  return out;
}

}  // namespace morphaug

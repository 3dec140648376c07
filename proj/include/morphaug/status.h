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

#ifndef MORPHAUG_STATUS_H_
#define MORPHAUG_STATUS_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace morphaug {

enum class ErrorCode {
  kInvalidArgument,
  kInvalidUtf8,
  kMalformedLine,
  kEmptyField,
  kEmptyDataset,
  kEmptyInput,
  kNoStem,
  kAlphabetTooSmall,
  kNoAlignableTriples,
  kMissingId,
  kDuplicateId,
  kNonNumericScore,
  kUnknownId,
  kKTooLarge,
  kUnscoredPool,
  kZeroVariance,
  kEmptySelection,
  kNoVowelsConfigured,
  kTooFewSamples,
  kInsufficientSupport,
  kMissingConfigKey,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library. `line` is 1-based and 0 when the error
// is not tied to an input line; `file` is filled in by callers that know it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::size_t line = 0);

  ErrorCode code() const { return code_; }
  std::size_t line() const { return line_; }
  const std::string& file() const { return file_; }

  // Copy of this error annotated with the file it came from.
  Error WithFile(std::string file) const;

  // "file:line: Name: message", omitting the parts that are unknown.
  std::string Describe() const;

 private:
  ErrorCode code_;
  std::size_t line_;
  std::string file_;
};

}  // namespace morphaug

#endif  // MORPHAUG_STATUS_H_

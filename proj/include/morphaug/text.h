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

#ifndef MORPHAUG_TEXT_H_
#define MORPHAUG_TEXT_H_

#include <string>
#include <string_view>

namespace morphaug {

// All character-level work happens on code points. Combining marks are
// treated as characters of their own.
std::u32string DecodeUtf8(std::string_view utf8);
std::string EncodeUtf8(std::u32string_view text);
std::string EncodeUtf8(char32_t c);

std::u32string NormalizeNfc(std::u32string_view text);

}  // namespace morphaug

#endif  // MORPHAUG_TEXT_H_

// Copyright 2026 The paraeval Authors
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

#ifndef PARAEVAL_TEXT_UTIL_H_
#define PARAEVAL_TEXT_UTIL_H_

#include <string>
#include <string_view>
#include <vector>

namespace paraeval {

/// Splits on ASCII whitespace, dropping empty pieces.
std::vector<std::string> SplitWhitespace(std::string_view text);

std::string_view Trim(std::string_view text);

/// ASCII-only lowercasing; bytes >= 0x80 pass through untouched.
std::string AsciiLower(std::string_view text);

std::string Join(const std::vector<std::string> &parts, std::string_view sep);

bool StartsWith(std::string_view text, std::string_view prefix);
bool EndsWith(std::string_view text, std::string_view suffix);

/// Decodes UTF-8 into code points. Invalid sequences decode to U+FFFD.
std::u32string DecodeUtf8(std::string_view text);

std::string EncodeUtf8(std::u32string_view text);
std::string EncodeUtf8(char32_t code_point);

}  // namespace paraeval

#endif  // PARAEVAL_TEXT_UTIL_H_

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

#ifndef PARAEVAL_LABEL_H_
#define PARAEVAL_LABEL_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace paraeval {

/// Word-level paraphasia class. C marks a non-paraphasic word.
enum class Label { kC = 0, kP = 1, kN = 2, kS = 3 };

inline constexpr std::size_t kNumLabels = 4;
inline constexpr std::array<Label, kNumLabels> kAllLabels = {
    Label::kC, Label::kP, Label::kN, Label::kS};
inline constexpr std::array<Label, 3> kParaphasiaLabels = {
    Label::kP, Label::kN, Label::kS};

inline constexpr std::size_t Index(Label label) {
  return static_cast<std::size_t>(label);
}

inline constexpr bool IsParaphasia(Label label) { return label != Label::kC; }

/// "c", "p", "n" or "s".
std::string_view LabelName(Label label);

/// "[c]", "[p]", "[n]" or "[s]".
std::string_view LabelToken(Label label);

/// Accepts the bare name ("p") or the bracketed token ("[p]"),
/// case-insensitively.
std::optional<Label> ParseLabel(std::string_view text);

}  // namespace paraeval

#endif  // PARAEVAL_LABEL_H_

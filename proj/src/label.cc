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

#include "paraeval/label.h"

#include "paraeval/text_util.h"

namespace paraeval {

std::string_view LabelName(Label label) {
  switch (label) {
    case Label::kC: return "c";
    case Label::kP: return "p";
    case Label::kN: return "n";
    case Label::kS: return "s";
  }
  return "c";
}

std::string_view LabelToken(Label label) {
  switch (label) {
    case Label::kC: return "[c]";
    case Label::kP: return "[p]";
    case Label::kN: return "[n]";
    case Label::kS: return "[s]";
  }
  return "[c]";
}

std::optional<Label> ParseLabel(std::string_view text) {
  if (text.size() == 3 && text.front() == '[' && text.back() == ']')
    text = text.substr(1, 1);
  if (text.size() != 1) return std::nullopt;
  switch (text[0]) {
    case 'c': case 'C': return Label::kC;
    case 'p': case 'P': return Label::kP;
    case 'n': case 'N': return Label::kN;
    case 's': case 'S': return Label::kS;
    default: return std::nullopt;
  }
}

}  // namespace paraeval

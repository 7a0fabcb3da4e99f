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

#ifndef PARAEVAL_CHAT_PARSER_H_
#define PARAEVAL_CHAT_PARSER_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "paraeval/ipa_converter.h"
#include "paraeval/label.h"

namespace paraeval {

struct Timestamps {
  long long start_ms = 0;
  long long end_ms = 0;
  bool operator==(const Timestamps &) const = default;
};

/// One main speaker tier of a CHAT file with continuation lines merged and
/// the media bullet removed.
struct RawChatUtterance {
  std::string speaker;  // tier code without '*', e.g. "PAR" or "INV"
  std::string raw_text;
  std::optional<Timestamps> timestamps;
  std::string source_file;
  std::size_t line_number = 0;  // 1-based line of the tier marker
};

enum class DiscardReason {
  kUnintelligible,
  kOverlappingSpeech,
  kNonParticipant,
  kEmptyAfterNormalization,
};

std::string_view DiscardReasonName(DiscardReason reason);

struct FilterDecision {
  bool keep = true;
  std::optional<DiscardReason> reason;
};

/// Normalized word/label sequence for one utterance. For kept utterances
/// words and labels have equal length and words are lowercase with
/// punctuation removed.
struct OracleUtterance {
  std::string utt_id;
  std::vector<std::string> words;
  std::vector<Label> labels;
  bool is_discarded = false;
  std::optional<DiscardReason> discard_reason;
  std::string source_file;
  std::size_t line_number = 0;
};

struct ChatOptions {
  /// Speaker codes treated as the participant; everything else is dropped.
  std::vector<std::string> participant_codes = {"PAR"};
};

/// Splits CHAT text into main-tier utterances. Headers (@...) and dependent
/// tiers (%mor, %gra, %com, ...) are skipped. Throws ParseError with the
/// line number for malformed tier markers, orphan continuation lines and
/// bad timestamps.
std::vector<RawChatUtterance> ParseChatFile(std::string_view content,
                                            std::string_view source_file = "");

/// Keep/discard decision: non-participant tiers, utterances with an xxx
/// marker, and utterances carrying overlap markers ([<], [>], +<) are
/// discarded, in that order of precedence.
FilterDecision FilterUtterance(const RawChatUtterance &utterance,
                               const ChatOptions &options = {});

/// Converts the tier text into oracle words and labels.
///
///  - "word@u" tokens are IPA and go through `converter`
///  - "[: target]" and other bracketed annotations are dropped
///  - "[* p]", "[* n]", "[* s]" (and subcodes such as "[* p:w]") label the
///    preceding word, or every word of a preceding <...> group
///  - other "[* x]" codes are dropped and the word stays C
///  - punctuation is removed and ASCII letters are lowercased
///
/// Throws ParseError for an error code with no preceding word, and
/// propagates ConversionError for unmappable IPA. An utterance that ends up
/// with no words is marked discarded (kEmptyAfterNormalization).
OracleUtterance ToOracle(const RawChatUtterance &utterance,
                         const IpaConverter &converter = IpaConverter::Default());

/// FilterUtterance followed by ToOracle for kept utterances.
OracleUtterance ProcessUtterance(const RawChatUtterance &utterance,
                                 const IpaConverter &converter,
                                 const ChatOptions &options = {});

/// "<file stem>_<line number>".
std::string DefaultUtteranceId(std::string_view source_file,
                               std::size_t line_number);

/// Strips the declared punctuation set and lowercases. Apostrophes and
/// inner hyphens survive.
std::string NormalizeWord(std::string_view word);

}  // namespace paraeval

#endif  // PARAEVAL_CHAT_PARSER_H_

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

#include "paraeval/chat_parser.h"

#include <algorithm>
#include <filesystem>
#include <regex>

#include "paraeval/errors.h"
#include "paraeval/text_util.h"

namespace paraeval {

namespace {

// CHAT-specific symbols removed from words along with ASCII punctuation.
constexpr std::u32string_view kChatPunctuation =
    U"‡„“”‘«»‹›…–—·↑↓≠∬⌈⌉⌊⌋↗↘→↫≋≈∆∇°▔▁☺♋∙⁎";

bool IsAsciiPunct(char32_t cp) {
  return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
         (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E);
}

enum class TokenKind { kWord, kBracket, kGroupOpen, kGroupClose };

struct Token {
  TokenKind kind;
  std::string text;
};

std::vector<Token> Tokenize(std::string_view text, std::size_t line) {
  std::vector<Token> tokens;
  std::string word;
  auto flush = [&]() {
    if (!word.empty()) tokens.push_back({TokenKind::kWord, std::move(word)});
    word.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      flush();
    } else if (c == '[') {
      flush();
      std::size_t close = text.find(']', i);
      if (close == std::string_view::npos)
        throw ParseError("unterminated '[' annotation", line);
      tokens.push_back(
          {TokenKind::kBracket, std::string(Trim(text.substr(i + 1, close - i - 1)))});
      i = close;
    } else if ((c == '<' || c == '>') && !(!word.empty() && word[0] == '+')) {
      flush();
      tokens.push_back({c == '<' ? TokenKind::kGroupOpen : TokenKind::kGroupClose, ""});
    } else {
      word.push_back(c);
    }
  }
  flush();
  return tokens;
}

// Paraphasia class of an error code body such as "p", "p:w" or "s:r".
std::optional<Label> ErrorCodeLabel(std::string_view code) {
  code = Trim(code);
  std::size_t colon = code.find(':');
  std::string_view cls = Trim(code.substr(0, colon));
  if (cls == "p") return Label::kP;
  if (cls == "n") return Label::kN;
  if (cls == "s") return Label::kS;
  return std::nullopt;
}

enum class WordKind { kSkip, kEmptyItem, kWord };

struct CleanedWord {
  WordKind kind;
  std::string text;
};

bool IsPause(std::string_view token) {
  return token == "(.)" || token == "(..)" || token == "(...)";
}

CleanedWord CleanChatWord(std::string_view token, const IpaConverter &converter) {
  if (token.empty() || token.front() == '+') return {WordKind::kSkip, ""};
  if (IsPause(token)) return {WordKind::kSkip, ""};
  if (StartsWith(token, "&=")) return {WordKind::kEmptyItem, ""};
  if (token.front() == '0') return {WordKind::kEmptyItem, ""};

  std::string work(token);
  if (work.size() >= 2 && work[0] == '&' &&
      (work[1] == '-' || work[1] == '+' || work[1] == '~')) {
    work.erase(0, 2);
  }

  // Trailing terminators glued to the word ("bed." / "fɛkts@u,").
  while (!work.empty() && (work.back() == '.' || work.back() == ',' ||
                           work.back() == '?' || work.back() == '!')) {
    work.pop_back();
  }

  std::size_t at = work.find('@');
  if (at != std::string::npos) {
    std::string_view suffix = std::string_view(work).substr(at + 1);
    std::string base = work.substr(0, at);
    if (suffix == "u") {
      return {WordKind::kWord, converter.IpaToPseudoword(base)};
    }
    work = base;
  }

  std::string lower = AsciiLower(work);
  if (lower == "xxx" || lower == "yyy" || lower == "www")
    return {WordKind::kEmptyItem, ""};

  std::string normalized = NormalizeWord(work);
  if (normalized.empty()) {
    bool had_letters = std::any_of(work.begin(), work.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) ||
             static_cast<unsigned char>(c) >= 0x80;
    });
    return {had_letters ? WordKind::kEmptyItem : WordKind::kSkip, ""};
  }
  return {WordKind::kWord, normalized};
}

const std::regex &BulletPattern() {
  static const std::regex re("\x15([0-9]+)_([0-9]+)\x15");
  return re;
}

const std::regex &PlainTimestampPattern() {
  static const std::regex re("(^|\\s)([0-9]+)_([0-9]+)\\s*$");
  return re;
}

void ExtractTimestamps(RawChatUtterance &utt) {
  std::smatch m;
  long long start = 0, end = 0;
  bool found = false;
  if (std::regex_search(utt.raw_text, m, BulletPattern())) {
    start = std::stoll(m[1].str());
    end = std::stoll(m[2].str());
    utt.raw_text = m.prefix().str() + " " + m.suffix().str();
    found = true;
  } else if (std::regex_search(utt.raw_text, m, PlainTimestampPattern())) {
    start = std::stoll(m[2].str());
    end = std::stoll(m[3].str());
    utt.raw_text = m.prefix().str();
    found = true;
  }
  if (found) {
    if (start > end)
      throw ParseError("timestamp start exceeds end", utt.line_number);
    utt.timestamps = Timestamps{start, end};
  }
  utt.raw_text = std::string(Trim(utt.raw_text));
}

bool IsValidSpeakerCode(std::string_view code) {
  if (code.empty()) return false;
  return std::none_of(code.begin(), code.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '*' || c == '%' || c == '@';
  });
}

}  // namespace

std::string_view DiscardReasonName(DiscardReason reason) {
  switch (reason) {
    case DiscardReason::kUnintelligible: return "unintelligible";
    case DiscardReason::kOverlappingSpeech: return "overlapping_speech";
    case DiscardReason::kNonParticipant: return "non_participant";
    case DiscardReason::kEmptyAfterNormalization:
      return "empty_after_normalization";
  }
  return "unknown";
}

std::string NormalizeWord(std::string_view word) {
  std::u32string out;
  for (char32_t cp : DecodeUtf8(word)) {
    if (cp == U'’') cp = U'\'';
    if (cp < 0x20 || cp == 0x7F) continue;
    if (cp == U'\'' || cp == U'-') {
      out.push_back(cp);
      continue;
    }
    if (cp < 0x80 && IsAsciiPunct(cp)) continue;
    if (kChatPunctuation.find(cp) != std::u32string_view::npos) continue;
    if (cp >= U'A' && cp <= U'Z') cp = cp - U'A' + U'a';
    out.push_back(cp);
  }
  std::size_t first = out.find_first_not_of(U'-');
  if (first == std::u32string::npos) return "";
  std::size_t last = out.find_last_not_of(U'-');
  out = out.substr(first, last - first + 1);
  // A lone apostrophe is not a word.
  if (out.find_first_not_of(U"'-") == std::u32string::npos) return "";
  return EncodeUtf8(out);
}

std::vector<RawChatUtterance> ParseChatFile(std::string_view content,
                                            std::string_view source_file) {
  enum class Current { kNone, kMain, kOther };
  std::vector<RawChatUtterance> out;
  Current current = Current::kNone;
  std::size_t line_no = 0;
  std::size_t pos = 0;

  auto finish = [&]() {
    if (current == Current::kMain) {
      ExtractTimestamps(out.back());
      if (out.back().raw_text.empty())
        throw ParseError("empty utterance tier", out.back().line_number);
    }
  };

  while (pos < content.size()) {
    std::size_t end = content.find('\n', pos);
    if (end == std::string_view::npos) end = content.size();
    std::string_view line = content.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line_no == 1 && StartsWith(line, "\xEF\xBB\xBF")) line.remove_prefix(3);
    if (Trim(line).empty()) continue;

    char first = line.front();
    if (first == '\t' || first == ' ') {
      if (current == Current::kNone)
        throw ParseError("continuation line without a tier", line_no);
      if (current == Current::kMain) {
        out.back().raw_text += ' ';
        out.back().raw_text += Trim(line);
      }
      continue;
    }

    finish();
    if (first == '@' || first == '%') {
      current = Current::kOther;
      continue;
    }
    if (first != '*') throw ParseError("malformed tier marker", line_no);

    std::size_t colon = line.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("malformed tier marker: missing ':'", line_no);
    std::string_view code = line.substr(1, colon - 1);
    if (!IsValidSpeakerCode(code))
      throw ParseError("malformed tier marker: bad speaker code", line_no);

    RawChatUtterance utt;
    utt.speaker = std::string(code);
    utt.raw_text = std::string(Trim(line.substr(colon + 1)));
    utt.source_file = std::string(source_file);
    utt.line_number = line_no;
    out.push_back(std::move(utt));
    current = Current::kMain;
  }
  finish();
  return out;
}

FilterDecision FilterUtterance(const RawChatUtterance &utterance,
                               const ChatOptions &options) {
  const auto &codes = options.participant_codes;
  if (std::find(codes.begin(), codes.end(), utterance.speaker) == codes.end())
    return {false, DiscardReason::kNonParticipant};

  static const std::regex unintelligible(
      "(^|[\\s<])xxx(?=$|[\\s>.,?!@\\[])", std::regex::icase);
  if (std::regex_search(utterance.raw_text, unintelligible))
    return {false, DiscardReason::kUnintelligible};

  static const std::regex overlap("\\[[<>][0-9]*\\]|(^|\\s)\\+<");
  if (std::regex_search(utterance.raw_text, overlap))
    return {false, DiscardReason::kOverlappingSpeech};

  return {true, std::nullopt};
}

OracleUtterance ToOracle(const RawChatUtterance &utterance,
                         const IpaConverter &converter) {
  const std::size_t line = utterance.line_number;
  OracleUtterance out;
  out.utt_id = DefaultUtteranceId(utterance.source_file, line);
  out.source_file = utterance.source_file;
  out.line_number = line;

  struct Item {
    std::size_t begin = 0;
    std::size_t end = 0;
    bool labeled = false;
  };
  std::optional<Item> last_item;
  std::vector<std::size_t> group_starts;

  for (const Token &token : Tokenize(utterance.raw_text, line)) {
    switch (token.kind) {
      case TokenKind::kGroupOpen:
        group_starts.push_back(out.words.size());
        break;
      case TokenKind::kGroupClose: {
        if (group_starts.empty()) throw ParseError("unmatched '>'", line);
        last_item = Item{group_starts.back(), out.words.size(), false};
        group_starts.pop_back();
        break;
      }
      case TokenKind::kBracket: {
        if (token.text.empty() || token.text.front() != '*') break;
        if (!last_item)
          throw ParseError("error code [" + token.text + "] has no preceding word",
                           line);
        std::optional<Label> label = ErrorCodeLabel(token.text.substr(1));
        if (!label || last_item->labeled) break;
        for (std::size_t w = last_item->begin; w < last_item->end; ++w)
          out.labels[w] = *label;
        last_item->labeled = true;
        break;
      }
      case TokenKind::kWord: {
        CleanedWord cleaned;
        try {
          cleaned = CleanChatWord(token.text, converter);
        } catch (const ConversionError &e) {
          throw ConversionError(std::string(e.what()) + " in '" + token.text +
                                "' (" + utterance.source_file + ":" +
                                std::to_string(line) + ")");
        }
        if (cleaned.kind == WordKind::kSkip) break;
        std::size_t index = out.words.size();
        if (cleaned.kind == WordKind::kWord) {
          out.words.push_back(std::move(cleaned.text));
          out.labels.push_back(Label::kC);
          last_item = Item{index, index + 1, false};
        } else {
          last_item = Item{index, index, false};
        }
        break;
      }
    }
  }
  if (!group_starts.empty()) throw ParseError("unclosed '<' group", line);

  if (out.words.empty()) {
    out.is_discarded = true;
    out.discard_reason = DiscardReason::kEmptyAfterNormalization;
  }
  return out;
}

OracleUtterance ProcessUtterance(const RawChatUtterance &utterance,
                                 const IpaConverter &converter,
                                 const ChatOptions &options) {
  FilterDecision decision = FilterUtterance(utterance, options);
  if (!decision.keep) {
    OracleUtterance out;
    out.utt_id = DefaultUtteranceId(utterance.source_file, utterance.line_number);
    out.source_file = utterance.source_file;
    out.line_number = utterance.line_number;
    out.is_discarded = true;
    out.discard_reason = decision.reason;
    return out;
  }
  return ToOracle(utterance, converter);
}

std::string DefaultUtteranceId(std::string_view source_file,
                               std::size_t line_number) {
  std::string stem = std::filesystem::path(source_file).stem().string();
  if (stem.empty()) stem = "utt";
  return stem + "_" + std::to_string(line_number);
}

}  // namespace paraeval

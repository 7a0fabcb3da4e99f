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

#include "paraeval/ipa_converter.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "paraeval/errors.h"
#include "paraeval/text_util.h"

namespace paraeval {

// Generated from data/*.tsv at configure time.
extern const char *const kDefaultIpaPhoneTable;
extern const char *const kDefaultPhoneGraphemeTable;

namespace {

struct TableRow {
  std::size_t line;
  std::string key;
  std::string value;
};

std::vector<TableRow> ReadTable(std::string_view text) {
  std::vector<TableRow> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::string_view trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    std::size_t tab = trimmed.find('\t');
    if (tab == std::string_view::npos)
      throw ParseError("expected two tab-separated columns", line_no);
    std::string_view key = Trim(trimmed.substr(0, tab));
    std::string_view value = Trim(trimmed.substr(tab + 1));
    if (key.empty() || value.empty())
      throw ParseError("empty table column", line_no);
    rows.push_back({line_no, std::string(key), std::string(value)});
    if (end == text.size()) break;
  }
  return rows;
}

std::string ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open table file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool IsStripped(char32_t cp) {
  switch (cp) {
    case U'ˈ':  // primary stress
    case U'ˌ':  // secondary stress
    case U'ː':  // long
    case U'ˑ':  // half long
    case U'ʰ':  // aspiration
    case U'ʔ':  // glottal stop
    case U'.':
    case U'\'':
    case U'|':
    case U'‖':
      return true;
    default:
      return cp >= 0x0300 && cp <= 0x036F;
  }
}

}  // namespace

IpaConverter IpaConverter::FromTableText(std::string_view ipa_table,
                                         std::string_view phone_table) {
  IpaConverter conv;
  for (const TableRow &row : ReadTable(phone_table)) {
    for (char c : row.value) {
      if (c < 'a' || c > 'z')
        throw ParseError("grapheme for " + row.key + " must be lowercase a-z",
                         row.line);
    }
    if (!conv.phone_to_grapheme_.emplace(row.key, row.value).second)
      throw ParseError("duplicate phone " + row.key, row.line);
  }
  for (const TableRow &row : ReadTable(ipa_table)) {
    std::u32string key = DecodeUtf8(row.key);
    std::vector<std::string> phones = SplitWhitespace(row.value);
    for (const std::string &phone : phones) {
      if (!conv.InInventory(phone))
        throw ParseError("phone " + phone + " is not in the inventory",
                         row.line);
    }
    if (key.empty() || StripMarks(key) != key)
      throw ParseError("IPA key contains stripped marks", row.line);
    if (!conv.ipa_to_phones_.emplace(key, std::move(phones)).second)
      throw ParseError("duplicate IPA symbol " + row.key, row.line);
    conv.max_key_length_ = std::max(conv.max_key_length_, key.size());
  }
  return conv;
}

IpaConverter IpaConverter::FromFiles(const std::filesystem::path &ipa_table,
                                     const std::filesystem::path &phone_table) {
  return FromTableText(ReadFile(ipa_table), ReadFile(phone_table));
}

const IpaConverter &IpaConverter::Default() {
  static const IpaConverter conv =
      FromTableText(kDefaultIpaPhoneTable, kDefaultPhoneGraphemeTable);
  return conv;
}

std::u32string IpaConverter::StripMarks(std::u32string_view ipa) {
  std::u32string out;
  out.reserve(ipa.size());
  for (char32_t cp : ipa) {
    if (!IsStripped(cp)) out.push_back(cp);
  }
  return out;
}

bool IpaConverter::InInventory(std::string_view phone) const {
  return phone_to_grapheme_.find(phone) != phone_to_grapheme_.end();
}

std::vector<IpaSegment> IpaConverter::Segment(std::string_view ipa) const {
  const std::u32string text = StripMarks(DecodeUtf8(ipa));
  if (text.empty()) throw ConversionError("empty IPA transcription");
  std::vector<IpaSegment> segments;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t longest = std::min(max_key_length_, text.size() - i);
    bool matched = false;
    for (std::size_t len = longest; len >= 1; --len) {
      auto it = ipa_to_phones_.find(text.substr(i, len));
      if (it == ipa_to_phones_.end()) continue;
      segments.push_back({EncodeUtf8(it->first), it->second, i});
      i += len;
      matched = true;
      break;
    }
    if (!matched) throw ConversionError(EncodeUtf8(text[i]), i);
  }
  return segments;
}

PhoneSequence IpaConverter::IpaToPhones(std::string_view ipa) const {
  PhoneSequence seq;
  for (IpaSegment &segment : Segment(ipa)) {
    for (std::string &phone : segment.phones)
      seq.phones.push_back(std::move(phone));
  }
  return seq;
}

std::string IpaConverter::PhonesToGraphemes(const PhoneSequence &seq) const {
  std::string out;
  for (const std::string &phone : seq.phones) {
    auto it = phone_to_grapheme_.find(phone);
    if (it == phone_to_grapheme_.end())
      throw ConversionError("phone " + phone + " is not in the inventory");
    out += it->second;
  }
  return out;
}

std::string IpaConverter::IpaToPseudoword(std::string_view ipa) const {
  return PhonesToGraphemes(IpaToPhones(ipa));
}

PhoneSequence IpaConverter::MakePhoneSequence(
    std::vector<std::string> phones) const {
  if (phones.empty()) throw ConversionError("empty phone sequence");
  for (const std::string &phone : phones) {
    if (!InInventory(phone))
      throw ConversionError("phone " + phone + " is not in the inventory");
  }
  return PhoneSequence{std::move(phones)};
}

}  // namespace paraeval

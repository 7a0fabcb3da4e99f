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

#include "paraeval/canonical.h"

#include <array>

#include "paraeval/errors.h"
#include "paraeval/text_util.h"

namespace paraeval {

namespace {

bool IsBracketToken(std::string_view token) {
  return token.size() >= 2 && token.front() == '[' && token.back() == ']';
}

Label RequireLabel(std::string_view token, std::size_t index) {
  std::optional<Label> label = ParseLabel(token);
  if (!label) throw FormatError("unknown label token " + std::string(token), index);
  return *label;
}

std::string_view StripRowTag(std::string_view line, std::string_view tag) {
  line = Trim(line);
  if (line.size() >= tag.size() && AsciiLower(line.substr(0, tag.size())) == tag)
    return Trim(line.substr(tag.size()));
  return line;
}

}  // namespace

std::vector<std::string> CanonicalSequence::Words() const {
  std::vector<std::string> out;
  out.reserve(pairs.size());
  for (const LabeledWord &p : pairs) out.push_back(p.word);
  return out;
}

std::vector<Label> CanonicalSequence::Labels() const {
  std::vector<Label> out;
  out.reserve(pairs.size());
  for (const LabeledWord &p : pairs) out.push_back(p.label);
  return out;
}

OutputFormat ParseOutputFormat(std::string_view tag) {
  std::string t = AsciiLower(tag);
  for (char &c : t) {
    if (c == '_') c = '-';
  }
  if (t == "labeled") return OutputFormat::kLabeled;
  if (t == "single-seq") return OutputFormat::kSingleSeq;
  if (t == "multi-seq") return OutputFormat::kMultiSeq;
  throw Error("unknown output format '" + std::string(tag) + "'");
}

std::string_view OutputFormatName(OutputFormat format) {
  switch (format) {
    case OutputFormat::kLabeled: return "labeled";
    case OutputFormat::kSingleSeq: return "single-seq";
    case OutputFormat::kMultiSeq: return "multi-seq";
  }
  return "labeled";
}

CanonicalSequence ParseLabeledText(std::string_view line) {
  CanonicalSequence seq;
  std::vector<std::string> tokens = SplitWhitespace(line);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const bool expect_word = (i % 2 == 0);
    const bool is_label = IsBracketToken(tokens[i]);
    if (expect_word && is_label) {
      if (i == 0) throw FormatError("sequence starts with a label", i);
      throw FormatError("two consecutive labels", i);
    }
    if (!expect_word && !is_label)
      throw FormatError("word '" + tokens[i - 1] + "' has no label", i - 1);
    if (expect_word) {
      seq.pairs.push_back({tokens[i], Label::kC});
    } else {
      seq.pairs.back().label = RequireLabel(tokens[i], i);
    }
  }
  if (tokens.size() % 2 == 1)
    throw FormatError("word '" + tokens.back() + "' has no label", tokens.size() - 1);
  return seq;
}

CanonicalSequence ParseSingleSeq(std::string_view line) {
  CanonicalSequence seq;
  std::vector<std::string> tokens = SplitWhitespace(line);
  bool previous_was_label = false;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!IsBracketToken(tokens[i])) {
      seq.pairs.push_back({tokens[i], Label::kC});
      previous_was_label = false;
      continue;
    }
    if (seq.pairs.empty()) throw FormatError("sequence starts with a label", i);
    if (previous_was_label) throw FormatError("label follows a label", i);
    seq.pairs.back().label = RequireLabel(tokens[i], i);
    previous_was_label = true;
  }
  return seq;
}

MultiSeqOutput ParseMultiSeq(std::string_view asr_line, std::string_view para_line) {
  MultiSeqOutput out;
  out.asr_tokens = SplitWhitespace(StripRowTag(asr_line, "asr:"));
  std::vector<std::string> para = SplitWhitespace(StripRowTag(para_line, "para:"));
  for (std::size_t i = 0; i < para.size(); ++i)
    out.para_labels.push_back(RequireLabel(para[i], i));
  if (out.para_labels.size() != out.asr_tokens.size()) {
    throw FormatError("ASR row has " + std::to_string(out.asr_tokens.size()) +
                          " tokens but Para row has " +
                          std::to_string(out.para_labels.size()),
                      std::min(out.asr_tokens.size(), out.para_labels.size()));
  }
  return out;
}

std::vector<Label> ExpandWordLabelsToSubwords(
    std::span<const LabeledWord> words, std::span<const std::size_t> subword_counts) {
  if (words.size() != subword_counts.size())
    throw Error("subword counts do not match the number of words");
  std::vector<Label> out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (subword_counts[i] == 0)
      throw Error("word '" + words[i].word + "' has zero subwords");
    out.insert(out.end(), subword_counts[i], words[i].label);
  }
  return out;
}

Label MajorityLabel(std::span<const Label> subword_labels) {
  std::array<std::size_t, kNumLabels> counts{};
  for (Label l : subword_labels) ++counts[Index(l)];
  // Scan in tie-break order; a later class wins only with a strictly
  // larger count.
  constexpr std::array<Label, kNumLabels> kPrecedence = {
      Label::kP, Label::kN, Label::kS, Label::kC};
  Label best = kPrecedence[0];
  for (Label l : kPrecedence) {
    if (counts[Index(l)] > counts[Index(best)]) best = l;
  }
  return subword_labels.empty() ? Label::kC : best;
}

CanonicalSequence CollapseSubwords(const MultiSeqOutput &output) {
  if (output.asr_tokens.size() != output.para_labels.size())
    throw Error("ASR tokens and paraphasia labels differ in length");

  bool marked = false;
  for (const std::string &tok : output.asr_tokens) {
    if (StartsWith(tok, kWordBoundaryMark)) {
      marked = true;
      break;
    }
  }

  CanonicalSequence seq;
  std::string word;
  std::vector<Label> labels;
  // A bare boundary token ("▁") has no text; its label joins the next word.
  auto flush = [&]() {
    if (word.empty()) return;
    seq.pairs.push_back({word, MajorityLabel(labels)});
    word.clear();
    labels.clear();
  };
  for (std::size_t i = 0; i < output.asr_tokens.size(); ++i) {
    std::string_view tok = output.asr_tokens[i];
    bool starts_word = !marked || i == 0;
    if (StartsWith(tok, kWordBoundaryMark)) {
      starts_word = true;
      tok.remove_prefix(kWordBoundaryMark.size());
    }
    if (starts_word) flush();
    word += tok;
    labels.push_back(output.para_labels[i]);
  }
  flush();
  return seq;
}

CanonicalSequence Standardize(std::string_view text, OutputFormat format) {
  switch (format) {
    case OutputFormat::kLabeled:
      return ParseLabeledText(text);
    case OutputFormat::kSingleSeq:
      return ParseSingleSeq(text);
    case OutputFormat::kMultiSeq: {
      std::string_view body = Trim(text);
      std::size_t split = body.find('\n');
      if (split == std::string_view::npos) split = body.find('\t');
      if (split == std::string_view::npos)
        throw FormatError("multi-seq output needs an ASR row and a Para row", 0);
      return CollapseSubwords(ParseMultiSeq(body.substr(0, split), body.substr(split + 1)));
    }
  }
  throw Error("unhandled output format");
}

CanonicalSequence Standardize(std::string_view text, std::string_view format_tag) {
  return Standardize(text, ParseOutputFormat(format_tag));
}

std::string ToLabeledText(const CanonicalSequence &seq) {
  std::string out;
  for (const LabeledWord &p : seq.pairs) {
    if (!out.empty()) out += ' ';
    out += p.word;
    out += ' ';
    out += LabelToken(p.label);
  }
  return out;
}

std::string ToSingleSeqText(const CanonicalSequence &seq) {
  std::string out;
  for (const LabeledWord &p : seq.pairs) {
    if (!out.empty()) out += ' ';
    out += p.word;
    if (IsParaphasia(p.label)) {
      out += ' ';
      out += LabelToken(p.label);
    }
  }
  return out;
}

}  // namespace paraeval

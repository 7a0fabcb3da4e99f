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

#ifndef PARAEVAL_CANONICAL_H_
#define PARAEVAL_CANONICAL_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "paraeval/label.h"

namespace paraeval {

struct LabeledWord {
  std::string word;
  Label label = Label::kC;
  bool operator==(const LabeledWord &) const = default;
};

/// The standardized form every model output is reduced to before scoring:
/// one (word, label) pair per predicted word.
struct CanonicalSequence {
  std::string utt_id;
  std::vector<LabeledWord> pairs;

  std::vector<std::string> Words() const;
  std::vector<Label> Labels() const;
  bool operator==(const CanonicalSequence &) const = default;
};

/// Word-boundary prefix for subword tokens ("▁fek", "ts").
inline constexpr std::string_view kWordBoundaryMark = "▁";

/// Parallel outputs of a model with separate transcription and
/// classification heads. A token starting with kWordBoundaryMark opens a new
/// word; if no token carries the mark, every token is a whole word.
struct MultiSeqOutput {
  std::vector<std::string> asr_tokens;
  std::vector<Label> para_labels;
};

enum class OutputFormat { kLabeled, kSingleSeq, kMultiSeq };

/// "labeled", "single-seq", "multi-seq" (underscores accepted). Throws Error
/// for unknown tags.
OutputFormat ParseOutputFormat(std::string_view tag);
std::string_view OutputFormatName(OutputFormat format);

/// Strictly alternating "word [x] word [x] ...".
CanonicalSequence ParseLabeledText(std::string_view line);

/// Words with an optional [p]/[n]/[s] after paraphasic words; unlabeled
/// words are C. An explicit [c] is accepted as well.
CanonicalSequence ParseSingleSeq(std::string_view line);

/// Parses the two rows of a multi-seq output. A leading "ASR:" / "Para:"
/// tag on either row is optional.
MultiSeqOutput ParseMultiSeq(std::string_view asr_line, std::string_view para_line);

/// Repeats each word's label across its subwords.
std::vector<Label> ExpandWordLabelsToSubwords(
    std::span<const LabeledWord> words, std::span<const std::size_t> subword_counts);

/// Majority class of one word's subword labels. Ties go to a paraphasia
/// class over C, and among paraphasia classes P > N > S.
Label MajorityLabel(std::span<const Label> subword_labels);

/// Joins subwords into words and assigns each word its majority label.
CanonicalSequence CollapseSubwords(const MultiSeqOutput &output);

/// Dispatches one model output to the parser for `format`. Multi-seq text
/// holds the ASR row and the Para row separated by a newline or a tab.
CanonicalSequence Standardize(std::string_view text, OutputFormat format);
CanonicalSequence Standardize(std::string_view text, std::string_view format_tag);

/// "aphasia [c] fekts [p] ..." (every word followed by its label).
std::string ToLabeledText(const CanonicalSequence &seq);

/// "aphasia fekts [p] ..." (labels only after paraphasic words).
std::string ToSingleSeqText(const CanonicalSequence &seq);

}  // namespace paraeval

#endif  // PARAEVAL_CANONICAL_H_

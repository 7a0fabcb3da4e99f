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

#ifndef PARAEVAL_METRICS_H_
#define PARAEVAL_METRICS_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "paraeval/alignment.h"
#include "paraeval/canonical.h"
#include "paraeval/label.h"

namespace paraeval {

/// Edit count and reference length of one utterance (or a pooled corpus).
struct ErrorCounts {
  std::size_t errors = 0;
  std::size_t ref_length = 0;

  ErrorCounts &operator+=(const ErrorCounts &o) {
    errors += o.errors;
    ref_length += o.ref_length;
    return *this;
  }
  bool operator==(const ErrorCounts &) const = default;
};

/// Pooled error rate in percent. Throws MetricError when the pooled
/// reference length is zero.
double ErrorRate(std::span<const ErrorCounts> counts);

ErrorCounts WordErrors(const CanonicalSequence &ref, const CanonicalSequence &hyp);
ErrorCounts AugmentedWordErrors(const CanonicalSequence &ref, const CanonicalSequence &hyp);

/// "w0 [l0] w1 [l1] ..." as separate tokens.
std::vector<std::string> Interleave(const CanonicalSequence &seq);

/// Corpus WER in percent over paired word sequences: total edits over total
/// reference words.
double Wer(std::span<const std::vector<std::string>> refs,
           std::span<const std::vector<std::string>> hyps);
double Wer(std::span<const CanonicalSequence> refs, std::span<const CanonicalSequence> hyps);

/// WER over the interleaved word+label token sequences, in percent.
double Awer(std::span<const CanonicalSequence> refs, std::span<const CanonicalSequence> hyps);

/// Temporal distances normalized by the number of alignment columns.
/// `all` is p + n + s.
struct TdBreakdown {
  double binary = 0.0;
  double p = 0.0;
  double n = 0.0;
  double s = 0.0;
  double all = 0.0;

  double ForClass(Label label) const;
  bool operator==(const TdBreakdown &) const = default;
};

/// Reference and hypothesis labels indexed by alignment column. The side
/// missing from an insert or delete column reads C.
struct LabelColumns {
  std::vector<Label> ref;
  std::vector<Label> hyp;
};

LabelColumns AlignLabelColumns(const CanonicalSequence &ref, const CanonicalSequence &hyp);

/// Raw (unnormalized) symmetric nearest-occurrence distance between two
/// column masks of equal length L:
///   sum over truth columns of the distance to the nearest predicted column
///   + sum over predicted columns of the distance to the nearest truth column,
/// where a column with nothing on the other side costs L.
std::size_t RawTemporalDistance(const std::vector<bool> &truth, const std::vector<bool> &pred);

TdBreakdown TemporalDistance(const CanonicalSequence &ref, const CanonicalSequence &hyp);

/// Componentwise mean. `all` is recomputed as p + n + s of the means, so the
/// additivity identity holds exactly for corpus averages too.
TdBreakdown MeanTd(std::span<const TdBreakdown> values);

struct F1Counts {
  std::size_t true_positives = 0;
  std::size_t false_positives = 0;
  std::size_t false_negatives = 0;

  double Precision() const;
  double Recall() const;
  /// 0 when precision + recall is 0.
  double F1() const;
};

/// Utterance-level detection counts for one paraphasia class: an utterance
/// is positive when any of its words carries `label`.
F1Counts UtteranceDetectionCounts(std::span<const CanonicalSequence> refs,
                                  std::span<const CanonicalSequence> hyps, Label label);
double UtteranceF1(std::span<const CanonicalSequence> refs,
                   std::span<const CanonicalSequence> hyps, Label label);

struct UtteranceScore {
  std::string utt_id;
  ErrorCounts word_errors;
  ErrorCounts augmented_errors;
  TdBreakdown td;
};

struct CorpusScore {
  double wer = 0.0;
  double awer = 0.0;
  TdBreakdown td;
  double f1_p = 0.0;
  double f1_n = 0.0;
  double f1_s = 0.0;
  F1Counts f1_counts_p, f1_counts_n, f1_counts_s;
  std::size_t num_utterances = 0;
  std::size_t num_ref_words = 0;
  std::vector<UtteranceScore> utterances;
};

/// Every metric over a paired corpus (refs[i] pairs with hyps[i]).
CorpusScore ScoreCorpus(std::span<const CanonicalSequence> refs,
                        std::span<const CanonicalSequence> hyps);

}  // namespace paraeval

#endif  // PARAEVAL_METRICS_H_

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

#include "paraeval/metrics.h"

#include <limits>

#include "paraeval/errors.h"

namespace paraeval {

namespace {

void CheckPaired(std::size_t refs, std::size_t hyps) {
  if (refs != hyps)
    throw MetricError("reference and hypothesis corpora differ in size (" +
                      std::to_string(refs) + " vs " + std::to_string(hyps) + ")");
}

ErrorCounts CountErrors(std::span<const std::string> ref, std::span<const std::string> hyp) {
  return {static_cast<std::size_t>(EditDistance(ref, hyp)), ref.size()};
}

// Distance from every column to the nearest set column of `mask`, or
// `none` if the mask is empty.
std::vector<std::size_t> NearestDistances(const std::vector<bool> &mask, std::size_t none) {
  const std::size_t len = mask.size();
  constexpr std::size_t kFar = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(len, kFar);
  std::size_t last = kFar;
  for (std::size_t i = 0; i < len; ++i) {
    if (mask[i]) last = i;
    if (last != kFar) dist[i] = i - last;
  }
  last = kFar;
  for (std::size_t i = len; i-- > 0;) {
    if (mask[i]) last = i;
    if (last != kFar) dist[i] = std::min(dist[i], last - i);
  }
  for (std::size_t &d : dist) {
    if (d == kFar) d = none;
  }
  return dist;
}

}  // namespace

double ErrorRate(std::span<const ErrorCounts> counts) {
  ErrorCounts total;
  for (const ErrorCounts &c : counts) total += c;
  if (total.ref_length == 0) throw MetricError("reference corpus has no words");
  return 100.0 * static_cast<double>(total.errors) / static_cast<double>(total.ref_length);
}

std::vector<std::string> Interleave(const CanonicalSequence &seq) {
  std::vector<std::string> out;
  out.reserve(2 * seq.pairs.size());
  for (const LabeledWord &p : seq.pairs) {
    out.push_back(p.word);
    out.emplace_back(LabelToken(p.label));
  }
  return out;
}

ErrorCounts WordErrors(const CanonicalSequence &ref, const CanonicalSequence &hyp) {
  return CountErrors(ref.Words(), hyp.Words());
}

ErrorCounts AugmentedWordErrors(const CanonicalSequence &ref, const CanonicalSequence &hyp) {
  return CountErrors(Interleave(ref), Interleave(hyp));
}

double Wer(std::span<const std::vector<std::string>> refs,
           std::span<const std::vector<std::string>> hyps) {
  CheckPaired(refs.size(), hyps.size());
  std::vector<ErrorCounts> counts;
  counts.reserve(refs.size());
  for (std::size_t i = 0; i < refs.size(); ++i) counts.push_back(CountErrors(refs[i], hyps[i]));
  return ErrorRate(counts);
}

double Wer(std::span<const CanonicalSequence> refs, std::span<const CanonicalSequence> hyps) {
  CheckPaired(refs.size(), hyps.size());
  std::vector<ErrorCounts> counts;
  for (std::size_t i = 0; i < refs.size(); ++i) counts.push_back(WordErrors(refs[i], hyps[i]));
  return ErrorRate(counts);
}

double Awer(std::span<const CanonicalSequence> refs, std::span<const CanonicalSequence> hyps) {
  CheckPaired(refs.size(), hyps.size());
  std::vector<ErrorCounts> counts;
  for (std::size_t i = 0; i < refs.size(); ++i)
    counts.push_back(AugmentedWordErrors(refs[i], hyps[i]));
  return ErrorRate(counts);
}

double TdBreakdown::ForClass(Label label) const {
  switch (label) {
    case Label::kP: return p;
    case Label::kN: return n;
    case Label::kS: return s;
    case Label::kC: break;
  }
  throw MetricError("temporal distance is defined for paraphasia classes only");
}

LabelColumns AlignLabelColumns(const CanonicalSequence &ref, const CanonicalSequence &hyp) {
  const std::vector<std::string> ref_words = ref.Words();
  const std::vector<std::string> hyp_words = hyp.Words();
  Alignment alignment = Align(ref_words, hyp_words);
  LabelColumns cols;
  cols.ref.reserve(alignment.ops.size());
  cols.hyp.reserve(alignment.ops.size());
  for (const EditOp &op : alignment.ops) {
    cols.ref.push_back(op.ref_index ? ref.pairs[*op.ref_index].label : Label::kC);
    cols.hyp.push_back(op.hyp_index ? hyp.pairs[*op.hyp_index].label : Label::kC);
  }
  return cols;
}

std::size_t RawTemporalDistance(const std::vector<bool> &truth, const std::vector<bool> &pred) {
  if (truth.size() != pred.size()) throw MetricError("column masks differ in length");
  const std::size_t len = truth.size();
  std::vector<std::size_t> to_pred = NearestDistances(pred, len);
  std::vector<std::size_t> to_truth = NearestDistances(truth, len);
  std::size_t total = 0;
  for (std::size_t i = 0; i < len; ++i) {
    if (truth[i]) total += to_pred[i];
    if (pred[i]) total += to_truth[i];
  }
  return total;
}

TdBreakdown TemporalDistance(const CanonicalSequence &ref, const CanonicalSequence &hyp) {
  LabelColumns cols = AlignLabelColumns(ref, hyp);
  const std::size_t len = cols.ref.size();
  TdBreakdown td;
  if (len == 0) return td;

  auto mask = [len](const std::vector<Label> &labels, auto pred) {
    std::vector<bool> m(len);
    for (std::size_t i = 0; i < len; ++i) m[i] = pred(labels[i]);
    return m;
  };
  auto normalized = [&](auto pred) {
    return static_cast<double>(RawTemporalDistance(mask(cols.ref, pred), mask(cols.hyp, pred))) /
           static_cast<double>(len);
  };
  td.p = normalized([](Label l) { return l == Label::kP; });
  td.n = normalized([](Label l) { return l == Label::kN; });
  td.s = normalized([](Label l) { return l == Label::kS; });
  td.binary = normalized([](Label l) { return IsParaphasia(l); });
  td.all = td.p + td.n + td.s;
  return td;
}

TdBreakdown MeanTd(std::span<const TdBreakdown> values) {
  if (values.empty()) throw MetricError("mean temporal distance of an empty corpus");
  TdBreakdown sum;
  for (const TdBreakdown &v : values) {
    sum.binary += v.binary;
    sum.p += v.p;
    sum.n += v.n;
    sum.s += v.s;
  }
  const double count = static_cast<double>(values.size());
  TdBreakdown mean;
  mean.binary = sum.binary / count;
  mean.p = sum.p / count;
  mean.n = sum.n / count;
  mean.s = sum.s / count;
  mean.all = mean.p + mean.n + mean.s;
  return mean;
}

double F1Counts::Precision() const {
  std::size_t denom = true_positives + false_positives;
  return denom == 0 ? 0.0 : static_cast<double>(true_positives) / static_cast<double>(denom);
}

double F1Counts::Recall() const {
  std::size_t denom = true_positives + false_negatives;
  return denom == 0 ? 0.0 : static_cast<double>(true_positives) / static_cast<double>(denom);
}

double F1Counts::F1() const {
  double p = Precision();
  double r = Recall();
  return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
}

F1Counts UtteranceDetectionCounts(std::span<const CanonicalSequence> refs,
                                  std::span<const CanonicalSequence> hyps, Label label) {
  if (!IsParaphasia(label)) throw MetricError("F1 is defined for paraphasia classes only");
  CheckPaired(refs.size(), hyps.size());
  if (refs.empty()) throw MetricError("F1 of an empty corpus");
  auto has = [label](const CanonicalSequence &seq) {
    for (const LabeledWord &p : seq.pairs) {
      if (p.label == label) return true;
    }
    return false;
  };
  F1Counts counts;
  for (std::size_t i = 0; i < refs.size(); ++i) {
    bool truth = has(refs[i]);
    bool pred = has(hyps[i]);
    if (truth && pred) ++counts.true_positives;
    if (!truth && pred) ++counts.false_positives;
    if (truth && !pred) ++counts.false_negatives;
  }
  return counts;
}

double UtteranceF1(std::span<const CanonicalSequence> refs,
                   std::span<const CanonicalSequence> hyps, Label label) {
  return UtteranceDetectionCounts(refs, hyps, label).F1();
}

CorpusScore ScoreCorpus(std::span<const CanonicalSequence> refs,
                        std::span<const CanonicalSequence> hyps) {
  CheckPaired(refs.size(), hyps.size());
  if (refs.empty()) throw MetricError("cannot score an empty corpus");
  CorpusScore score;
  score.num_utterances = refs.size();
  std::vector<ErrorCounts> word, augmented;
  std::vector<TdBreakdown> tds;
  for (std::size_t i = 0; i < refs.size(); ++i) {
    UtteranceScore u;
    u.utt_id = refs[i].utt_id;
    u.word_errors = WordErrors(refs[i], hyps[i]);
    u.augmented_errors = AugmentedWordErrors(refs[i], hyps[i]);
    u.td = TemporalDistance(refs[i], hyps[i]);
    word.push_back(u.word_errors);
    augmented.push_back(u.augmented_errors);
    tds.push_back(u.td);
    score.num_ref_words += u.word_errors.ref_length;
    score.utterances.push_back(std::move(u));
  }
  score.wer = ErrorRate(word);
  score.awer = ErrorRate(augmented);
  score.td = MeanTd(tds);
  score.f1_counts_p = UtteranceDetectionCounts(refs, hyps, Label::kP);
  score.f1_counts_n = UtteranceDetectionCounts(refs, hyps, Label::kN);
  score.f1_counts_s = UtteranceDetectionCounts(refs, hyps, Label::kS);
  score.f1_p = score.f1_counts_p.F1();
  score.f1_n = score.f1_counts_n.F1();
  score.f1_s = score.f1_counts_s.F1();
  return score;
}

}  // namespace paraeval

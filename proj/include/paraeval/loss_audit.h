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

#ifndef PARAEVAL_LOSS_AUDIT_H_
#define PARAEVAL_LOSS_AUDIT_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "paraeval/label.h"

namespace paraeval {

/// A model's conditional distribution at one decoding step together with
/// the index of the reference symbol.
struct StepDistribution {
  std::vector<double> probabilities;
  std::size_t target_index = 0;

  /// Throws Error unless probabilities are non-negative, sum to 1 within
  /// 1e-9, and target_index is in range.
  void Validate() const;
  double TargetProbability() const { return probabilities.at(target_index); }
};

/// One positive weight per class, indexed by Index(Label).
struct ClassWeights {
  std::array<double, kNumLabels> weights{1.0, 1.0, 1.0, 1.0};
  double operator[](Label label) const { return weights[Index(label)]; }
};

struct MultiSeqLoss {
  double asr = 0.0;
  double para = 0.0;
  double total = 0.0;
};

/// Negative log-likelihood -sum_t ln P(target_t) of one output sequence in
/// which transcription and label tokens share the same stream. Throws Error
/// for an empty sequence or a zero target probability.
double SingleSeqLoss(std::span<const StepDistribution> steps);

/// Inverse class-count weights rescaled to sum to the number of classes.
/// Throws Error for a zero count.
ClassWeights ClassWeightsFromCounts(const std::array<std::uint64_t, kNumLabels> &counts);

/// Joint objective of the two-headed model:
///   asr   = -sum_t ln P(y_t)
///   para  = -sum_t w(class_t) ln P(p_t)
///   total = alpha * asr + (1 - alpha) * para
/// Both heads share decoder steps, so the sequences must have equal length.
/// Paraphasia distributions are over the four classes C, P, N, S.
MultiSeqLoss MultiSeqLossOf(std::span<const StepDistribution> asr_steps,
                            std::span<const StepDistribution> para_steps,
                            const ClassWeights &weights, double alpha);

}  // namespace paraeval

#endif  // PARAEVAL_LOSS_AUDIT_H_

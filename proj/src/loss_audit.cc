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

#include "paraeval/loss_audit.h"

#include <cmath>
#include <string>

#include "paraeval/errors.h"

namespace paraeval {

namespace {

double NegLog(const StepDistribution &step, std::size_t t) {
  step.Validate();
  const double p = step.TargetProbability();
  if (p <= 0.0)
    throw Error("step " + std::to_string(t) + ": target has probability 0 (infinite loss)");
  return -std::log(p);
}

}  // namespace

void StepDistribution::Validate() const {
  if (probabilities.empty()) throw Error("step distribution is empty");
  if (target_index >= probabilities.size())
    throw Error("target index " + std::to_string(target_index) + " out of range");
  double sum = 0.0;
  for (double p : probabilities) {
    if (!(p >= 0.0)) throw Error("negative or NaN probability in step distribution");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw Error("step distribution does not sum to 1");
}

double SingleSeqLoss(std::span<const StepDistribution> steps) {
  if (steps.empty()) throw Error("loss of an empty step sequence");
  double loss = 0.0;
  for (std::size_t t = 0; t < steps.size(); ++t) loss += NegLog(steps[t], t);
  return loss;
}

ClassWeights ClassWeightsFromCounts(const std::array<std::uint64_t, kNumLabels> &counts) {
  double inverse_sum = 0.0;
  std::array<double, kNumLabels> inverse{};
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    if (counts[c] == 0)
      throw Error("class " + std::string(LabelName(kAllLabels[c])) + " has zero count");
    inverse[c] = 1.0 / static_cast<double>(counts[c]);
    inverse_sum += inverse[c];
  }
  ClassWeights w;
  for (std::size_t c = 0; c < kNumLabels; ++c)
    w.weights[c] = inverse[c] * static_cast<double>(kNumLabels) / inverse_sum;
  return w;
}

MultiSeqLoss MultiSeqLossOf(std::span<const StepDistribution> asr_steps,
                            std::span<const StepDistribution> para_steps,
                            const ClassWeights &weights, double alpha) {
  if (asr_steps.size() != para_steps.size())
    throw Error("ASR and paraphasia step sequences differ in length");
  if (asr_steps.empty()) throw Error("loss of an empty step sequence");
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error("alpha must lie in (0, 1)");
  for (double w : weights.weights) {
    if (!(w > 0.0)) throw Error("class weights must be positive");
  }

  MultiSeqLoss loss;
  for (std::size_t t = 0; t < asr_steps.size(); ++t) {
    loss.asr += NegLog(asr_steps[t], t);
    const StepDistribution &para = para_steps[t];
    if (para.probabilities.size() != kNumLabels)
      throw Error("step " + std::to_string(t) + ": paraphasia distribution must cover 4 classes");
    const double nll = NegLog(para, t);
    loss.para += weights.weights[para.target_index] * nll;
  }
  loss.total = alpha * loss.asr + (1.0 - alpha) * loss.para;
  return loss;
}

}  // namespace paraeval

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
#include <random>

#include "doctest.h"
#include "paraeval/errors.h"

using namespace paraeval;

namespace {

StepDistribution Uniform(std::size_t v, std::size_t target) {
  return {std::vector<double>(v, 1.0 / static_cast<double>(v)), target};
}

StepDistribution RandomStep(std::mt19937 &rng, std::size_t v) {
  std::vector<double> p(v);
  double sum = 0.0;
  for (double &x : p) sum += (x = 0.05 + static_cast<double>(rng() % 1000) / 1000.0);
  for (double &x : p) x /= sum;
  return {p, rng() % v};
}

}  // namespace

TEST_CASE("single-seq loss closed forms") {
  std::vector<StepDistribution> one = {Uniform(4, 2)};
  CHECK(SingleSeqLoss(one) == doctest::Approx(1.3863).epsilon(1e-4));
  CHECK(SingleSeqLoss(one) == doctest::Approx(std::log(4.0)).epsilon(1e-15));

  std::vector<StepDistribution> certain = {{{0.0, 1.0}, 1}, {{1.0}, 0}};
  CHECK(SingleSeqLoss(certain) == 0.0);

  for (std::size_t m : {1, 3, 10}) {
    for (std::size_t v : {2, 7, 50}) {
      std::vector<StepDistribution> steps(m, Uniform(v, v - 1));
      CHECK(SingleSeqLoss(steps) ==
            doctest::Approx(static_cast<double>(m) * std::log(static_cast<double>(v)))
                .epsilon(1e-12));
    }
  }
}

TEST_CASE("single-seq loss properties") {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<StepDistribution> x, y;
    for (std::size_t i = 0, n = 1 + rng() % 6; i < n; ++i) x.push_back(RandomStep(rng, 5));
    for (std::size_t i = 0, n = 1 + rng() % 6; i < n; ++i) y.push_back(RandomStep(rng, 9));
    std::vector<StepDistribution> xy = x;
    xy.insert(xy.end(), y.begin(), y.end());
    CHECK(SingleSeqLoss(xy) == doctest::Approx(SingleSeqLoss(x) + SingleSeqLoss(y)).epsilon(1e-12));
    CHECK(SingleSeqLoss(x) > 0.0);
  }
}

TEST_CASE("finite-difference check") {
  std::mt19937 rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    StepDistribution step = RandomStep(rng, 6);
    const std::size_t t = step.target_index;
    const std::size_t other = (t + 1) % 6;
    const double p = step.probabilities[t];
    const double h = 0.5 * std::min(p, step.probabilities[other]);
    for (double sign : {1.0, -1.0}) {
      StepDistribution moved = step;
      moved.probabilities[t] += sign * h;
      moved.probabilities[other] -= sign * h;
      std::vector<StepDistribution> a = {step}, b = {moved};
      const double numeric = SingleSeqLoss(b) - SingleSeqLoss(a);
      const double analytic = -std::log((p + sign * h) / p);
      CHECK(std::abs(numeric - analytic) < 1e-9);
    }
  }
}

TEST_CASE("zero target probability and invalid distributions") {
  std::vector<StepDistribution> zero = {{{1.0, 0.0}, 1}};
  CHECK_THROWS_AS(SingleSeqLoss(zero), Error);
  CHECK_THROWS_AS(SingleSeqLoss(std::vector<StepDistribution>{}), Error);
  std::vector<StepDistribution> bad_sum = {{{0.5, 0.4}, 0}};
  CHECK_THROWS_AS(SingleSeqLoss(bad_sum), Error);
  std::vector<StepDistribution> bad_target = {{{0.5, 0.5}, 2}};
  CHECK_THROWS_AS(SingleSeqLoss(bad_target), Error);
  std::vector<StepDistribution> negative = {{{1.5, -0.5}, 0}};
  CHECK_THROWS_AS(SingleSeqLoss(negative), Error);
}

TEST_CASE("class weights") {
  ClassWeights equal = ClassWeightsFromCounts({7, 7, 7, 7});
  for (double w : equal.weights) CHECK(w == doctest::Approx(1.0));

  ClassWeights w = ClassWeightsFromCounts({90, 5, 4, 1});
  const double inv[4] = {1.0 / 90, 1.0 / 5, 1.0 / 4, 1.0};
  const double inv_sum = inv[0] + inv[1] + inv[2] + inv[3];
  double total = 0.0;
  for (std::size_t c = 0; c < 4; ++c) {
    CHECK(w.weights[c] == doctest::Approx(4.0 * inv[c] / inv_sum).epsilon(1e-12));
    CHECK(w.weights[c] / w.weights[3] == doctest::Approx(inv[c]).epsilon(1e-12));
    total += w.weights[c];
  }
  CHECK(total == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(w[Label::kS] == w.weights[3]);

  ClassWeights doubled = ClassWeightsFromCounts({180, 10, 8, 2});
  for (std::size_t c = 0; c < 4; ++c)
    CHECK(doubled.weights[c] == doctest::Approx(w.weights[c]).epsilon(1e-12));

  CHECK_THROWS_AS(ClassWeightsFromCounts({5, 0, 1, 1}), Error);
}

TEST_CASE("multi-seq loss") {
  // Two steps: ASR target probability e^-1 each, Para uniform over 4 classes.
  const double q = std::exp(-1.0);
  std::vector<StepDistribution> asr = {{{q, 1.0 - q}, 0}, {{1.0 - q, q}, 1}};
  std::vector<StepDistribution> para = {Uniform(4, 0), Uniform(4, 1)};
  ClassWeights unit;
  MultiSeqLoss loss = MultiSeqLossOf(asr, para, unit, 0.5);
  CHECK(loss.asr == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(loss.para == doctest::Approx(2.0 * std::log(4.0)).epsilon(1e-12));
  CHECK(loss.total == doctest::Approx(0.5 * loss.asr + 0.5 * loss.para).epsilon(1e-12));

  ClassWeights heavy;
  heavy.weights = {0.5, 3.0, 1.0, 1.0};
  MultiSeqLoss weighted = MultiSeqLossOf(asr, para, heavy, 0.5);
  CHECK(weighted.para == doctest::Approx(3.5 * std::log(4.0)).epsilon(1e-12));
  CHECK(weighted.asr == loss.asr);

  MultiSeqLoss near_one = MultiSeqLossOf(asr, para, unit, 1.0 - 1e-9);
  MultiSeqLoss near_zero = MultiSeqLossOf(asr, para, unit, 1e-9);
  CHECK(near_one.total == doctest::Approx(loss.asr).epsilon(1e-6));
  CHECK(near_zero.total == doctest::Approx(loss.para).epsilon(1e-6));
}

TEST_CASE("total loss is affine in alpha") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<StepDistribution> asr, para;
    for (std::size_t i = 0, n = 1 + rng() % 8; i < n; ++i) {
      asr.push_back(RandomStep(rng, 11));
      para.push_back(RandomStep(rng, 4));
    }
    ClassWeights w = ClassWeightsFromCounts({1 + rng() % 100, 1 + rng() % 10, 1 + rng() % 10,
                                             1 + rng() % 10});
    MultiSeqLoss l3 = MultiSeqLossOf(asr, para, w, 0.3);
    MultiSeqLoss l5 = MultiSeqLossOf(asr, para, w, 0.5);
    MultiSeqLoss l7 = MultiSeqLossOf(asr, para, w, 0.7);
    const double slope = l3.asr - l3.para;
    CHECK((l7.total - l3.total) / 0.4 == doctest::Approx(slope).epsilon(1e-9));
    CHECK(l5.total == doctest::Approx((l3.total + l7.total) / 2.0).epsilon(1e-12));
    CHECK(l3.asr >= 0.0);
    CHECK(l3.para >= 0.0);
  }
}

TEST_CASE("multi-seq loss errors") {
  std::vector<StepDistribution> one = {Uniform(4, 0)}, two = {Uniform(4, 0), Uniform(4, 1)};
  std::vector<StepDistribution> three_classes = {Uniform(3, 0)};
  ClassWeights unit;
  CHECK_THROWS_AS(MultiSeqLossOf(one, two, unit, 0.5), Error);
  CHECK_THROWS_AS(MultiSeqLossOf(one, one, unit, 0.0), Error);
  CHECK_THROWS_AS(MultiSeqLossOf(one, one, unit, 1.0), Error);
  CHECK_THROWS_AS(MultiSeqLossOf(one, three_classes, unit, 0.5), Error);
  CHECK_THROWS_AS(MultiSeqLossOf(std::vector<StepDistribution>{},
                                 std::vector<StepDistribution>{}, unit, 0.5),
                  Error);
  ClassWeights bad;
  bad.weights = {1.0, 0.0, 1.0, 1.0};
  CHECK_THROWS_AS(MultiSeqLossOf(one, one, bad, 0.5), Error);
}

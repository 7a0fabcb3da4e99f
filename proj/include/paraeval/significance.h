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

#ifndef PARAEVAL_SIGNIFICANCE_H_
#define PARAEVAL_SIGNIFICANCE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "paraeval/metrics.h"

namespace paraeval {

struct BootstrapOptions {
  std::size_t iterations = 1000;
  std::size_t batch_size = 100;
  double confidence = 0.95;
  std::uint64_t seed = 0;
  /// Worker threads; 0 means hardware concurrency. Results do not depend on
  /// this value.
  std::size_t threads = 1;
};

struct BootstrapResult {
  std::string metric_name;
  /// Mean over resamples of rate(B) - rate(A), in percentage points.
  double delta_mean = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  /// Fraction of resamples in which A has the lower error rate.
  double p_better = 0.0;
  bool significant = false;
  double confidence = 0.95;
  std::uint64_t seed = 0;
  std::size_t iterations = 0;
  std::size_t batch_size = 0;
};

/// Paired bootstrap of a pooled error rate. Each iteration draws
/// `batch_size` utterance indices with replacement, shared by both systems,
/// and records rate(B) - rate(A). The difference is significant when the
/// percentile confidence interval excludes zero.
///
/// `a` and `b` hold per-utterance counts over the same references. Every
/// iteration uses its own generator seeded from (seed, iteration), so the
/// result is bitwise identical for any thread count.
BootstrapResult BootstrapCompare(std::span<const ErrorCounts> a, std::span<const ErrorCounts> b,
                                 const BootstrapOptions &options,
                                 std::string metric_name = "wer");

/// Two-sided paired sign-flip permutation test on the mean difference of
/// per-utterance values. When 2^n <= permutations all sign patterns are
/// enumerated and p = (#|T*| >= |T|) / 2^n; otherwise `permutations` random
/// patterns give p = (1 + #|T*| >= |T|) / (1 + permutations).
double PairedPermutationTest(std::span<const double> a, std::span<const double> b,
                             std::size_t permutations, std::uint64_t seed);

/// Seed of the generator for sub-stream `stream` of `seed` (SplitMix64).
std::uint64_t SubstreamSeed(std::uint64_t seed, std::uint64_t stream);

}  // namespace paraeval

#endif  // PARAEVAL_SIGNIFICANCE_H_

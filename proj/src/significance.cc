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

#include "paraeval/significance.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>
#include <vector>

#include "paraeval/errors.h"

namespace paraeval {

namespace {

// Unbiased draw from [0, n) that does not depend on the standard library's
// distribution implementation.
std::size_t UniformIndex(std::mt19937_64 &rng, std::size_t n) {
  const std::uint64_t bound = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::size_t>(x % bound);
}

double Rate(const ErrorCounts &c) {
  // A resample of empty references only: count errors per (virtual) word.
  const double len = c.ref_length == 0 ? 1.0 : static_cast<double>(c.ref_length);
  return 100.0 * static_cast<double>(c.errors) / len;
}

// Linear interpolation between order statistics (Hyndman-Fan type 7).
double Quantile(const std::vector<double> &sorted, double q) {
  const double h = (static_cast<double>(sorted.size()) - 1.0) * q;
  const std::size_t lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace

std::uint64_t SubstreamSeed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + (stream + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

BootstrapResult BootstrapCompare(std::span<const ErrorCounts> a, std::span<const ErrorCounts> b,
                                 const BootstrapOptions &options, std::string metric_name) {
  if (a.size() != b.size()) throw MetricError("bootstrap systems differ in utterance count");
  if (a.empty()) throw MetricError("bootstrap over an empty corpus");
  if (options.iterations == 0) throw MetricError("bootstrap needs at least one iteration");
  if (options.batch_size == 0) throw MetricError("bootstrap batch size must be positive");
  if (!(options.confidence > 0.0 && options.confidence < 1.0))
    throw MetricError("confidence must lie in (0, 1)");

  const std::size_t n = a.size();
  std::vector<double> deltas(options.iterations);
  auto run = [&](std::size_t begin, std::size_t end) {
    for (std::size_t it = begin; it < end; ++it) {
      std::mt19937_64 rng(SubstreamSeed(options.seed, it));
      ErrorCounts sum_a, sum_b;
      for (std::size_t k = 0; k < options.batch_size; ++k) {
        std::size_t idx = UniformIndex(rng, n);
        sum_a += a[idx];
        sum_b += b[idx];
      }
      deltas[it] = Rate(sum_b) - Rate(sum_a);
    }
  };

  std::size_t threads = options.threads == 0 ? std::thread::hardware_concurrency()
                                             : options.threads;
  threads = std::clamp<std::size_t>(threads, 1, options.iterations);
  if (threads == 1) {
    run(0, options.iterations);
  } else {
    std::vector<std::thread> workers;
    const std::size_t chunk = (options.iterations + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      std::size_t begin = t * chunk;
      std::size_t end = std::min(options.iterations, begin + chunk);
      if (begin < end) workers.emplace_back(run, begin, end);
    }
    for (std::thread &w : workers) w.join();
  }

  BootstrapResult result;
  result.metric_name = std::move(metric_name);
  result.confidence = options.confidence;
  result.seed = options.seed;
  result.iterations = options.iterations;
  result.batch_size = options.batch_size;

  double sum = 0.0;
  std::size_t a_better = 0;
  for (double d : deltas) {
    sum += d;
    if (d > 0.0) ++a_better;
  }
  result.delta_mean = sum / static_cast<double>(deltas.size());
  result.p_better = static_cast<double>(a_better) / static_cast<double>(deltas.size());

  std::sort(deltas.begin(), deltas.end());
  const double tail = (1.0 - options.confidence) / 2.0;
  result.ci_low = Quantile(deltas, tail);
  result.ci_high = Quantile(deltas, 1.0 - tail);
  result.significant = result.ci_low > 0.0 || result.ci_high < 0.0;
  return result;
}

double PairedPermutationTest(std::span<const double> a, std::span<const double> b,
                             std::size_t permutations, std::uint64_t seed) {
  if (a.size() != b.size()) throw MetricError("permutation test samples differ in length");
  if (a.size() < 2) throw MetricError("permutation test needs at least two pairs");
  if (permutations == 0) throw MetricError("permutation count must be positive");

  const std::size_t n = a.size();
  std::vector<double> diff(n);
  for (std::size_t i = 0; i < n; ++i) diff[i] = b[i] - a[i];

  double observed = 0.0;
  for (double d : diff) observed += d;
  observed = std::abs(observed);
  // Absorbs summation-order rounding so the identity pattern always counts.
  const double threshold = observed - 1e-12 * std::max(1.0, observed);

  auto flipped_sum = [&](auto sign_bit) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += sign_bit(i) ? -diff[i] : diff[i];
    return std::abs(s);
  };

  const bool exact = n < 63 && (std::uint64_t{1} << n) <= permutations;
  if (exact) {
    const std::uint64_t patterns = std::uint64_t{1} << n;
    std::uint64_t extreme = 0;
    for (std::uint64_t mask = 0; mask < patterns; ++mask) {
      if (flipped_sum([mask](std::size_t i) { return (mask >> i) & 1U; }) >= threshold)
        ++extreme;
    }
    return static_cast<double>(extreme) / static_cast<double>(patterns);
  }

  std::mt19937_64 rng(SubstreamSeed(seed, 0));
  std::vector<bool> signs(n);
  std::size_t extreme = 0;
  for (std::size_t k = 0; k < permutations; ++k) {
    for (std::size_t i = 0; i < n; i += 64) {
      std::uint64_t bits = rng();
      for (std::size_t j = i; j < std::min(n, i + 64); ++j) signs[j] = (bits >> (j - i)) & 1U;
    }
    if (flipped_sum([&signs](std::size_t i) { return signs[i]; }) >= threshold) ++extreme;
  }
  return static_cast<double>(extreme + 1) / static_cast<double>(permutations + 1);
}

}  // namespace paraeval

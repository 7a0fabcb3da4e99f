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

#include <random>
#include <set>

#include "doctest.h"
#include "paraeval/errors.h"

using namespace paraeval;

namespace {

std::vector<ErrorCounts> RandomCounts(std::mt19937 &rng, std::size_t n, std::size_t max_errors) {
  std::vector<ErrorCounts> out(n);
  for (ErrorCounts &c : out) {
    c.ref_length = 1 + rng() % 12;
    c.errors = rng() % (max_errors + 1);
  }
  return out;
}

bool SameResult(const BootstrapResult &x, const BootstrapResult &y) {
  return x.delta_mean == y.delta_mean && x.ci_low == y.ci_low && x.ci_high == y.ci_high &&
         x.p_better == y.p_better && x.significant == y.significant;
}

}  // namespace

TEST_CASE("bootstrap defaults") {
  BootstrapOptions defaults;
  CHECK(defaults.iterations == 1000);
  CHECK(defaults.batch_size == 100);
  CHECK(defaults.confidence == 0.95);
}

TEST_CASE("self-comparison is never significant") {
  std::mt19937 rng(1);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    std::vector<ErrorCounts> a = RandomCounts(rng, 30, 5);
    BootstrapOptions opts;
    opts.seed = seed;
    opts.iterations = 200;
    BootstrapResult r = BootstrapCompare(a, a, opts);
    CHECK(r.delta_mean == 0.0);
    CHECK(r.ci_low == 0.0);
    CHECK(r.ci_high == 0.0);
    CHECK(!r.significant);
    CHECK(r.p_better == 0.0);
  }
}

TEST_CASE("uniformly worse system is significant") {
  std::mt19937 rng(2);
  std::vector<ErrorCounts> a = RandomCounts(rng, 40, 3);
  std::vector<ErrorCounts> b = a;
  for (ErrorCounts &c : b) c.errors += 1;
  BootstrapOptions opts;
  opts.seed = 7;
  BootstrapResult r = BootstrapCompare(a, b, opts, "awer");
  CHECK(r.metric_name == "awer");
  CHECK(r.significant);
  CHECK(r.ci_low > 0.0);
  CHECK(r.delta_mean > 0.0);
  CHECK(r.p_better == 1.0);
  CHECK(r.iterations == 1000);
  CHECK(r.batch_size == 100);
  CHECK(r.seed == 7);
}

TEST_CASE("bootstrap is reproducible and schedule independent") {
  std::mt19937 rng(3);
  std::vector<ErrorCounts> a = RandomCounts(rng, 57, 4), b = RandomCounts(rng, 57, 4);
  BootstrapOptions opts;
  opts.seed = 12345;
  BootstrapResult base = BootstrapCompare(a, b, opts);
  CHECK(SameResult(base, BootstrapCompare(a, b, opts)));
  for (std::size_t threads : {2, 3, 8, 0}) {
    opts.threads = threads;
    CHECK(SameResult(base, BootstrapCompare(a, b, opts)));
  }
  opts.threads = 1;
  opts.seed = 12346;
  CHECK(!SameResult(base, BootstrapCompare(a, b, opts)));
  CHECK(base.ci_low <= base.ci_high);
}

TEST_CASE("swapping systems mirrors the result") {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<ErrorCounts> a = RandomCounts(rng, 25, 4), b = RandomCounts(rng, 25, 4);
    BootstrapOptions opts;
    opts.seed = static_cast<std::uint64_t>(trial);
    opts.iterations = 300;
    BootstrapResult ab = BootstrapCompare(a, b, opts), ba = BootstrapCompare(b, a, opts);
    CHECK(ba.delta_mean == doctest::Approx(-ab.delta_mean).epsilon(1e-12));
    CHECK(ba.ci_low == doctest::Approx(-ab.ci_high).epsilon(1e-9));
    CHECK(ba.ci_high == doctest::Approx(-ab.ci_low).epsilon(1e-9));
    CHECK(ba.significant == ab.significant);
  }
}

TEST_CASE("bootstrap errors") {
  std::vector<ErrorCounts> a = {{1, 2}}, two = {{1, 2}, {0, 3}}, none;
  BootstrapOptions opts;
  CHECK_THROWS_AS(BootstrapCompare(a, two, opts), MetricError);
  CHECK_THROWS_AS(BootstrapCompare(none, none, opts), MetricError);
  opts.iterations = 0;
  CHECK_THROWS_AS(BootstrapCompare(a, a, opts), MetricError);
  opts = {};
  opts.batch_size = 0;
  CHECK_THROWS_AS(BootstrapCompare(a, a, opts), MetricError);
  opts = {};
  opts.confidence = 1.0;
  CHECK_THROWS_AS(BootstrapCompare(a, a, opts), MetricError);
}

TEST_CASE("permutation test exact enumeration") {
  std::vector<double> a(10, 0.0), b(10);
  for (std::size_t i = 0; i < b.size(); ++i) b[i] = 0.1 * static_cast<double>(i + 1);
  CHECK(PairedPermutationTest(a, b, 10000, 0) == doctest::Approx(2.0 / 1024.0));
  CHECK(PairedPermutationTest(b, a, 10000, 0) == doctest::Approx(2.0 / 1024.0));
  CHECK(PairedPermutationTest(a, a, 10000, 0) == 1.0);
  CHECK(PairedPermutationTest(b, b, 10000, 5) == 1.0);

  // Three pairs, hand enumeration: |d| = (1, 2, 3), observed 6, sign
  // patterns reaching |T| >= 6 are +++, ---, so p = 2/8.
  std::vector<double> x = {0, 0, 0}, y = {1, 2, 3};
  CHECK(PairedPermutationTest(x, y, 8, 0) == doctest::Approx(0.25));
  // Differences (1, -1): every pattern has |T| in {0, 2}; observed 0.
  std::vector<double> u = {0, 0}, v = {1, -1};
  CHECK(PairedPermutationTest(u, v, 100, 0) == 1.0);
}

TEST_CASE("permutation test Monte Carlo") {
  std::mt19937 rng(5);
  std::vector<double> a(40), b(40);
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] = static_cast<double>(rng() % 100) / 100.0;
    b[i] = a[i] + 0.05 + static_cast<double>(rng() % 10) / 1000.0;
  }
  double p = PairedPermutationTest(a, b, 2000, 9);
  CHECK(p == doctest::Approx(1.0 / 2001.0));
  CHECK(PairedPermutationTest(a, b, 2000, 9) == p);
  CHECK(PairedPermutationTest(a, a, 500, 1) == 1.0);

  std::vector<double> noise(40);
  for (double &v : noise) v = static_cast<double>(rng() % 100) / 100.0;
  double q1 = PairedPermutationTest(a, noise, 3000, 1);
  double q2 = PairedPermutationTest(a, noise, 3000, 1);
  CHECK(q1 == q2);
  CHECK(q1 > 0.0);
  CHECK(q1 <= 1.0);
}

TEST_CASE("permutation test errors") {
  std::vector<double> one = {1.0}, two = {1.0, 2.0}, three = {1.0, 2.0, 3.0};
  CHECK_THROWS_AS(PairedPermutationTest(two, three, 100, 0), MetricError);
  CHECK_THROWS_AS(PairedPermutationTest(one, one, 100, 0), MetricError);
  CHECK_THROWS_AS(PairedPermutationTest(two, two, 0, 0), MetricError);
}

TEST_CASE("substream seeds are distinct") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 4; ++s)
    for (std::uint64_t k = 0; k < 1000; ++k) seen.insert(SubstreamSeed(s, k));
  CHECK(seen.size() == 4000);
}

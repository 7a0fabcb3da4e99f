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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "paraeval/errors.h"

using namespace paraeval;

namespace {

using Corpus = std::vector<CanonicalSequence>;

CanonicalSequence Seq(std::string_view single_seq, std::string id = "") {
  CanonicalSequence s = ParseSingleSeq(single_seq);
  s.utt_id = std::move(id);
  return s;
}

// Sequence with the given words and labels (labels as a string over "cpns").
CanonicalSequence Labeled(const std::vector<std::string> &words, std::string_view labels) {
  CanonicalSequence s;
  for (std::size_t i = 0; i < words.size(); ++i)
    s.pairs.push_back({words[i], *ParseLabel(std::string_view(&labels[i], 1))});
  return s;
}

CanonicalSequence RandomSeq(std::mt19937 &rng, std::size_t max_len) {
  static const std::vector<std::string> vocab = {"a", "b", "c", "d"};
  CanonicalSequence s;
  const std::size_t n = rng() % (max_len + 1);
  for (std::size_t i = 0; i < n; ++i) {
    // Mostly C so that paraphasias are sparse, as in real transcripts.
    const unsigned r = rng() % 10;
    Label l = r < 6 ? Label::kC : r < 8 ? Label::kP : r < 9 ? Label::kN : Label::kS;
    s.pairs.push_back({vocab[rng() % vocab.size()], l});
  }
  return s;
}

constexpr double kEps = 1e-12;

}  // namespace

TEST_CASE("frozen two-utterance fixture") {
  // Values from tests/oracles/fixture_oracle.py (exhaustive alignments).
  Corpus refs = {Seq("the cat [p] sat", "u1"), Seq("my dog [n] ran home [s]", "u2")};
  Corpus hyps = {Seq("the hat [p] sat", "u1"), Seq("my dog ran [n]", "u2")};
  CorpusScore score = ScoreCorpus(refs, hyps);
  CHECK(score.wer == doctest::Approx(28.571428571428573).epsilon(kEps));
  CHECK(score.awer == doctest::Approx(35.714285714285715).epsilon(kEps));
  CHECK(score.td.p == doctest::Approx(0.0));
  CHECK(score.td.n == doctest::Approx(0.25).epsilon(kEps));
  CHECK(score.td.s == doctest::Approx(0.5).epsilon(kEps));
  CHECK(score.td.all == doctest::Approx(0.75).epsilon(kEps));
  CHECK(score.td.binary == doctest::Approx(0.375).epsilon(kEps));
  CHECK(score.f1_p == doctest::Approx(1.0));
  CHECK(score.f1_n == doctest::Approx(1.0));
  CHECK(score.f1_s == doctest::Approx(0.0));
  CHECK(score.num_utterances == 2);
  CHECK(score.num_ref_words == 7);
  REQUIRE(score.utterances.size() == 2);
  CHECK(score.utterances[1].utt_id == "u2");
  CHECK(score.utterances[1].word_errors == ErrorCounts{1, 4});
  CHECK(score.utterances[1].augmented_errors == ErrorCounts{4, 8});
}

TEST_CASE("WER examples") {
  std::vector<std::vector<std::string>> r1 = {{"a", "b", "c"}}, h1 = {{"a", "x", "c"}};
  CHECK(Wer(r1, h1) == doctest::Approx(100.0 / 3.0).epsilon(kEps));
  std::vector<std::vector<std::string>> r2 = {{"a"}}, h2 = {{"a", "b", "c"}};
  CHECK(Wer(r2, h2) == doctest::Approx(200.0));
  CHECK(Wer(r1, r1) == 0.0);
  std::vector<std::vector<std::string>> empty_ref = {{}};
  CHECK_THROWS_AS(Wer(empty_ref, h1), MetricError);
  std::vector<std::vector<std::string>> no_hyps;
  CHECK_THROWS_AS(Wer(r1, no_hyps), MetricError);
  CHECK_THROWS_AS(ErrorRate(std::vector<ErrorCounts>{}), MetricError);
}

TEST_CASE("AWER examples") {
  Corpus ref = {Seq("a b [p] c d")};
  Corpus hyp = {Seq("a b [n] c d")};
  CHECK(Awer(ref, hyp) == doctest::Approx(12.5));
  CHECK(Wer(ref, hyp) == 0.0);
  CHECK(Awer(ref, ref) == 0.0);
  CHECK(Interleave(ref[0]) ==
        std::vector<std::string>{"a", "[c]", "b", "[p]", "c", "[c]", "d", "[c]"});

  for (std::size_t n = 1; n <= 12; ++n) {
    std::vector<std::string> words;
    for (std::size_t i = 0; i < n; ++i) words.push_back("w" + std::to_string(i));
    std::string ref_labels(n, 'c'), hyp_labels(n, 'c');
    hyp_labels[n / 2] = 's';
    Corpus r = {Labeled(words, ref_labels)}, h = {Labeled(words, hyp_labels)};
    CHECK(Awer(r, h) == doctest::Approx(100.0 / (2.0 * static_cast<double>(n))).epsilon(kEps));
  }
}

TEST_CASE("AWER is half of WER on substitution-only corpora with matching labels") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    Corpus refs, hyps;
    for (int u = 0; u < 4; ++u) {
      CanonicalSequence r, h;
      const std::size_t n = 1 + rng() % 7;
      for (std::size_t i = 0; i < n; ++i) {
        Label l = kAllLabels[rng() % 4];
        std::string w = "r" + std::to_string(u) + "_" + std::to_string(i);
        r.pairs.push_back({w, l});
        h.pairs.push_back({rng() % 3 == 0 ? "z" + w : w, l});
      }
      refs.push_back(r);
      hyps.push_back(h);
    }
    CHECK(Awer(refs, hyps) == doctest::Approx(Wer(refs, hyps) / 2.0).epsilon(kEps));
  }
}

TEST_CASE("temporal distance examples") {
  const std::vector<std::string> words = {"a", "b", "c", "d", "e"};
  TdBreakdown td = TemporalDistance(Labeled(words, "ccncc"), Labeled(words, "ccccn"));
  CHECK(td.n == doctest::Approx(0.8));
  CHECK(td.binary == doctest::Approx(0.8));
  CHECK(td.all == doctest::Approx(0.8));
  CHECK(td.p == 0.0);
  CHECK(td.s == 0.0);

  td = TemporalDistance(Labeled(words, "ccncc"), Labeled(words, "ccccc"));
  CHECK(td.n == doctest::Approx(1.0));
  td = TemporalDistance(Labeled(words, "ccccc"), Labeled(words, "pcccc"));
  CHECK(td.p == doctest::Approx(1.0));

  td = TemporalDistance(Labeled(words, "pnscc"), Labeled(words, "pnscc"));
  CHECK(td == TdBreakdown{});

  CHECK(TemporalDistance(CanonicalSequence{}, CanonicalSequence{}) == TdBreakdown{});

  // Gap columns read C on the missing side; L counts alignment columns.
  LabelColumns cols = AlignLabelColumns(Seq("my dog [n] ran home [s]"), Seq("my dog ran [n]"));
  CHECK(cols.ref == std::vector<Label>{Label::kC, Label::kN, Label::kC, Label::kS});
  CHECK(cols.hyp == std::vector<Label>{Label::kC, Label::kC, Label::kN, Label::kC});

  td = TemporalDistance(CanonicalSequence{}, Seq("x [p] y"));
  CHECK(td.p == doctest::Approx(1.0));

  CHECK(td.ForClass(Label::kP) == td.p);
  CHECK_THROWS_AS(td.ForClass(Label::kC), MetricError);
}

TEST_CASE("raw temporal distance against direct enumeration") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t L = 1 + rng() % 12;
    std::vector<bool> g(L), h(L);
    for (std::size_t i = 0; i < L; ++i) {
      g[i] = rng() % 4 == 0;
      h[i] = rng() % 4 == 0;
    }
    auto nearest = [&](std::size_t i, const std::vector<bool> &mask) {
      std::size_t best = L;
      for (std::size_t x = 0; x < L; ++x)
        if (mask[x]) best = std::min(best, x > i ? x - i : i - x);
      return best;
    };
    std::size_t expected = 0;
    for (std::size_t i = 0; i < L; ++i) {
      if (g[i]) expected += nearest(i, h);
      if (h[i]) expected += nearest(i, g);
    }
    CHECK(RawTemporalDistance(g, h) == expected);
    CHECK(RawTemporalDistance(h, g) == expected);
  }
  CHECK_THROWS_AS(RawTemporalDistance({true}, {true, false}), MetricError);
}

TEST_CASE("temporal distance invariants") {
  std::mt19937 rng(99);
  std::vector<TdBreakdown> all;
  for (int trial = 0; trial < 1000; ++trial) {
    CanonicalSequence r = RandomSeq(rng, 8), h = RandomSeq(rng, 8);
    TdBreakdown td = TemporalDistance(r, h);
    CHECK(td.all == doctest::Approx(td.p + td.n + td.s).epsilon(kEps));
    CHECK(td.binary <= td.all + kEps);
    for (double v : {td.binary, td.p, td.n, td.s}) CHECK(v >= 0.0);
    TdBreakdown self = TemporalDistance(r, r);
    CHECK(self == TdBreakdown{});
    all.push_back(td);
  }
  TdBreakdown mean = MeanTd(all);
  CHECK(mean.all == mean.p + mean.n + mean.s);
  CHECK(mean.binary <= mean.all);
}

TEST_CASE("mean temporal distance") {
  TdBreakdown a{0.8, 0.0, 0.8, 0.0, 0.8};
  std::vector<TdBreakdown> one = {a};
  CHECK(MeanTd(one) == a);
  std::vector<TdBreakdown> two = {a, TdBreakdown{}};
  CHECK(MeanTd(two).n == doctest::Approx(0.4));
  CHECK_THROWS_AS(MeanTd(std::vector<TdBreakdown>{}), MetricError);
}

TEST_CASE("utterance F1") {
  Corpus refs = {Seq("a [p]"), Seq("b [p]"), Seq("c"), Seq("d [p]")};
  Corpus hyps = {Seq("a [p]"), Seq("b [p]"), Seq("c [p]"), Seq("d")};
  F1Counts counts = UtteranceDetectionCounts(refs, hyps, Label::kP);
  CHECK(counts.true_positives == 2);
  CHECK(counts.false_positives == 1);
  CHECK(counts.false_negatives == 1);
  CHECK(counts.F1() == doctest::Approx(2.0 / 3.0));
  CHECK(UtteranceF1(refs, hyps, Label::kP) == doctest::Approx(0.6667).epsilon(1e-4));

  Corpus none = {Seq("a"), Seq("b"), Seq("c"), Seq("d")};
  CHECK(UtteranceF1(refs, none, Label::kP) == 0.0);
  CHECK(UtteranceF1(refs, refs, Label::kP) == 1.0);
  CHECK(UtteranceF1(none, none, Label::kN) == 0.0);
  CHECK_THROWS_AS(UtteranceF1(refs, hyps, Label::kC), MetricError);
  CHECK_THROWS_AS(UtteranceF1(Corpus{}, Corpus{}, Label::kP), MetricError);
}

TEST_CASE("zero law") {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    Corpus refs;
    for (int u = 0; u < 5; ++u) {
      CanonicalSequence s = RandomSeq(rng, 6);
      s.pairs.push_back({"tail", Label::kC});
      refs.push_back(s);
    }
    refs[0].pairs[0].label = Label::kP;
    refs[1].pairs[0].label = Label::kN;
    refs[2].pairs[0].label = Label::kS;
    CorpusScore score = ScoreCorpus(refs, refs);
    CHECK(score.wer == 0.0);
    CHECK(score.awer == 0.0);
    CHECK(score.td == TdBreakdown{});
    CHECK(score.f1_p == 1.0);
    CHECK(score.f1_n == 1.0);
    CHECK(score.f1_s == 1.0);
  }
}

TEST_CASE("flipping a correct paraphasia label never helps") {
  std::mt19937 rng(8);
  int flips = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    CanonicalSequence r = RandomSeq(rng, 8), h = RandomSeq(rng, 8);
    if (r.pairs.empty()) continue;
    // Copy the reference onto part of the hypothesis so that some columns
    // match with equal labels.
    h = r;
    for (auto &p : h.pairs)
      if (rng() % 3 == 0) p.label = kAllLabels[rng() % 4];
    if (rng() % 2) h.pairs.push_back({"x", Label::kC});

    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < h.pairs.size() && i < r.pairs.size(); ++i)
      if (h.pairs[i].label == r.pairs[i].label && IsParaphasia(r.pairs[i].label))
        candidates.push_back(i);
    if (candidates.empty()) continue;
    const std::size_t i = candidates[rng() % candidates.size()];
    const Label original = h.pairs[i].label;
    CanonicalSequence flipped = h;
    flipped.pairs[i].label = rng() % 2 ? Label::kC
                                       : (original == Label::kP ? Label::kS : Label::kP);

    Corpus rc = {r}, hc = {h}, fc = {flipped};
    CHECK(Awer(rc, fc) >= Awer(rc, hc));
    TdBreakdown before = TemporalDistance(r, h), after = TemporalDistance(r, flipped);
    CHECK(after.ForClass(original) >= before.ForClass(original) - kEps);
    if (flipped.pairs[i].label == Label::kC) CHECK(after.binary >= before.binary - kEps);
    ++flips;
  }
  CHECK(flips > 100);
}

TEST_CASE("corpus metrics ignore utterance order") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    Corpus refs, hyps;
    for (int u = 0; u < 8; ++u) {
      CanonicalSequence r = RandomSeq(rng, 6);
      r.pairs.push_back({"end", Label::kC});
      refs.push_back(r);
      hyps.push_back(RandomSeq(rng, 6));
    }
    CorpusScore base = ScoreCorpus(refs, hyps);
    std::vector<std::size_t> order(refs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    Corpus r2, h2;
    for (std::size_t i : order) {
      r2.push_back(refs[i]);
      h2.push_back(hyps[i]);
    }
    CorpusScore shuffled = ScoreCorpus(r2, h2);
    CHECK(shuffled.wer == base.wer);
    CHECK(shuffled.awer == base.awer);
    CHECK(shuffled.td.p == doctest::Approx(base.td.p).epsilon(kEps));
    CHECK(shuffled.td.all == doctest::Approx(base.td.all).epsilon(kEps));
    CHECK(shuffled.td.binary == doctest::Approx(base.td.binary).epsilon(kEps));
    CHECK(shuffled.f1_p == base.f1_p);
    CHECK(shuffled.f1_n == base.f1_n);
    CHECK(shuffled.f1_s == base.f1_s);
  }
}

TEST_CASE("ScoreCorpus preconditions") {
  Corpus one = {Seq("a")};
  CHECK_THROWS_AS(ScoreCorpus(Corpus{}, Corpus{}), MetricError);
  CHECK_THROWS_AS(ScoreCorpus(one, Corpus{}), MetricError);
  Corpus empty_words = {CanonicalSequence{}};
  CHECK_THROWS_AS(ScoreCorpus(empty_words, empty_words), MetricError);
}

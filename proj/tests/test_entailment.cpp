#include <random>

#include "doctest.h"
#include "helpers.hpp"

#include "desirefill/entailment.hpp"
#include "desirefill/normalize.hpp"

using namespace desirefill;
using desirefill::testing::default_lexicons;
using desirefill::testing::make_instance;

TEST_CASE("lemma alignment entails the painted-barn example") {
  const auto inst = make_instance(
      "e1", "One day Jerry wanted to paint his barn .",
      {"It took Jerry six days to paint his barn that way ."});
  const auto hyp = normalize(inst, default_lexicons());
  CHECK(hyp.text() == "Jerry painted his barn");
  const auto j = judge(inst, hyp, default_lexicons(), 0.75);
  CHECK(j.entailed);
  CHECK(j.coverage == doctest::Approx(1.0));
}

TEST_CASE("hypothesis identical to an evidence has full coverage") {
  const auto inst = make_instance("e2", "Greg wanted to win the race .",
                                  {"Greg won the race ."});
  const auto hyp = normalize(inst, default_lexicons());
  CHECK(hyp.text() == "Greg won the race");
  const auto j = judge(inst, hyp, default_lexicons(), 1.0);
  CHECK(j.coverage == doctest::Approx(1.0));
  CHECK(j.entailed);
}

TEST_CASE("disjoint vocabulary yields zero coverage") {
  const auto inst = make_instance("e3", "Greg wanted to win the race .",
                                  {"The teacher studied a book ."});
  const auto hyp = normalize(inst, default_lexicons());
  const auto j = judge(inst, hyp, default_lexicons(), 0.5);
  CHECK(j.coverage == 0.0);
  CHECK_FALSE(j.entailed);
}

TEST_CASE("an antonym blocks alignment for that lemma") {
  const auto inst = make_instance("e4", "Greg wanted to win the race .",
                                  {"Greg lost the race ."});
  const auto hyp = normalize(inst, default_lexicons());
  const auto j = judge(inst, hyp, default_lexicons(), 0.75);
  // "won" would lemma-match nothing, and "lost" blocks it outright;
  // Greg and race still align -> 2/3.
  CHECK(j.coverage == doctest::Approx(2.0 / 3.0));
  CHECK_FALSE(j.entailed);
}

TEST_CASE("synonyms align only with matching POS") {
  const auto inst = make_instance("e5", "Omar wanted to help the neighbors .",
                                  {"He assisted the neighbors ."});
  const auto hyp = normalize(inst, default_lexicons());
  const auto j = judge(inst, hyp, default_lexicons(), 0.5);
  // helped -> assist via synonym; neighbors aligns; Omar does not. 2/3.
  CHECK(j.coverage == doctest::Approx(2.0 / 3.0));
  CHECK(j.entailed);
}

TEST_CASE("empty hypothesis has zero coverage and is not entailed") {
  const auto inst = make_instance("e6", "Lily wanted it .", {"She was happy ."});
  const auto hyp = normalize(inst, default_lexicons());
  const auto j = judge(inst, hyp, default_lexicons(), 0.3);
  CHECK(j.coverage == 0.0);
  CHECK_FALSE(j.entailed);
}

TEST_CASE("threshold precondition is enforced") {
  const auto inst = make_instance("e7", "Greg wanted to win the race .",
                                  {"Greg won the race ."});
  const auto hyp = normalize(inst, default_lexicons());
  CHECK_THROWS_AS(judge(inst, hyp, default_lexicons(), 0.0), DataError);
  CHECK_THROWS_AS(judge(inst, hyp, default_lexicons(), 1.5), DataError);
}

TEST_CASE("entailer monotonicity properties") {
  // Random hypothesis/evidence pairs from a small vocabulary; see the
  // acceptance suite for the full-size run.
  std::mt19937_64 rng(17);
  const std::vector<std::string> vocab = {"Jerry", "barn",  "race",  "cake", "paint",
                                          "win",   "bake",  "happy", "sad",  "store"};
  const std::vector<Pos> poses = {Pos::Noun, Pos::Noun, Pos::Noun, Pos::Noun, Pos::Verb,
                                  Pos::Verb, Pos::Verb, Pos::Adj,  Pos::Adj,  Pos::Noun};

  auto random_sentence = [&](int len) {
    AnnotatedSentence s;
    for (int i = 0; i < len; ++i) {
      const std::size_t w = rng() % vocab.size();
      s.tokens.push_back(Token{vocab[w], vocab[w], poses[w], i, false});
    }
    return s;
  };

  for (int trial = 0; trial < 200; ++trial) {
    DesireInstance inst;
    inst.id = "prop";
    inst.desire_expression = annotate("Greg wanted to win the race .");
    inst.desire_verb_token = 1;
    inst.desire_subject = MentionSpan{0, 0, 1};
    const int n = 1 + static_cast<int>(rng() % 4);
    for (int j = 0; j < n; ++j) {
      inst.evidences.push_back(random_sentence(3 + static_cast<int>(rng() % 5)));
    }

    NormalizedHypothesis hyp;
    const int hlen = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < hlen; ++i) {
      const std::size_t w = rng() % vocab.size();
      hyp.tokens.push_back(HypToken{vocab[w], vocab[w], poses[w]});
    }

    const auto base = judge(inst, hyp, default_lexicons(), 0.6);

    // threshold monotonicity
    const auto looser = judge(inst, hyp, default_lexicons(), 0.3);
    if (base.entailed) CHECK(looser.entailed);

    // adding an evidence never decreases max coverage
    DesireInstance more = inst;
    if (more.evidences.size() < 5) {
      more.evidences.push_back(random_sentence(4));
      const auto grown = judge(more, hyp, default_lexicons(), 0.6);
      CHECK(grown.coverage >= base.coverage);
    }

    // removing the best evidence never increases max coverage
    if (inst.evidences.size() > 1) {
      std::size_t best = 0;
      for (std::size_t j = 1; j < base.per_evidence.size(); ++j) {
        if (base.per_evidence[j].second > base.per_evidence[best].second) best = j;
      }
      DesireInstance fewer = inst;
      fewer.evidences.erase(fewer.evidences.begin() + static_cast<long>(best));
      const auto shrunk = judge(fewer, hyp, default_lexicons(), 0.6);
      CHECK(shrunk.coverage <= base.coverage);
    }

    // permuting evidences flips only per-evidence ordering
    DesireInstance rev = inst;
    std::reverse(rev.evidences.begin(), rev.evidences.end());
    const auto rj = judge(rev, hyp, default_lexicons(), 0.6);
    CHECK(rj.entailed == base.entailed);
    CHECK(rj.coverage == base.coverage);
  }
}

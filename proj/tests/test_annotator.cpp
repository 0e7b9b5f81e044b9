#include "doctest.h"
#include "helpers.hpp"

#include "desirefill/annotator.hpp"
#include "desirefill/synth.hpp"

using namespace desirefill;

namespace {

bool has_arc(const AnnotatedSentence& s, Rel rel, const std::string& head,
             const std::string& dep) {
  for (const Arc& a : s.arcs) {
    if (a.rel == rel && s.tokens[a.head].surface == head && s.tokens[a.dep].surface == dep) {
      return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("active transitive sentence") {
  const auto s = annotate("Jerry painted his barn .");
  REQUIRE(s.size() == 5);
  CHECK(s.tokens[1].pos == Pos::Verb);
  CHECK(s.tokens[1].lemma == "paint");
  CHECK(has_arc(s, Rel::Subject, "painted", "Jerry"));
  CHECK(has_arc(s, Rel::Object, "painted", "barn"));
}

TEST_CASE("predicative adjective links to its subject") {
  const auto s = annotate("He was happy .");
  CHECK(has_arc(s, Rel::AdjectivalModifier, "happy", "He"));
  CHECK_FALSE(s.tokens[2].negated);
}

TEST_CASE("leading discourse token is preserved") {
  const auto s = annotate("However , he failed .");
  CHECK(s.tokens[0].surface == "However");
  CHECK(has_arc(s, Rel::Subject, "failed", "he"));
}

TEST_CASE("negation marks the following verb or adjective") {
  const auto v = annotate("She did not find the cat .");
  CHECK(has_arc(v, Rel::Negation, "find", "not"));
  for (const Token& t : v.tokens) {
    if (t.surface == "find") CHECK(t.negated);
  }
  const auto a = annotate("She was not happy .");
  CHECK(has_arc(a, Rel::AdjectivalModifier, "happy", "She"));
  for (const Token& t : a.tokens) {
    if (t.surface == "happy") CHECK(t.negated);
  }
}

TEST_CASE("passive subject") {
  const auto s = annotate("He was thanked by the neighbors .");
  CHECK(has_arc(s, Rel::PassiveSubject, "thanked", "He"));
  CHECK_FALSE(has_arc(s, Rel::Object, "thanked", "neighbors"));
}

TEST_CASE("desire verb clausal complement") {
  const auto verb = annotate("Jerry wanted to paint his barn .");
  CHECK(has_arc(verb, Rel::ClausalComplement, "wanted", "paint"));

  const auto aux = annotate("He wished to be buried beside the church .");
  CHECK(has_arc(aux, Rel::ClausalComplement, "wished", "buried"));

  const auto copular = annotate("Lily wanted to be a doctor .");
  CHECK(has_arc(copular, Rel::ClausalComplement, "wanted", "doctor"));

  const auto none = annotate("Lily wanted it .");
  bool found = false;
  for (const Arc& a : none.arcs) found |= a.rel == Rel::ClausalComplement;
  CHECK_FALSE(found);
}

TEST_CASE("attributive adjective attaches to the noun") {
  const auto s = annotate("He baked the fresh cake .");
  CHECK(has_arc(s, Rel::AdjectivalModifier, "cake", "fresh"));
}

TEST_CASE("subject is inherited across a conjunction") {
  const auto s = annotate("He walked outside and asked Tasha .");
  CHECK(has_arc(s, Rel::Subject, "walked", "He"));
  CHECK(has_arc(s, Rel::Subject, "asked", "He"));
  CHECK(has_arc(s, Rel::Object, "asked", "Tasha"));
}

TEST_CASE("unknown token is rejected by name") {
  CHECK_THROWS_WITH_AS(annotate("Jerry flew the zeppelin ."),
                       doctest::Contains("zeppelin"), DataError);
}

TEST_CASE("annotation is pure") {
  const std::string text = "One day Jerry wanted to paint his barn .";
  const auto a = annotate(text);
  const auto b = annotate(text);
  REQUIRE(a.size() == b.size());
  REQUIRE(a.arcs.size() == b.arcs.size());
  for (std::size_t i = 0; i < a.arcs.size(); ++i) {
    CHECK(a.arcs[i].head == b.arcs[i].head);
    CHECK(a.arcs[i].dep == b.arcs[i].dep);
  }
}

TEST_CASE("every generated sentence annotates cleanly") {
  // Closure over the generator's templates: a large draw with every rule and
  // all lengths; generate() itself annotates and validates each instance.
  for (LabelRule rule :
       {LabelRule::LastStateParity, LabelRule::FocalPresence, LabelRule::Mixed}) {
    SynthConfig cfg;
    cfg.count = 300;
    cfg.rule = rule;
    cfg.cue_prob = 0.6;
    cfg.seed = 11;
    cfg.length_weights = {0.2, 0.2, 0.2, 0.2, 0.2};
    const auto corpus = generate(cfg);
    CHECK(corpus.size() == 300);
    for (const auto& inst : corpus) {
      CHECK_NOTHROW(validate_instance(inst));
    }
  }
}

#include "doctest.h"
#include "helpers.hpp"

#include "desirefill/normalize.hpp"
#include "desirefill/pipeline.hpp"
#include "desirefill/synth.hpp"

using namespace desirefill;
using desirefill::testing::default_lexicons;
using desirefill::testing::make_instance;

TEST_CASE("normalization produces the entailment hypothesis") {
  const auto inst = make_instance("n1", "One day Jerry wanted to paint his barn .",
                                  {"He painted the barn ."});
  const auto hyp = normalize(inst, default_lexicons());
  CHECK(hyp.text() == "Jerry painted his barn");
  CHECK(hyp.subject_lemma == "Jerry");
}

TEST_CASE("pronominal subject is replaced by the earliest non-pronoun mention") {
  auto inst = make_instance("n2", "Before Lenin died , he wished to be buried beside the church .",
                            {"His body was preserved ."});
  inst.desire_subject = MentionSpan{0, 4, 5};  // "he"
  inst.coref_chains.push_back(
      {MentionSpan{0, 1, 2}, MentionSpan{0, 4, 5}, MentionSpan{1, 0, 1}});
  validate_instance(inst);
  const auto hyp = normalize(inst, default_lexicons());
  CHECK(hyp.text() == "Lenin buried beside the church");

  // without a non-pronominal mention the pronoun stays
  auto keep = make_instance("n3", "He hoped to fix the fence .", {"He fixed the fence ."});
  keep.coref_chains.push_back({MentionSpan{0, 0, 1}, MentionSpan{1, 0, 1}});
  validate_instance(keep);
  CHECK(normalize(keep, default_lexicons()).text() == "He fixed the fence");
}

TEST_CASE("sentence-initial subject removes nothing") {
  const auto inst = make_instance("n4", "Greg wanted to win the race .",
                                  {"He won the race ."});
  CHECK(normalize(inst, default_lexicons()).text() == "Greg won the race");
}

TEST_CASE("auxiliary before the desire verb is dropped") {
  const auto inst = make_instance("n5", "Maya had hoped to win the prize .",
                                  {"She won the prize ."});
  CHECK(normalize(inst, default_lexicons()).text() == "Maya won the prize");
}

TEST_CASE("hypothesis never contains a desire lemma") {
  SynthConfig cfg;
  cfg.count = 200;
  cfg.rule = LabelRule::Mixed;
  cfg.seed = 5;
  const auto corpus = generate(cfg);
  for (const auto& inst : corpus) {
    const auto hyp = normalize(inst, default_lexicons());
    for (const HypToken& t : hyp.tokens) {
      CHECK(t.lemma != "want");
      CHECK(t.lemma != "wish");
      CHECK(t.lemma != "hope");
    }
  }
}

TEST_CASE("focal word is the past-tensed clausal complement") {
  const Lexicons& lex = default_lexicons();
  const auto help = make_instance("f1", "Omar wanted to help the neighbors .",
                                  {"He helped the neighbors ."});
  const auto fw = focal_words(help, lex);
  REQUIRE(fw.size() == 1);
  CHECK(fw[0].form == "helped");
  CHECK(fw[0].lemma == "help");
  CHECK(fw[0].pos == Pos::Verb);

  auto buried = make_instance("f2", "Before Lenin died , he wished to be buried beside the church .",
                              {"His body was preserved ."});
  buried.desire_subject = MentionSpan{0, 4, 5};
  const auto fb = focal_words(buried, lex);
  REQUIRE(fb.size() == 1);
  CHECK(fb[0].form == "buried");

  const auto none = make_instance("f3", "Lily wanted it .", {"She was happy ."});
  CHECK(focal_words(none, lex).empty());
}

TEST_CASE("focal verb forms map back through the past-tense rule") {
  SynthConfig cfg;
  cfg.count = 150;
  cfg.rule = LabelRule::FocalPresence;
  cfg.seed = 9;
  const auto corpus = generate(cfg);
  const Lexicons& lex = default_lexicons();
  for (const auto& inst : corpus) {
    for (const FocalWord& fw : focal_words(inst, lex)) {
      if (fw.pos == Pos::Verb) CHECK(fw.form == lex.past_of(fw.lemma));
    }
  }
}

TEST_CASE("intended action is the first verb after the desire verb") {
  const auto help = make_instance("i1", "Omar wanted to help the neighbors .",
                                  {"He helped the neighbors ."});
  CHECK(intended_action(help) == std::optional<std::string>("help"));

  // rule applied to the tokenized sentence: "be" is an auxiliary, so the
  // first verb-tagged token is "buried", whose lemma is the value
  auto buried = make_instance("i2", "Before Lenin died , he wished to be buried beside the church .",
                              {"His body was preserved ."});
  buried.desire_subject = MentionSpan{0, 4, 5};
  CHECK(intended_action(buried) == std::optional<std::string>("bury"));

  const auto none = make_instance("i3", "Lily wanted it .", {"She was happy ."});
  CHECK_FALSE(intended_action(none).has_value());
}

TEST_CASE("normalize is deterministic") {
  const auto inst = make_instance("d1", "One day Jerry wanted to paint his barn .",
                                  {"He painted the barn ."});
  const auto a = normalize(inst, default_lexicons());
  const auto b = normalize(inst, default_lexicons());
  CHECK(a.text() == b.text());
  CHECK(a.focal_words.size() == b.focal_words.size());
  CHECK(a.intended_action == b.intended_action);
}

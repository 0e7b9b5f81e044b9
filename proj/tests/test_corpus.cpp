#include <filesystem>

#include "doctest.h"
#include "helpers.hpp"

#include "desirefill/corpus.hpp"
#include "desirefill/lexicons.hpp"
#include "desirefill/synth.hpp"

using namespace desirefill;
using desirefill::testing::default_lexicons;
using desirefill::testing::make_instance;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("minimal corpus round-trips") {
  auto inst = make_instance("t1", "Jerry wanted to paint his barn .",
                            {"He painted the barn .", "He was happy ."}, true);
  inst.coref_chains.push_back({MentionSpan{0, 0, 1}, MentionSpan{1, 0, 1}, MentionSpan{2, 0, 1}});
  validate_instance(inst);

  const auto path = temp_file("desirefill_corpus_roundtrip.json");
  save_corpus(path, {inst});
  const auto loaded = load_corpus(path);
  REQUIRE(loaded.size() == 1);
  CHECK(loaded[0].evidences.size() == 2);
  CHECK(loaded[0].label == true);
  CHECK(loaded[0].desire_expression.tokens[3].lemma == "want");

  // structural equality via deterministic serialization
  CHECK(corpus_to_json_string(loaded) == corpus_to_json_string({inst}));

  // loader purity: same bytes in, same bytes out
  const auto again = load_corpus(path);
  CHECK(corpus_to_json_string(again) == corpus_to_json_string(loaded));
  std::filesystem::remove(path);
}

TEST_CASE("desire verb lemma outside the closed set is rejected") {
  auto inst = make_instance("t2", "Jerry wanted to paint his barn .",
                            {"He painted the barn ."});
  inst.desire_expression.tokens[3].lemma = "like";
  CHECK_THROWS_WITH_AS(validate_instance(inst),
                       doctest::Contains("'like' not in {want, wish, hope}"), DataError);
}

TEST_CASE("evidence count beyond five is rejected") {
  std::vector<std::string> six(6, "He painted the barn .");
  CHECK_THROWS_WITH_AS(make_instance("t3", "Jerry wanted to paint his barn .", six),
                       doctest::Contains("evidence count exceeds 5"), DataError);
}

TEST_CASE("zero evidences are rejected at load") {
  CHECK_THROWS_AS(make_instance("t4", "Jerry wanted to paint his barn .", {}), DataError);
}

TEST_CASE("coref mention outside its sentence is rejected") {
  auto inst = make_instance("t5", "Jerry wanted to paint his barn .",
                            {"He painted the barn ."});
  inst.coref_chains.push_back({MentionSpan{1, 0, 99}});
  CHECK_THROWS_WITH_AS(validate_instance(inst), doctest::Contains("sentence 1"), DataError);
}

TEST_CASE("subject must live in sentence zero") {
  auto inst = make_instance("t6", "Jerry wanted to paint his barn .",
                            {"He painted the barn ."});
  inst.desire_subject.sentence_id = 1;
  CHECK_THROWS_AS(validate_instance(inst), DataError);
}

TEST_CASE("shipped lexicons load with the documented contents") {
  const Lexicons& lex = default_lexicons();
  CHECK(std::count(lex.dissenting.begin(), lex.dissenting.end(), "but") == 1);
  CHECK(std::count(lex.dissenting.begin(), lex.dissenting.end(), "however") == 1);
  CHECK(std::count(lex.conforming.begin(), lex.conforming.end(), "hence") == 1);
  CHECK(std::count(lex.conforming.begin(), lex.conforming.end(), "so") == 1);
  CHECK(lex.connotation_of("help") == Polarity::Positive);
  CHECK(lex.connotation_of("fail") == Polarity::Negative);
  CHECK(lex.connotation_of("nonexistent-lemma") == Polarity::Neutral);
  CHECK(lex.synonyms_of("help", Pos::Verb)->count("assist") == 1);
  CHECK(lex.antonyms_of("win", Pos::Verb)->count("lose") == 1);
}

TEST_CASE("lexicon directory problems are reported precisely") {
  namespace fs = std::filesystem;
  const fs::path dir = temp_file("desirefill_lexicons");
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& content) {
    std::ofstream out(dir / name);
    out << content;
  };
  write("connotation.tsv", "help\tpositive\n");
  write("synonyms.tsv", "help\tverb\tassist\n");
  write("antonyms.tsv", "win\tverb\tlose\n");
  write("conforming.txt", "hence\nso\n");
  write("dissenting.txt", "but\nhowever\n");
  write("past_tense.tsv", "go\twent\n");

  SUBCASE("well-formed directory loads") {
    const Lexicons lex = load_lexicons(dir);
    CHECK(lex.past_of("go") == "went");
  }
  SUBCASE("missing file") {
    fs::remove(dir / "antonyms.tsv");
    CHECK_THROWS_WITH_AS(load_lexicons(dir), doctest::Contains("antonyms.tsv"), DataError);
  }
  SUBCASE("empty connotation file is legal") {
    write("connotation.tsv", "\n");
    const Lexicons lex = load_lexicons(dir);
    CHECK(lex.connotation.empty());
  }
  SUBCASE("phrase in both lists violates disjointness") {
    write("dissenting.txt", "but\nhence\n");
    CHECK_THROWS_WITH_AS(load_lexicons(dir), doctest::Contains("hence"), DataError);
  }
  SUBCASE("malformed line reports the line number") {
    write("connotation.tsv", "help\tpositive\nbroken-line\n");
    CHECK_THROWS_WITH_AS(load_lexicons(dir), doctest::Contains("connotation.tsv:2"),
                         DataError);
  }
  SUBCASE("duplicate keys are rejected") {
    write("connotation.tsv", "help\tpositive\nhelp\tnegative\n");
    CHECK_THROWS_WITH_AS(load_lexicons(dir), doctest::Contains("duplicate"), DataError);
  }
  fs::remove_all(dir);
}

TEST_CASE("past tense table and fallback rule") {
  const Lexicons& lex = default_lexicons();
  CHECK(lex.past_of("be") == "was");
  CHECK(lex.past_of("go") == "went");
  CHECK(lex.past_of("win") == "won");
  CHECK(lex.past_of("bury") == "buried");
  CHECK(lex.past_of("paint") == "painted");   // +ed
  CHECK(lex.past_of("bake") == "baked");      // e -> d
  CHECK(lex.past_of("try") == "tried");       // consonant + y -> ied
  CHECK(lex.past_of("play") == "played");     // vowel + y -> +ed
  CHECK(lex.past_of("plan") == "planned");    // doubling
  CHECK(lex.past_of("stop") == "stopped");
  CHECK(lex.past_of("clean") == "cleaned");   // two vowels: no doubling
  CHECK(lex.past_of("visit") == "visited");   // two syllables: no doubling
  CHECK(lex.past_of("fix") == "fixed");       // x never doubles
}

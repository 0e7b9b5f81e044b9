#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "desirefill/annotator.hpp"
#include "desirefill/corpus.hpp"
#include "desirefill/lexicons.hpp"

namespace desirefill::testing {

inline const Lexicons& default_lexicons() {
  static const Lexicons lex = load_lexicons(DESIREFILL_LEXICON_DIR);
  return lex;
}

inline std::filesystem::path test_data(const std::string& name) {
  return std::filesystem::path(DESIREFILL_TEST_DATA_DIR) / name;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Builds an instance from raw sentence text via the rule annotator. The
// desire subject defaults to the first noun token; the desire verb to the
// first want/wish/hope lemma.
inline DesireInstance make_instance(const std::string& id,
                                    const std::string& desire_text,
                                    const std::vector<std::string>& evidence_texts,
                                    std::optional<bool> label = std::nullopt) {
  DesireInstance inst;
  inst.id = id;
  inst.desire_expression = annotate(desire_text);
  for (const std::string& t : evidence_texts) {
    inst.evidences.push_back(annotate(t));
  }
  inst.label = label;
  inst.desire_verb_token = -1;
  int subject = -1;
  for (const Token& t : inst.desire_expression.tokens) {
    if (subject < 0 && (t.pos == Pos::Noun || t.pos == Pos::Pron)) subject = t.index;
    if (inst.desire_verb_token < 0 &&
        (t.lemma == "want" || t.lemma == "wish" || t.lemma == "hope")) {
      inst.desire_verb_token = t.index;
    }
  }
  inst.desire_subject = MentionSpan{0, subject, subject + 1};
  validate_instance(inst);
  return inst;
}

}  // namespace desirefill::testing

#pragma once

#include <map>
#include <set>
#include <string>

#include "desirefill/corpus.hpp"

namespace desirefill {

// Deterministic rule annotator over a closed vocabulary. It exists so the
// synthetic generator and the test corpora never need an external NLP stack;
// text outside the vocabulary is rejected rather than mis-annotated.
struct RuleGrammar {
  struct Entry {
    std::string lemma;
    Pos pos = Pos::Other;
  };

  // Surface form -> lemma/pos. Name entries keep their capitalization; all
  // other entries are lowercase and matched case-insensitively.
  std::map<std::string, Entry> lexicon;

  // Closed word classes driving the arc rules.
  std::set<std::string> be_auxiliaries;    // passive / predicative-adjective cue
  std::set<std::string> auxiliaries;       // includes be_auxiliaries
  std::set<std::string> negators;          // "not", "never"
  std::set<std::string> prepositions;
  std::set<std::string> determiners;
  std::set<std::string> possessive_pronouns;
  std::set<std::string> nominative_pronouns;
  std::set<std::string> conjunctions;
  std::set<std::string> desire_lemmas;     // want, wish, hope

  static const RuleGrammar& builtin();
};

// Tokenizes on single spaces and applies the grammar's arc rules. Pure:
// identical text yields identical structure. Unknown tokens raise DataError.
AnnotatedSentence annotate(const std::string& text,
                           const RuleGrammar& grammar = RuleGrammar::builtin());

}  // namespace desirefill

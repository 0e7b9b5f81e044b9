#pragma once

#include <optional>
#include <string>
#include <vector>

#include "desirefill/corpus.hpp"
#include "desirefill/lexicons.hpp"

namespace desirefill {

struct HypToken {
  std::string form;   // surface as it appears in the hypothesis
  std::string lemma;
  Pos pos = Pos::Other;
};

struct FocalWord {
  std::string form;   // past-tense form for verb complements, surface otherwise
  std::string lemma;
  Pos pos = Pos::Other;
};

struct NormalizedHypothesis {
  std::vector<HypToken> tokens;  // word tokens only, desire verb removed
  std::string subject_lemma;
  std::vector<FocalWord> focal_words;
  std::optional<std::string> intended_action;  // verb lemma

  std::string text() const;  // tokens joined by single spaces
};

// Rewrites the desire expression into an entailment hypothesis:
//   1. a pronominal desire subject is replaced by the earliest
//      non-pronominal mention of its coreference chain, if any;
//   2. everything before the desire subject is dropped;
//   3. the desire-verb clause is dropped (the desire verb, auxiliaries
//      directly before it, and the particle/auxiliary run between it and its
//      complement) and the succeeding verb is converted to past tense.
// Punctuation tokens never appear in the hypothesis.
NormalizedHypothesis normalize(const DesireInstance& instance, const Lexicons& lex);

// The clausal complement(s) of the desire verb; verb complements are returned
// in past-tense form. Empty when the desire verb has no complement arc.
std::vector<FocalWord> focal_words(const DesireInstance& instance, const Lexicons& lex);

// Lemma of the first verb-tagged token after the desire verb, if any.
std::optional<std::string> intended_action(const DesireInstance& instance);

}  // namespace desirefill

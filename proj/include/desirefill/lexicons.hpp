#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "desirefill/common.hpp"

namespace desirefill {

enum class Polarity { Positive, Negative, Neutral };

Polarity polarity_from_string(const std::string& s);
std::string to_string(Polarity p);

inline Polarity flip(Polarity p) {
  if (p == Polarity::Positive) return Polarity::Negative;
  if (p == Polarity::Negative) return Polarity::Positive;
  return Polarity::Neutral;
}

struct Lexicons {
  std::map<std::string, Polarity> connotation;
  std::map<std::pair<std::string, Pos>, std::set<std::string>> synonyms;
  std::map<std::pair<std::string, Pos>, std::set<std::string>> antonyms;
  // Lowercased phrases, longest-prefix matched at the start of an evidence.
  std::vector<std::string> conforming;
  std::vector<std::string> dissenting;
  std::map<std::string, std::string> past_tense;

  Polarity connotation_of(const std::string& lemma) const {
    auto it = connotation.find(lemma);
    return it == connotation.end() ? Polarity::Neutral : it->second;
  }

  const std::set<std::string>* synonyms_of(const std::string& lemma, Pos pos) const {
    auto it = synonyms.find({lemma, pos});
    return it == synonyms.end() ? nullptr : &it->second;
  }

  const std::set<std::string>* antonyms_of(const std::string& lemma, Pos pos) const {
    auto it = antonyms.find({lemma, pos});
    return it == antonyms.end() ? nullptr : &it->second;
  }

  // Irregular table lookup with a suffix-rule fallback:
  // final e -> +d, consonant+y -> ied, single-syllable CVC -> doubled
  // final consonant, otherwise +ed.
  std::string past_of(const std::string& base_verb) const;
};

// Reads the six lexicon files from a directory: connotation.tsv,
// synonyms.tsv, antonyms.tsv, conforming.txt, dissenting.txt,
// past_tense.tsv. Malformed lines are reported as file:line. The conforming
// and dissenting phrase lists must be disjoint.
Lexicons load_lexicons(const std::filesystem::path& dir);

}  // namespace desirefill

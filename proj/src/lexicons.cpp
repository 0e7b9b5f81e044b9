#include "desirefill/lexicons.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>

namespace desirefill {

Polarity polarity_from_string(const std::string& s) {
  if (s == "positive") return Polarity::Positive;
  if (s == "negative") return Polarity::Negative;
  if (s == "neutral") return Polarity::Neutral;
  throw DataError("unknown polarity '" + s + "'");
}

std::string to_string(Polarity p) {
  switch (p) {
    case Polarity::Positive: return "positive";
    case Polarity::Negative: return "negative";
    case Polarity::Neutral: return "neutral";
  }
  return "neutral";
}

namespace {

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// True for words shaped consonant* single-vowel single-final-consonant, where
// the final consonant doubles: stop -> stopped, but clean -> cleaned.
bool doubles_final_consonant(const std::string& w) {
  if (w.size() < 2) return false;
  const char last = w.back();
  if (is_vowel(last) || last == 'w' || last == 'x' || last == 'y') return false;
  std::size_t i = 0;
  while (i < w.size() && !is_vowel(w[i])) ++i;
  return i + 1 == w.size() - 1 && i > 0;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t p = s.find(sep, start);
    if (p == std::string::npos) {
      parts.push_back(s.substr(start));
      break;
    }
    parts.push_back(s.substr(start, p - start));
    start = p + 1;
  }
  return parts;
}

// Reads nonblank lines, reporting the 1-based line number to the callback.
void for_each_line(const std::filesystem::path& file,
                   const std::function<void(int, const std::string&)>& fn) {
  std::ifstream in(file);
  if (!in) throw DataError("missing lexicon file " + file.string());
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty()) continue;
    fn(lineno, t);
  }
}

void load_word_pos_list(const std::filesystem::path& file,
                        std::map<std::pair<std::string, Pos>, std::set<std::string>>& out) {
  for_each_line(file, [&](int lineno, const std::string& line) {
    auto cols = split(line, '\t');
    if (cols.size() != 3) {
      throw DataError(file.filename().string() + ":" + std::to_string(lineno) +
                      ": expected 'lemma<TAB>pos<TAB>comma-list'");
    }
    Pos pos;
    try {
      pos = pos_from_string(trim(cols[1]));
    } catch (const DataError& e) {
      throw DataError(file.filename().string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
    std::pair<std::string, Pos> key{trim(cols[0]), pos};
    if (out.count(key)) {
      throw DataError(file.filename().string() + ":" + std::to_string(lineno) +
                      ": duplicate key '" + key.first + "'");
    }
    std::set<std::string> values;
    for (const std::string& v : split(cols[2], ',')) {
      std::string w = trim(v);
      if (!w.empty()) values.insert(w);
    }
    out.emplace(std::move(key), std::move(values));
  });
}

std::vector<std::string> load_phrase_list(const std::filesystem::path& file) {
  std::vector<std::string> phrases;
  std::set<std::string> seen;
  for_each_line(file, [&](int lineno, const std::string& line) {
    std::string phrase = lower(trim(line));
    if (!seen.insert(phrase).second) {
      throw DataError(file.filename().string() + ":" + std::to_string(lineno) +
                      ": duplicate phrase '" + phrase + "'");
    }
    phrases.push_back(std::move(phrase));
  });
  return phrases;
}

}  // namespace

std::string Lexicons::past_of(const std::string& base_verb) const {
  auto it = past_tense.find(base_verb);
  if (it != past_tense.end()) return it->second;
  if (base_verb.empty()) return base_verb;
  const std::string& w = base_verb;
  if (w.back() == 'e') return w + "d";
  if (w.size() >= 2 && w.back() == 'y' && !is_vowel(w[w.size() - 2])) {
    return w.substr(0, w.size() - 1) + "ied";
  }
  if (doubles_final_consonant(w)) return w + w.back() + "ed";
  return w + "ed";
}

Lexicons load_lexicons(const std::filesystem::path& dir) {
  Lexicons lex;

  for_each_line(dir / "connotation.tsv", [&](int lineno, const std::string& line) {
    auto cols = split(line, '\t');
    if (cols.size() != 2) {
      throw DataError("connotation.tsv:" + std::to_string(lineno) +
                      ": expected 'lemma<TAB>polarity'");
    }
    std::string lemma = trim(cols[0]);
    if (lex.connotation.count(lemma)) {
      throw DataError("connotation.tsv:" + std::to_string(lineno) +
                      ": duplicate lemma '" + lemma + "'");
    }
    try {
      lex.connotation[lemma] = polarity_from_string(trim(cols[1]));
    } catch (const DataError& e) {
      throw DataError("connotation.tsv:" + std::to_string(lineno) + ": " + e.what());
    }
  });

  load_word_pos_list(dir / "synonyms.tsv", lex.synonyms);
  load_word_pos_list(dir / "antonyms.tsv", lex.antonyms);
  lex.conforming = load_phrase_list(dir / "conforming.txt");
  lex.dissenting = load_phrase_list(dir / "dissenting.txt");

  std::set<std::string> conf(lex.conforming.begin(), lex.conforming.end());
  for (const std::string& p : lex.dissenting) {
    if (conf.count(p)) {
      throw DataError("phrase '" + p + "' appears in both conforming.txt and dissenting.txt");
    }
  }

  for_each_line(dir / "past_tense.tsv", [&](int lineno, const std::string& line) {
    auto cols = split(line, '\t');
    if (cols.size() != 2) {
      throw DataError("past_tense.tsv:" + std::to_string(lineno) +
                      ": expected 'base<TAB>past'");
    }
    std::string base = trim(cols[0]);
    if (lex.past_tense.count(base)) {
      throw DataError("past_tense.tsv:" + std::to_string(lineno) +
                      ": duplicate base verb '" + base + "'");
    }
    lex.past_tense[base] = trim(cols[1]);
  });

  return lex;
}

}  // namespace desirefill

#include "desirefill/annotator.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace desirefill {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<std::string> whitespace_split(const std::string& text) {
  std::vector<std::string> parts;
  std::istringstream in(text);
  std::string w;
  while (in >> w) parts.push_back(w);
  return parts;
}

const RuleGrammar::Entry& lookup(const RuleGrammar& g, const std::string& raw) {
  auto it = g.lexicon.find(raw);
  if (it != g.lexicon.end()) return it->second;
  it = g.lexicon.find(lower(raw));
  if (it != g.lexicon.end()) return it->second;
  throw DataError("annotator: token '" + raw + "' outside the closed vocabulary");
}

bool is_punct(const std::string& s) {
  return !s.empty() && s.find_first_not_of(".,!?;:") == std::string::npos;
}

struct Analyzer {
  const RuleGrammar& g;
  AnnotatedSentence& s;

  const Token& tok(int i) const { return s.tokens[i]; }
  int n() const { return s.size(); }

  bool is_aux(int i) const { return g.auxiliaries.count(lower(tok(i).surface)) > 0; }
  bool is_be(int i) const { return g.be_auxiliaries.count(lower(tok(i).surface)) > 0; }
  bool is_neg(int i) const { return g.negators.count(lower(tok(i).surface)) > 0; }
  bool is_det(int i) const { return g.determiners.count(lower(tok(i).surface)) > 0; }
  bool is_prep(int i) const { return g.prepositions.count(lower(tok(i).surface)) > 0; }
  bool is_conj(int i) const { return g.conjunctions.count(lower(tok(i).surface)) > 0; }
  bool is_possessive(int i) const {
    const std::string w = lower(tok(i).surface);
    if (g.possessive_pronouns.count(w)) return true;
    // "her" reads as a possessive only when a noun follows directly.
    return w == "her" && i + 1 < n() && tok(i + 1).pos == Pos::Noun;
  }
  bool is_nominative(int i) const {
    return tok(i).pos == Pos::Pron && g.nominative_pronouns.count(lower(tok(i).surface)) > 0;
  }
  bool is_nominal(int i) const {
    return tok(i).pos == Pos::Noun || (tok(i).pos == Pos::Pron && !is_possessive(i));
  }

  void add_arc(int head, int dep, Rel rel) { s.arcs.push_back(Arc{head, dep, rel}); }

  void mark_negation() {
    for (int i = 0; i < n(); ++i) {
      if (!is_neg(i)) continue;
      for (int j = i + 1; j < n(); ++j) {
        if (tok(j).pos == Pos::Verb || tok(j).pos == Pos::Adj) {
          add_arc(j, i, Rel::Negation);
          s.tokens[j].negated = true;
          break;
        }
      }
    }
  }

  // Scans left of `v` for the syntactic subject; falls back to the previous
  // verb's subject when only conjunction-like material sits between them.
  int find_subject(int v) const {
    for (int i = v - 1; i >= 0; --i) {
      if (is_nominal(i) && !is_possessive(i)) return i;
      if (tok(i).pos == Pos::Verb) {
        bool bridge = true;
        for (int b = i + 1; b < v; ++b) {
          const std::string w = lower(tok(b).surface);
          if (tok(b).pos == Pos::Adv || is_conj(b) || is_aux(b) || is_neg(b) ||
              w == "to" || w == ",") {
            continue;
          }
          bridge = false;
          break;
        }
        if (!bridge) return -1;
        for (const Arc& a : s.arcs) {
          if (a.head == i && (a.rel == Rel::Subject || a.rel == Rel::PassiveSubject)) {
            return a.dep;
          }
        }
        return -1;
      }
    }
    return -1;
  }

  // True when a be-auxiliary sits directly left of the verb (adverbs and
  // negators may intervene): "was thanked", "was not rewarded".
  bool is_passive(int v) const {
    int i = v - 1;
    while (i >= 0 && (tok(i).pos == Pos::Adv || is_neg(i))) --i;
    return i >= 0 && is_be(i) && tok(i).pos == Pos::Other;
  }

  void attach_subjects() {
    for (int v = 0; v < n(); ++v) {
      if (tok(v).pos != Pos::Verb) continue;
      const int subj = find_subject(v);
      if (subj < 0) continue;
      add_arc(v, subj, is_passive(v) ? Rel::PassiveSubject : Rel::Subject);
    }
  }

  void attach_objects() {
    for (int v = 0; v < n(); ++v) {
      if (tok(v).pos != Pos::Verb || is_passive(v)) continue;
      int i = v + 1;
      while (i < n() && (tok(i).pos == Pos::Adv || is_neg(i))) ++i;
      if (i < n() && is_prep(i)) continue;  // intransitive + PP
      for (; i < n(); ++i) {
        if (is_punct(tok(i).surface) || tok(i).pos == Pos::Verb || is_prep(i) ||
            is_conj(i) || is_nominative(i)) {
          break;
        }
        if (is_nominal(i)) {
          add_arc(v, i, Rel::Object);
          break;
        }
      }
    }
  }

  // "wanted to <complement>": the complement is the first verb after the
  // particle run; with no verb there, the head of the copular complement
  // ("to be a doctor" -> doctor / "to be happy" -> happy).
  void attach_desire_complements() {
    for (int v = 0; v < n(); ++v) {
      if (tok(v).pos != Pos::Verb || !g.desire_lemmas.count(tok(v).lemma)) continue;
      int i = v + 1;
      if (i >= n() || lower(tok(i).surface) != "to") continue;
      ++i;
      while (i < n() && is_aux(i)) ++i;
      int fallback = -1;
      for (int j = i; j < n(); ++j) {
        if (is_punct(tok(j).surface)) break;
        if (tok(j).pos == Pos::Verb) {
          add_arc(v, j, Rel::ClausalComplement);
          fallback = -2;
          break;
        }
        if (fallback == -1 && (tok(j).pos == Pos::Adj || tok(j).pos == Pos::Noun)) {
          fallback = j;
        }
      }
      if (fallback >= 0) add_arc(v, fallback, Rel::ClausalComplement);
    }
  }

  void attach_adjectives() {
    for (int a = 0; a < n(); ++a) {
      if (tok(a).pos != Pos::Adj) continue;
      // attributive: adjective directly before the noun it modifies
      if (a + 1 < n() && tok(a + 1).pos == Pos::Noun) {
        add_arc(a + 1, a, Rel::AdjectivalModifier);
        continue;
      }
      // predicative: <nominal> <be> (adv|neg)* <adj>
      int i = a - 1;
      while (i >= 0 && (tok(i).pos == Pos::Adv || is_neg(i))) --i;
      if (i < 0 || !is_be(i) || tok(i).pos != Pos::Other) continue;
      for (int sdx = i - 1; sdx >= 0; --sdx) {
        if (is_nominal(sdx) && !is_possessive(sdx)) {
          add_arc(a, sdx, Rel::AdjectivalModifier);
          break;
        }
        if (tok(sdx).pos == Pos::Verb) break;
      }
    }
  }
};

}  // namespace

AnnotatedSentence annotate(const std::string& text, const RuleGrammar& grammar) {
  AnnotatedSentence s;
  s.text = text;
  const auto raw = whitespace_split(text);
  if (raw.empty()) throw DataError("annotator: empty sentence");
  int idx = 0;
  for (const std::string& w : raw) {
    const RuleGrammar::Entry& e = lookup(grammar, w);
    s.tokens.push_back(Token{w, e.lemma, e.pos, idx++, false});
  }

  Analyzer an{grammar, s};
  an.mark_negation();
  an.attach_subjects();
  an.attach_objects();
  an.attach_desire_complements();
  an.attach_adjectives();
  return s;
}

}  // namespace desirefill

#include "desirefill/normalize.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace desirefill {

namespace {

const std::set<std::string>& aux_surfaces() {
  static const std::set<std::string> kAux = {
      "have", "has", "had", "do",  "does", "did",  "will",  "would",
      "shall", "should", "may", "might", "must", "can", "could", "am",
      "is",   "are", "was", "were", "be",  "been", "being"};
  return kAux;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

bool is_aux_surface(const Token& t) { return aux_surfaces().count(lower(t.surface)) > 0; }

bool is_punct(const std::string& s) {
  return !s.empty() && s.find_first_not_of(".,!?;:\"'") == std::string::npos;
}

bool is_desire_lemma(const std::string& lemma) {
  return lemma == "want" || lemma == "wish" || lemma == "hope";
}

bool span_is_pronominal(const AnnotatedSentence& s, const MentionSpan& m) {
  for (int i = m.start; i < m.end; ++i) {
    if (s.tokens[i].pos != Pos::Pron) return false;
  }
  return true;
}

bool spans_overlap(const MentionSpan& a, const MentionSpan& b) {
  return a.sentence_id == b.sentence_id && a.start < b.end && b.start < a.end;
}

// Earliest (reading order) non-pronominal mention of the chain containing the
// subject, or nullptr when every mention is a pronoun.
const MentionSpan* substitution_mention(const DesireInstance& inst) {
  const std::vector<MentionSpan>* chain = nullptr;
  for (const auto& c : inst.coref_chains) {
    for (const MentionSpan& m : c) {
      if (spans_overlap(m, inst.desire_subject)) {
        chain = &c;
        break;
      }
    }
    if (chain) break;
  }
  if (!chain) return nullptr;
  const MentionSpan* best = nullptr;
  for (const MentionSpan& m : *chain) {
    if (span_is_pronominal(inst.sentence(m.sentence_id), m)) continue;
    if (!best || m.sentence_id < best->sentence_id ||
        (m.sentence_id == best->sentence_id && m.start < best->start)) {
      best = &m;
    }
  }
  return best;
}

}  // namespace

std::string NormalizedHypothesis::text() const {
  std::string out;
  for (const HypToken& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t.form;
  }
  return out;
}

std::vector<FocalWord> focal_words(const DesireInstance& instance, const Lexicons& lex) {
  const AnnotatedSentence& d = instance.desire_expression;
  std::vector<FocalWord> out;
  for (const Arc& a : d.arcs) {
    if (a.rel != Rel::ClausalComplement || a.head != instance.desire_verb_token) continue;
    const Token& t = d.tokens[a.dep];
    if (t.pos == Pos::Verb) {
      out.push_back(FocalWord{lex.past_of(t.lemma), t.lemma, Pos::Verb});
    } else {
      out.push_back(FocalWord{t.surface, t.lemma, t.pos});
    }
  }
  return out;
}

std::optional<std::string> intended_action(const DesireInstance& instance) {
  const AnnotatedSentence& d = instance.desire_expression;
  for (int i = instance.desire_verb_token + 1; i < d.size(); ++i) {
    if (d.tokens[i].pos == Pos::Verb) return d.tokens[i].lemma;
  }
  return std::nullopt;
}

NormalizedHypothesis normalize(const DesireInstance& instance, const Lexicons& lex) {
  const AnnotatedSentence& d = instance.desire_expression;
  const int n = d.size();
  const int dv = instance.desire_verb_token;
  const MentionSpan subj = instance.desire_subject;

  std::vector<bool> keep(static_cast<std::size_t>(n), true);
  for (int i = 0; i < subj.start; ++i) keep[i] = false;  // content before the subject
  keep[dv] = false;

  // auxiliaries directly before the desire verb ("had hoped")
  for (int i = dv - 1; i >= subj.end && is_aux_surface(d.tokens[i]); --i) keep[i] = false;
  // the particle/auxiliary run between the desire verb and its complement
  // ("to", "to be")
  int i = dv + 1;
  while (i < n && (lower(d.tokens[i].surface) == "to" || is_aux_surface(d.tokens[i]))) {
    keep[i] = false;
    ++i;
  }

  // the succeeding verb, converted to past tense
  int converted = -1;
  for (int j = dv + 1; j < n; ++j) {
    if (keep[j] && d.tokens[j].pos == Pos::Verb) {
      converted = j;
      break;
    }
  }

  std::vector<Token> replacement;
  if (span_is_pronominal(d, subj)) {
    if (const MentionSpan* m = substitution_mention(instance)) {
      const AnnotatedSentence& ms = instance.sentence(m->sentence_id);
      replacement.assign(ms.tokens.begin() + m->start, ms.tokens.begin() + m->end);
    }
  }

  NormalizedHypothesis hyp;
  auto emit = [&](const Token& t, bool past) {
    if (is_punct(t.surface) || is_desire_lemma(t.lemma)) return;
    HypToken h;
    h.form = past ? lex.past_of(t.lemma) : t.surface;
    h.lemma = t.lemma;
    h.pos = t.pos;
    hyp.tokens.push_back(std::move(h));
  };

  for (int j = 0; j < n; ++j) {
    if (!keep[j]) continue;
    if (!replacement.empty() && j == subj.start) {
      for (const Token& t : replacement) emit(t, false);
      continue;
    }
    if (!replacement.empty() && j > subj.start && j < subj.end) continue;
    emit(d.tokens[j], j == converted);
  }

  std::vector<Token> subj_toks = replacement;
  if (subj_toks.empty()) {
    subj_toks.assign(d.tokens.begin() + subj.start, d.tokens.begin() + subj.end);
  }
  for (auto it = subj_toks.rbegin(); it != subj_toks.rend(); ++it) {
    if (it->pos == Pos::Noun || it->pos == Pos::Pron) {
      hyp.subject_lemma = it->lemma;
      break;
    }
  }
  if (hyp.subject_lemma.empty() && !subj_toks.empty()) {
    hyp.subject_lemma = subj_toks.back().lemma;
  }

  hyp.focal_words = focal_words(instance, lex);
  hyp.intended_action = intended_action(instance);
  return hyp;
}

}  // namespace desirefill

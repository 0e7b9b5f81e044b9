#include "desirefill/features.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <sstream>

namespace desirefill {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

bool is_punct(const std::string& s) {
  return !s.empty() && s.find_first_not_of(".,!?;:\"'") == std::string::npos;
}

// Head token of the desire-subject span: the last nominal token.
const Token& subject_head(const DesireInstance& inst) {
  const AnnotatedSentence& d = inst.desire_expression;
  for (int i = inst.desire_subject.end - 1; i >= inst.desire_subject.start; --i) {
    if (d.tokens[i].pos == Pos::Noun || d.tokens[i].pos == Pos::Pron) return d.tokens[i];
  }
  return d.tokens[inst.desire_subject.end - 1];
}

bool spans_overlap(const MentionSpan& a, const MentionSpan& b) {
  return a.sentence_id == b.sentence_id && a.start < b.end && b.start < a.end;
}

Polarity token_polarity(const Token& t, const Lexicons& lex) {
  Polarity p = lex.connotation_of(t.lemma);
  return t.negated ? flip(p) : p;
}

// Longest phrase (token-boundary prefix) matching the start of the evidence,
// leading punctuation skipped. Returns +1 conforming, -1 dissenting, 0 none.
int match_sustenance(const AnnotatedSentence& ev, const Lexicons& lex) {
  std::string joined;
  for (const Token& t : ev.tokens) {
    if (joined.empty() && is_punct(t.surface)) continue;
    if (!joined.empty()) joined += ' ';
    joined += lower(t.surface);
  }
  std::size_t best_len = 0;
  int best_kind = 0;
  auto consider = [&](const std::vector<std::string>& phrases, int kind) {
    for (const std::string& p : phrases) {
      if (p.size() < best_len || p.empty()) continue;
      if (joined == p || (joined.size() > p.size() && joined.compare(0, p.size(), p) == 0 &&
                          joined[p.size()] == ' ')) {
        best_len = p.size();
        best_kind = kind;
      }
    }
  };
  consider(lex.conforming, +1);
  consider(lex.dissenting, -1);
  return best_kind;
}

}  // namespace

std::vector<MentionSpan> subject_mentions(const DesireInstance& instance,
                                          int sentence_id) {
  std::set<std::pair<int, int>> spans;
  for (const auto& chain : instance.coref_chains) {
    bool has_subject = false;
    for (const MentionSpan& m : chain) {
      if (spans_overlap(m, instance.desire_subject)) {
        has_subject = true;
        break;
      }
    }
    if (!has_subject) continue;
    for (const MentionSpan& m : chain) {
      if (m.sentence_id == sentence_id) spans.emplace(m.start, m.end);
    }
  }

  // Direct lexical matches of the subject head not already covered by a chain.
  const std::string head_lemma = subject_head(instance).lemma;
  const AnnotatedSentence& sent = instance.sentence(sentence_id);
  for (const Token& t : sent.tokens) {
    if (t.lemma != head_lemma) continue;
    bool covered = false;
    for (const auto& [a, b] : spans) {
      if (t.index >= a && t.index < b) {
        covered = true;
        break;
      }
    }
    if (!covered) spans.emplace(t.index, t.index + 1);
  }

  std::vector<MentionSpan> out;
  for (const auto& [a, b] : spans) out.push_back(MentionSpan{sentence_id, a, b});
  return out;
}

InstanceFeatures extract(const DesireInstance& instance,
                         const NormalizedHypothesis& hyp,
                         const Lexicons& lex,
                         const EntailmentJudgment& te) {
  InstanceFeatures feats;
  const AnnotatedSentence& d = instance.desire_expression;

  feats.global.set("F1", te.entailed ? 1.0 : 0.0);
  for (int i = instance.desire_verb_token + 1; i < d.size(); ++i) {
    if (d.tokens[i].lemma == "but") feats.global.set("F2", 1.0);
    if (d.tokens[i].lemma == "so") feats.global.set("F3", 1.0);
  }

  // The intended action's polarity anchors F12/F13; its own negation flag
  // flips it like any other verb.
  Polarity intent_pol = Polarity::Neutral;
  for (int i = instance.desire_verb_token + 1; i < d.size(); ++i) {
    if (d.tokens[i].pos == Pos::Verb) {
      intent_pol = token_polarity(d.tokens[i], lex);
      break;
    }
  }

  for (std::size_t j = 0; j < instance.evidences.size(); ++j) {
    const AnnotatedSentence& ev = instance.evidences[j];
    const int sid = static_cast<int>(j) + 1;
    FeatureVector fv;

    const std::vector<MentionSpan> mentions = subject_mentions(instance, sid);
    std::set<int> mention_tokens;
    for (const MentionSpan& m : mentions) {
      for (int t = m.start; t < m.end; ++t) mention_tokens.insert(t);
    }
    fv.set("F9", static_cast<double>(mentions.size()));

    double f4 = 0, f5 = 0, f6 = 0, f8 = 0;
    for (const Token& t : ev.tokens) {
      for (const FocalWord& fw : hyp.focal_words) {
        if (lower(t.surface) == lower(fw.form)) f4 += 1;
        if (t.lemma == fw.lemma) f8 += 1;
        if (t.pos == fw.pos) {
          const auto* syn = lex.synonyms_of(fw.lemma, fw.pos);
          const auto* ant = lex.antonyms_of(fw.lemma, fw.pos);
          if (syn && syn->count(t.lemma)) f5 += 1;
          if (ant && ant->count(t.lemma)) f6 += 1;
        }
      }
    }
    fv.set("F4", f4);
    fv.set("F5", f5);
    fv.set("F6", f6);
    fv.set("F7", f4 + f5);
    fv.set("F8", f8);

    // adjectives modifying a subject mention; either arc direction carries
    // the adjective
    std::set<int> counted_adj;
    double f10 = 0, f11 = 0;
    for (const Arc& a : ev.arcs) {
      if (a.rel != Rel::AdjectivalModifier) continue;
      int adj = -1, modified = -1;
      if (ev.tokens[a.head].pos == Pos::Adj) {
        adj = a.head;
        modified = a.dep;
      } else if (ev.tokens[a.dep].pos == Pos::Adj) {
        adj = a.dep;
        modified = a.head;
      } else {
        continue;
      }
      if (!mention_tokens.count(modified) || counted_adj.count(adj)) continue;
      counted_adj.insert(adj);
      const Polarity p = token_polarity(ev.tokens[adj], lex);
      if (p == Polarity::Positive) f10 += 1;
      if (p == Polarity::Negative) f11 += 1;
    }
    fv.set("F10", f10);
    fv.set("F11", f11);

    // verbs with the subject as agent (F12/F13) or patient (F14/F15); each
    // verb token counts once per group
    std::set<int> counted_agent, counted_patient;
    double f12 = 0, f13 = 0, f14 = 0, f15 = 0;
    for (const Arc& a : ev.arcs) {
      if (ev.tokens[a.head].pos != Pos::Verb || !mention_tokens.count(a.dep)) continue;
      if (a.rel == Rel::Subject && intent_pol != Polarity::Neutral &&
          !counted_agent.count(a.head)) {
        counted_agent.insert(a.head);
        const Polarity p = token_polarity(ev.tokens[a.head], lex);
        if (p == intent_pol) f12 += 1;
        else if (p != Polarity::Neutral) f13 += 1;
      }
      if ((a.rel == Rel::Object || a.rel == Rel::PassiveSubject) &&
          !counted_patient.count(a.head)) {
        counted_patient.insert(a.head);
        const Polarity p = token_polarity(ev.tokens[a.head], lex);
        if (p == Polarity::Positive) f14 += 1;
        if (p == Polarity::Negative) f15 += 1;
      }
    }
    fv.set("F12", f12);
    fv.set("F13", f13);
    fv.set("F14", f14);
    fv.set("F15", f15);

    const int sus = match_sustenance(ev, lex);
    fv.set("F16", sus > 0 ? 1.0 : 0.0);
    fv.set("F17", sus < 0 ? 1.0 : 0.0);

    feats.per_evidence.push_back(std::move(fv));
  }
  return feats;
}

FeatureVector aggregate(const InstanceFeatures& feats) {
  FeatureVector out = feats.global;
  for (const FeatureVector& fv : feats.per_evidence) {
    for (int fid = 4; fid <= 15; ++fid) {
      out.add(feature_key(fid), fv.get(feature_key(fid)));
    }
  }
  return out;
}

FeatureVector bag_of_words(const DesireInstance& instance) {
  FeatureVector out;
  auto add_sentence = [&](const AnnotatedSentence& s) {
    for (const Token& t : s.tokens) {
      if (is_punct(t.surface)) continue;
      out.add("bow:" + t.lemma, 1.0);
    }
  };
  add_sentence(instance.desire_expression);
  for (const AnnotatedSentence& e : instance.evidences) add_sentence(e);
  return out;
}

std::string dump_features_tsv(const std::vector<DesireInstance>& corpus,
                              const std::vector<InstanceFeatures>& feats) {
  if (corpus.size() != feats.size()) {
    throw std::invalid_argument("corpus/features size mismatch");
  }
  std::ostringstream out;
  auto value = [](double v) -> std::string {
    if (v == std::floor(v) && std::abs(v) < 1e15) {
      return std::to_string(static_cast<long long>(v));
    }
    std::ostringstream s;
    s << v;
    return s.str();
  };
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (int fid = 1; fid <= 3; ++fid) {
      out << corpus[i].id << "\tG\t" << feature_key(fid) << '\t'
          << value(feats[i].global.get(feature_key(fid))) << '\n';
    }
    for (std::size_t j = 0; j < feats[i].per_evidence.size(); ++j) {
      for (int fid = 4; fid <= 17; ++fid) {
        out << corpus[i].id << '\t' << (j + 1) << '\t' << feature_key(fid) << '\t'
            << value(feats[i].per_evidence[j].get(feature_key(fid))) << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace desirefill

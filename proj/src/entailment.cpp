#include "desirefill/entailment.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace desirefill {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

bool content_pos(Pos p) { return p == Pos::Noun || p == Pos::Verb || p == Pos::Adj; }

}  // namespace

bool is_stopword(const std::string& lemma) {
  static const std::set<std::string> kStop = {
      "be", "do", "have", "get", "go", "say", "thing", "one", "time",
  };
  return kStop.count(lemma) > 0;
}

EntailmentJudgment judge(const DesireInstance& instance,
                         const NormalizedHypothesis& hyp,
                         const Lexicons& lex,
                         double threshold) {
  if (threshold <= 0.0 || threshold > 1.0) {
    throw DataError("entailment threshold must be in (0, 1]");
  }

  std::vector<const HypToken*> content;
  for (const HypToken& t : hyp.tokens) {
    if (content_pos(t.pos) && !is_stopword(t.lemma)) content.push_back(&t);
  }

  EntailmentJudgment out;
  for (std::size_t j = 0; j < instance.evidences.size(); ++j) {
    const AnnotatedSentence& ev = instance.evidences[j];
    double cov = 0.0;
    if (!content.empty()) {
      int aligned = 0;
      for (const HypToken* h : content) {
        const std::string form = lower(h->form);
        const std::set<std::string>* syn = lex.synonyms_of(h->lemma, h->pos);
        const std::set<std::string>* ant = lex.antonyms_of(h->lemma, h->pos);
        bool match = false;
        bool blocked = false;
        for (const Token& t : ev.tokens) {
          if (ant && t.pos == h->pos && ant->count(t.lemma)) {
            blocked = true;
            break;
          }
          if (lower(t.surface) == form || t.lemma == h->lemma) {
            match = true;
          } else if (syn && t.pos == h->pos && syn->count(t.lemma)) {
            match = true;
          }
        }
        if (match && !blocked) ++aligned;
      }
      cov = static_cast<double>(aligned) / static_cast<double>(content.size());
    }
    out.per_evidence.emplace_back(static_cast<int>(j) + 1, cov);
    out.coverage = std::max(out.coverage, cov);
  }
  out.entailed = out.coverage >= threshold;
  return out;
}

}  // namespace desirefill

#pragma once

#include <utility>
#include <vector>

#include "desirefill/corpus.hpp"
#include "desirefill/lexicons.hpp"
#include "desirefill/normalize.hpp"

namespace desirefill {

constexpr double kDefaultEntailThreshold = 0.75;

struct EntailmentJudgment {
  bool entailed = false;
  double coverage = 0.0;  // max per-evidence coverage, in [0, 1]
  std::vector<std::pair<int, double>> per_evidence;  // (evidence index, coverage)
};

// Lexical-alignment entailer. A hypothesis content lemma (non-stopword
// noun/verb/adjective) is aligned in an evidence when the evidence contains
// its surface form, its lemma, or a same-POS synonym; a same-POS antonym
// match blocks the lemma for that evidence. Per-evidence coverage is the
// aligned fraction; the instance is entailed when the best evidence reaches
// the threshold.
EntailmentJudgment judge(const DesireInstance& instance,
                         const NormalizedHypothesis& hyp,
                         const Lexicons& lex,
                         double threshold = kDefaultEntailThreshold);

bool is_stopword(const std::string& lemma);

}  // namespace desirefill

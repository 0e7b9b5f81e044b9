#pragma once

#include <optional>
#include <string>
#include <vector>

#include "desirefill/corpus.hpp"
#include "desirefill/entailment.hpp"
#include "desirefill/features.hpp"
#include "desirefill/lexicons.hpp"
#include "desirefill/normalize.hpp"
#include "desirefill/parallel.hpp"

namespace desirefill {

// Everything the models consume for one instance, computed once up front.
struct PreparedInstance {
  std::string id;
  std::optional<bool> label;
  NormalizedHypothesis hyp;
  EntailmentJudgment te;
  InstanceFeatures feats;
  FeatureVector aggregated;  // F1..F15 view used by the flat models
  FeatureVector bow;
};

PreparedInstance prepare_instance(const DesireInstance& instance,
                                  const Lexicons& lex,
                                  double te_threshold);

// Extraction over a corpus is embarrassingly parallel; each instance writes
// its own slot, so serial and parallel runs produce identical vectors.
std::vector<PreparedInstance> prepare_corpus(
    const std::vector<DesireInstance>& corpus,
    const Lexicons& lex,
    double te_threshold,
    Exec exec = Exec::Parallel);

}  // namespace desirefill

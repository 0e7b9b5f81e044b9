#pragma once

#include <string>
#include <vector>

#include "desirefill/corpus.hpp"
#include "desirefill/entailment.hpp"
#include "desirefill/lexicons.hpp"
#include "desirefill/normalize.hpp"

namespace desirefill {

// F1..F3 are per instance, F4..F17 per evidence:
//   F1  entailer prediction                    F10 positive adjectives on mentions
//   F2  "but" after the desire verb            F11 negative adjectives on mentions
//   F3  "so" after the desire verb             F12 agent verbs agreeing with intent
//   F4  focal-word surface count               F13 agent verbs disagreeing with intent
//   F5  same-POS synonym count                 F14 positive verbs with subject patient
//   F6  same-POS antonym count                 F15 negative verbs with subject patient
//   F7  F4 + F5                                F16 starts with a conforming phrase
//   F8  focal-lemma count                      F17 starts with a dissenting phrase
//   F9  subject mentions (direct + coreferent)
struct InstanceFeatures {
  FeatureVector global;                   // F1..F3
  std::vector<FeatureVector> per_evidence;  // F4..F17, one per evidence
};

InstanceFeatures extract(const DesireInstance& instance,
                         const NormalizedHypothesis& hyp,
                         const Lexicons& lex,
                         const EntailmentJudgment& te);

// F1..F3 unchanged plus F4..F15 summed across evidences (F16/F17 excluded);
// this is the feature set shared by the unstructured models and the
// structure-independent part of the chain model.
FeatureVector aggregate(const InstanceFeatures& feats);

// Lemma-count features over all sentences of the instance, keys "bow:<lemma>".
FeatureVector bag_of_words(const DesireInstance& instance);

// Token spans counted as subject mentions in evidence j (1-based sentence id):
// coref-chain mentions of the chain(s) containing the desire subject plus
// direct lexical matches of the subject head lemma not covered by a chain span.
std::vector<MentionSpan> subject_mentions(const DesireInstance& instance,
                                          int sentence_id);

// TSV dump used by the golden tests and the dump-features subcommand. One row
// per feature: instance id, evidence index or "G", feature id, value. All
// features are emitted in canonical order, zeros included.
std::string dump_features_tsv(const std::vector<DesireInstance>& corpus,
                              const std::vector<InstanceFeatures>& feats);

}  // namespace desirefill

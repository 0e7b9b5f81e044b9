#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "desirefill/common.hpp"
#include "desirefill/features.hpp"

namespace desirefill {

// Latent state chain over the evidences of one instance. Every (label f,
// state sequence h) pair is scored by a single linear model over:
//
//   start:h1                 1 for the state of the first evidence
//   c:h:Fk                   per-evidence content value (F4..F15) under state h
//   t:hp:hn                  transition indicator
//   s:hp:hn:Fk               transition weighted by the incoming evidence's
//                            sustenance value (F16/F17)
//   out:f:hlast              label conjoined with the final state
//   og:f:Fk                  label conjoined with the aggregated F1..F15
//
// Numeric contract: a path score is one left-to-right accumulation —
//   acc  = w[start] ; acc += each content term of position 1 in F4..F15 order
//   then per position j = 2..n: acc += transition, += F16 term, += F17 term,
//   += content terms in order; finally acc += out term, += og terms in
//   F1..F15 order. Zero-valued features contribute no term. Viterbi reuses
//   exactly these binary additions, so decoded scores match an exhaustive
//   enumeration bit for bit, with no tolerance.
//
// Ties are broken toward the lexicographically smallest state sequence read
// from the last position backwards, then toward f = false.

struct LsnmHyper {
  int epochs = 20;
  bool average = true;
};

// Enumerates the weight layout for a fixed number of latent states. Indices
// are dense and stable; key_name() gives the serialization key of an index.
class LsnmLayout {
 public:
  explicit LsnmLayout(int num_states);

  int num_states() const { return h_; }
  int size() const { return size_; }

  int start(int h) const;
  int content(int h, int fid) const;              // fid in 4..15
  int transition(int prev, int next) const;
  int sustenance(int prev, int next, int fid) const;  // fid 16 or 17
  int out_state(bool f, int h) const;
  int out_global(bool f, int fid) const;          // fid in 1..15

  std::string key_name(int index) const;
  // Inverse of key_name; throws DataError on malformed or out-of-range keys.
  int index_of(const std::string& key) const;

 private:
  int h_;
  int size_;
};

struct LsnmModel {
  int num_states = 1;
  std::vector<double> weights;  // indexed by LsnmLayout
  LsnmHyper hyper;
  std::uint64_t seed = 0;

  LsnmLayout layout() const { return LsnmLayout(num_states); }
};

struct Decode {
  bool label = false;
  std::vector<int> states;  // one per evidence, values in [0, H)
  double score = 0.0;
};

struct LsnmExample {
  const InstanceFeatures* feats = nullptr;
  bool label = false;
};

// Joint feature map for a fixed assignment; the vector the perceptron update
// works with. Throws on a states/evidences length mismatch.
FeatureVector joint_features(const InstanceFeatures& feats,
                             std::span<const int> states,
                             bool f);

// Recomputes the score of an assignment under the documented accumulation
// contract; Decode::score always equals score_path of the decoded assignment.
double score_path(const LsnmModel& model,
                  const InstanceFeatures& feats,
                  bool f,
                  std::span<const int> states);

// Exact Viterbi decode. With a label supplied the maximization is constrained
// to that label; otherwise it runs jointly over both labels. Chains are at
// most five long, so decoding is always exact. Throws on an empty chain.
Decode viterbi(const LsnmModel& model,
               const InstanceFeatures& feats,
               std::optional<bool> fixed_label = std::nullopt);

// Iterative trainer: per instance, a constrained decode with the gold label
// picks the target structure, an unconstrained decode picks the prediction,
// and the weights move by the feature difference whenever the predicted label
// is wrong. Weights start uniform in [-0.01, 0.01] from the seed; with
// averaging on, the returned weights are the mean over all post-instance
// snapshots. Deterministic given (seed, corpus order, H, hyper).
LsnmModel train_lsnm(const std::vector<LsnmExample>& data,
                     int num_states,
                     const LsnmHyper& hyper,
                     std::uint64_t seed);

Decode predict_lsnm(const LsnmModel& model, const InstanceFeatures& feats);

std::string lsnm_to_json_string(const LsnmModel& model);
LsnmModel lsnm_from_json_string(const std::string& text);

// Per-instance decode dump: id, gold label, predicted label, state sequence,
// score. Used by the predict subcommand.
std::string decode_dump_tsv(const std::vector<std::string>& ids,
                            const std::vector<std::optional<bool>>& gold,
                            const std::vector<Decode>& decodes);

}  // namespace desirefill

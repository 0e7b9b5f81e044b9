#pragma once

// Test-only oracles, kept independent of the implementation paths they check.

#include <array>
#include <limits>
#include <optional>
#include <vector>

#include "desirefill/lsnm.hpp"

namespace desirefill::testing {

// Exhaustive decode: enumerates every (label, state sequence) pair and scores
// each with its own left-to-right accumulation (the documented contract).
// Tie order: higher score, then lexicographically smaller states read from the
// last position backwards, then label false.
inline Decode brute_force_decode(const LsnmModel& model,
                                 const InstanceFeatures& feats,
                                 std::optional<bool> fixed_label) {
  const LsnmLayout L = model.layout();
  const std::vector<double>& w = model.weights;
  const int H = L.num_states();
  const int n = static_cast<int>(feats.per_evidence.size());

  std::vector<std::array<double, 14>> ev(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < 12; ++k) {
      ev[j][static_cast<std::size_t>(k)] = feats.per_evidence[j].get(feature_key(k + 4));
    }
    ev[j][12] = feats.per_evidence[j].get("F16");
    ev[j][13] = feats.per_evidence[j].get("F17");
  }
  const FeatureVector aggv = aggregate(feats);
  std::array<double, 15> agg{};
  for (int k = 0; k < 15; ++k) agg[static_cast<std::size_t>(k)] = aggv.get(feature_key(k + 1));

  auto path_score = [&](bool f, const std::vector<int>& states) {
    double acc = w[L.start(states[0])];
    for (int k = 0; k < 12; ++k) {
      if (ev[0][k] != 0.0) acc += w[L.content(states[0], k + 4)] * ev[0][k];
    }
    for (int j = 1; j < n; ++j) {
      acc += w[L.transition(states[j - 1], states[j])];
      if (ev[j][12] != 0.0) acc += w[L.sustenance(states[j - 1], states[j], 16)] * ev[j][12];
      if (ev[j][13] != 0.0) acc += w[L.sustenance(states[j - 1], states[j], 17)] * ev[j][13];
      for (int k = 0; k < 12; ++k) {
        if (ev[j][k] != 0.0) acc += w[L.content(states[j], k + 4)] * ev[j][k];
      }
    }
    acc += w[L.out_state(f, states[n - 1])];
    for (int k = 0; k < 15; ++k) {
      if (agg[k] != 0.0) acc += w[L.out_global(f, k + 1)] * agg[k];
    }
    return acc;
  };

  // candidate a beats candidate b on equal score when its states are smaller
  // read back-to-front, or equal with label false
  auto prefer = [&](const Decode& a, const Decode& b) {
    if (a.score != b.score) return a.score > b.score;
    for (int j = n - 1; j >= 0; --j) {
      if (a.states[j] != b.states[j]) return a.states[j] < b.states[j];
    }
    return !a.label && b.label;
  };

  Decode best;
  best.score = -std::numeric_limits<double>::infinity();
  std::vector<int> states(static_cast<std::size_t>(n), 0);
  long total = 1;
  for (int j = 0; j < n; ++j) total *= H;
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (int j = 0; j < n; ++j) {
      states[j] = static_cast<int>(c % H);
      c /= H;
    }
    for (bool f : {false, true}) {
      if (fixed_label.has_value() && f != *fixed_label) continue;
      Decode cand{f, states, path_score(f, states)};
      if (best.states.empty() || prefer(cand, best)) best = cand;
    }
  }
  return best;
}

}  // namespace desirefill::testing

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "desirefill/corpus.hpp"

namespace desirefill {

enum class LabelRule { LastStateParity, FocalPresence, Mixed };

LabelRule label_rule_from_string(const std::string& s);
std::string to_string(LabelRule r);

// Controlled corpus generator. Labels follow the configured rule exactly:
//   last-state-parity  fulfilled iff the number of evidences opening with a
//                      dissenting phrase is even (the first evidence never
//                      carries one, so the signal lives in the transitions);
//   focal-presence     fulfilled iff some evidence contains the focal word;
//   mixed              fulfilled iff the focal word is present and the
//                      dissenting count is even.
struct SynthConfig {
  int count = 100;
  std::array<double, 5> length_weights = {0.05, 0.2, 0.3, 0.25, 0.2};  // n = 1..5
  double cue_prob = 0.5;  // probability an eligible evidence opens with a dissenting phrase
  std::uint64_t seed = 0;
  LabelRule rule = LabelRule::LastStateParity;

  void validate() const;  // counts >= 1, probabilities within [0, 1]
};

std::vector<DesireInstance> generate(const SynthConfig& config);

}  // namespace desirefill

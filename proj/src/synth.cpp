#include "desirefill/synth.hpp"

#include <cctype>
#include <random>
#include <sstream>

#include "desirefill/annotator.hpp"

namespace desirefill {

LabelRule label_rule_from_string(const std::string& s) {
  if (s == "last-state-parity") return LabelRule::LastStateParity;
  if (s == "focal-presence") return LabelRule::FocalPresence;
  if (s == "mixed") return LabelRule::Mixed;
  throw DataError("unknown label rule '" + s + "'");
}

std::string to_string(LabelRule r) {
  switch (r) {
    case LabelRule::LastStateParity: return "last-state-parity";
    case LabelRule::FocalPresence: return "focal-presence";
    case LabelRule::Mixed: return "mixed";
  }
  return "last-state-parity";
}

void SynthConfig::validate() const {
  if (count < 1) throw DataError("synthetic corpus count must be >= 1");
  if (cue_prob < 0.0 || cue_prob > 1.0) {
    throw DataError("cue probability must be within [0, 1]");
  }
  double total = 0.0;
  for (double w : length_weights) {
    if (w < 0.0) throw DataError("length weights must be nonnegative");
    total += w;
  }
  if (total <= 0.0) throw DataError("length weights must not all be zero");
}

namespace {

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  std::size_t pick(std::size_t n) { return static_cast<std::size_t>(gen() % n); }
  bool coin(double p) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53 < p;
  }
  template <typename T>
  const T& choose(const std::vector<T>& v) {
    return v[pick(v.size())];
  }
};

struct Person {
  const char* name;
  const char* nom;  // he / she
  const char* acc;  // him / her
  const char* poss; // his / her
};

const std::vector<Person>& people() {
  static const std::vector<Person> kPeople = {
      {"Jerry", "he", "him", "his"},   {"Hassan", "he", "him", "his"},
      {"Greg", "he", "him", "his"},    {"Ben", "he", "him", "his"},
      {"Omar", "he", "him", "his"},    {"Victor", "he", "him", "his"},
      {"Anna", "she", "her", "her"},   {"Maya", "she", "her", "her"},
      {"Lily", "she", "her", "her"},   {"Rosa", "she", "her", "her"},
      {"Tasha", "she", "her", "her"},
  };
  return kPeople;
}

struct Action {
  const char* base;
  const char* past;
  const char* det;
  const char* noun;
};

const std::vector<Action>& desire_actions() {
  static const std::vector<Action> kActions = {
      {"paint", "painted", "the", "barn"},   {"paint", "painted", "the", "fence"},
      {"bake", "baked", "a", "cake"},        {"build", "built", "a", "boat"},
      {"build", "built", "the", "wall"},     {"win", "won", "the", "race"},
      {"win", "won", "the", "prize"},        {"visit", "visited", "the", "farm"},
      {"clean", "cleaned", "the", "house"},  {"fix", "fixed", "the", "car"},
      {"plant", "planted", "the", "garden"}, {"finish", "finished", "the", "book"},
      {"buy", "bought", "a", "dog"},         {"cook", "cooked", "the", "dinner"},
      {"write", "wrote", "a", "letter"},
  };
  return kActions;
}

// Distractor verbs are disjoint from every desire action and from the shipped
// synonym/antonym rows, so a distractor can never satisfy the focal rule.
const std::vector<Action>& distractor_actions() {
  static const std::vector<Action> kActions = {
      {"continue", "continued", "the", "work"},
      {"ask", "asked", "the", "teacher"},
      {"tell", "told", "the", "story"},
      {"study", "studied", "the", "book"},
      {"practice", "practiced", "the", "song"},
      {"prepare", "prepared", "the", "dinner"},
      {"ride", "rode", "the", "boat"},
      {"walk", "walked", "the", "dog"},
  };
  return kActions;
}

const std::vector<std::string>& dissenting_cues() {
  static const std::vector<std::string> kCues = {
      "However", "Instead", "Meanwhile", "Nevertheless", "Still", "On the other hand",
  };
  return kCues;
}

const std::vector<std::string>& conforming_cues() {
  static const std::vector<std::string> kCues = {
      "Then", "Hence", "Consequently", "Overall", "Indeed", "Finally", "As a result",
  };
  return kCues;
}

struct SentencePlan {
  std::vector<std::string> words;
  int subject_token = -1;  // mention of the desire subject, -1 if none

  void push(const std::string& w) { words.push_back(w); }
  std::string text() const {
    std::string out;
    for (const std::string& w : words) {
      if (!out.empty()) out += ' ';
      out += w;
    }
    return out;
  }
};

int prepend_cue(SentencePlan& plan, const std::string& cue) {
  std::istringstream in(cue);
  std::string w;
  int count = 0;
  std::vector<std::string> cue_words;
  while (in >> w) {
    cue_words.push_back(w);
    ++count;
  }
  cue_words.push_back(",");
  plan.words.insert(plan.words.begin(), cue_words.begin(), cue_words.end());
  return count + 1;
}

std::string capitalize(std::string w) {
  if (!w.empty()) w[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(w[0])));
  return w;
}

// "<P> <past> <det> <noun> ."
SentencePlan action_sentence(const Person& p, const Action& a, bool use_name, Rng& rng) {
  SentencePlan plan;
  plan.subject_token = 0;
  plan.push(use_name ? p.name : capitalize(p.nom));
  plan.push(a.past);
  plan.push(a.det);
  plan.push(a.noun);
  if (rng.coin(0.15)) plan.push("again");
  plan.push(".");
  return plan;
}

SentencePlan emotion_sentence(const Person& p, bool positive, bool use_name, Rng& rng) {
  static const std::vector<std::string> kPos = {"happy", "glad", "proud", "cheerful",
                                                "excited"};
  static const std::vector<std::string> kNeg = {"sad", "upset", "angry", "miserable",
                                                "disappointed"};
  SentencePlan plan;
  plan.subject_token = 0;
  plan.push(use_name ? p.name : capitalize(p.nom));
  plan.push("was");
  if (rng.coin(0.15)) plan.push("not");
  plan.push(rng.choose(positive ? kPos : kNeg));
  plan.push(".");
  return plan;
}

SentencePlan patient_sentence(const Person& p, bool positive, Rng& rng) {
  static const std::vector<std::string> kPosV = {"thanked", "praised", "rewarded",
                                                 "hugged"};
  static const std::vector<std::string> kNegV = {"rejected", "refused", "hurt"};
  static const std::vector<std::string> kAgents = {"neighbors", "team", "friends"};
  SentencePlan plan;
  if (rng.coin(0.5)) {
    plan.push("The");
    plan.push(rng.choose(kAgents));
    plan.push(rng.choose(positive ? kPosV : kNegV));
    plan.subject_token = static_cast<int>(plan.words.size());
    plan.push(p.acc);
  } else {
    plan.subject_token = 0;
    plan.push(capitalize(p.nom));
    plan.push("was");
    plan.push(rng.choose(positive ? kPosV : kNegV));
    plan.push("by");
    plan.push("the");
    plan.push(rng.choose(kAgents));
  }
  plan.push(".");
  return plan;
}

}  // namespace

std::vector<DesireInstance> generate(const SynthConfig& config) {
  config.validate();
  Rng rng(config.seed);
  const RuleGrammar& grammar = RuleGrammar::builtin();

  std::vector<DesireInstance> corpus;
  corpus.reserve(static_cast<std::size_t>(config.count));

  for (int idx = 0; idx < config.count; ++idx) {
    const Person& person = rng.choose(people());
    const Action& desire = rng.choose(desire_actions());
    const std::vector<const char*> verbs = {"wanted", "wished", "hoped"};

    // desire expression
    SentencePlan d;
    if (rng.coin(0.25)) {
      d.push("One");
      d.push("day");
    } else if (rng.coin(0.2)) {
      d.push("Last");
      d.push("summer");
    }
    const int name_idx = static_cast<int>(d.words.size());
    d.push(person.name);
    if (rng.coin(0.2)) d.push("really");
    const std::size_t verb_pick = rng.pick(verbs.size());
    const int desire_verb_idx = static_cast<int>(d.words.size());
    d.push(verbs[verb_pick]);
    d.push("to");
    d.push(desire.base);
    const bool possessive_obj = rng.coin(0.25);
    int poss_idx = -1;
    if (possessive_obj) {
      poss_idx = static_cast<int>(d.words.size());
      d.push(person.poss);
    } else {
      d.push(desire.det);
    }
    d.push(desire.noun);
    int tail_pron_idx = -1;
    if (rng.coin(0.12)) {
      d.push("so");
      tail_pron_idx = static_cast<int>(d.words.size());
      d.push(person.nom);
      d.push("smiled");
    } else if (rng.coin(0.1)) {
      d.push("but");
      tail_pron_idx = static_cast<int>(d.words.size());
      d.push(person.nom);
      d.push("was");
      d.push("not");
      d.push("ready");
    }
    d.push(".");

    // evidences
    double total_w = 0.0;
    for (double w : config.length_weights) total_w += w;
    double draw = static_cast<double>(rng.gen() >> 11) * 0x1.0p-53 * total_w;
    int n = 5;
    for (int len = 1; len <= 5; ++len) {
      draw -= config.length_weights[static_cast<std::size_t>(len - 1)];
      if (draw < 0.0) {
        n = len;
        break;
      }
    }

    const bool want_focal =
        config.rule != LabelRule::LastStateParity ? rng.coin(0.5) : false;
    const int focal_slot = want_focal ? static_cast<int>(rng.pick(static_cast<std::size_t>(n))) : -1;

    std::vector<SentencePlan> evidences;
    int dissent_count = 0;
    for (int j = 0; j < n; ++j) {
      const bool use_name = rng.coin(0.3);
      SentencePlan ev;
      if (j == focal_slot) {
        ev = action_sentence(person, desire, use_name, rng);
      } else if (config.rule != LabelRule::LastStateParity && rng.coin(0.25)) {
        ev = rng.coin(0.5) ? emotion_sentence(person, rng.coin(0.5), use_name, rng)
                           : patient_sentence(person, rng.coin(0.5), rng);
      } else {
        ev = action_sentence(person, rng.choose(distractor_actions()), use_name, rng);
      }

      // The opening evidence never reverses an expectation; only later ones
      // may carry a dissenting cue.
      if (j > 0 && rng.coin(config.cue_prob)) {
        const int shift = prepend_cue(ev, rng.choose(dissenting_cues()));
        if (ev.subject_token >= 0) ev.subject_token += shift;
        ++dissent_count;
      } else if (rng.coin(0.3)) {
        const int shift = prepend_cue(ev, rng.choose(conforming_cues()));
        if (ev.subject_token >= 0) ev.subject_token += shift;
      }
      evidences.push_back(std::move(ev));
    }

    bool label = false;
    switch (config.rule) {
      case LabelRule::LastStateParity:
        label = dissent_count % 2 == 0;
        break;
      case LabelRule::FocalPresence:
        label = want_focal;
        break;
      case LabelRule::Mixed:
        label = want_focal && dissent_count % 2 == 0;
        break;
    }

    DesireInstance inst;
    {
      std::ostringstream id;
      id << "synth-" << to_string(config.rule) << "-" << idx;
      inst.id = id.str();
    }
    inst.desire_expression = annotate(d.text(), grammar);
    inst.desire_verb_token = desire_verb_idx;
    inst.desire_subject = MentionSpan{0, name_idx, name_idx + 1};
    inst.label = label;

    std::vector<MentionSpan> chain;
    chain.push_back(inst.desire_subject);
    if (poss_idx >= 0) chain.push_back(MentionSpan{0, poss_idx, poss_idx + 1});
    if (tail_pron_idx >= 0) chain.push_back(MentionSpan{0, tail_pron_idx, tail_pron_idx + 1});
    for (int j = 0; j < n; ++j) {
      inst.evidences.push_back(annotate(evidences[j].text(), grammar));
      if (evidences[j].subject_token >= 0) {
        chain.push_back(MentionSpan{j + 1, evidences[j].subject_token,
                                    evidences[j].subject_token + 1});
      }
    }
    inst.coref_chains.push_back(std::move(chain));

    validate_instance(inst);
    corpus.push_back(std::move(inst));
  }
  return corpus;
}

}  // namespace desirefill

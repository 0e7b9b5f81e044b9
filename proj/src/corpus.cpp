#include "desirefill/corpus.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace desirefill {

using nlohmann::ordered_json;

Pos pos_from_string(const std::string& s) {
  if (s == "noun") return Pos::Noun;
  if (s == "verb") return Pos::Verb;
  if (s == "adj") return Pos::Adj;
  if (s == "adv") return Pos::Adv;
  if (s == "pron") return Pos::Pron;
  if (s == "other") return Pos::Other;
  throw DataError("unknown pos tag '" + s + "'");
}

std::string to_string(Pos p) {
  switch (p) {
    case Pos::Noun: return "noun";
    case Pos::Verb: return "verb";
    case Pos::Adj: return "adj";
    case Pos::Adv: return "adv";
    case Pos::Pron: return "pron";
    case Pos::Other: return "other";
  }
  return "other";
}

Rel rel_from_string(const std::string& s) {
  if (s == "subject") return Rel::Subject;
  if (s == "passive-subject") return Rel::PassiveSubject;
  if (s == "object") return Rel::Object;
  if (s == "adjectival-modifier") return Rel::AdjectivalModifier;
  if (s == "clausal-complement") return Rel::ClausalComplement;
  if (s == "negation") return Rel::Negation;
  throw DataError("unknown arc relation '" + s + "'");
}

std::string to_string(Rel r) {
  switch (r) {
    case Rel::Subject: return "subject";
    case Rel::PassiveSubject: return "passive-subject";
    case Rel::Object: return "object";
    case Rel::AdjectivalModifier: return "adjectival-modifier";
    case Rel::ClausalComplement: return "clausal-complement";
    case Rel::Negation: return "negation";
  }
  return "subject";
}

std::string feature_key(int fid) {
  return "F" + std::to_string(fid);
}

const AnnotatedSentence& DesireInstance::sentence(int sentence_id) const {
  if (sentence_id == 0) return desire_expression;
  return evidences.at(static_cast<std::size_t>(sentence_id - 1));
}

namespace {

void validate_sentence(const AnnotatedSentence& s, const std::string& where) {
  const int n = s.size();
  if (n == 0) throw DataError(where + ": sentence has no tokens");
  for (int i = 0; i < n; ++i) {
    const Token& t = s.tokens[i];
    if (t.lemma.empty()) {
      throw DataError(where + ": token " + std::to_string(i) + " has an empty lemma");
    }
    if (t.index != i) {
      throw DataError(where + ": token index " + std::to_string(t.index) +
                      " is not contiguous at position " + std::to_string(i));
    }
  }
  for (const Arc& a : s.arcs) {
    if (a.head < 0 || a.head >= n || a.dep < 0 || a.dep >= n) {
      throw DataError(where + ": arc (" + std::to_string(a.head) + ", " +
                      std::to_string(a.dep) + ") out of range");
    }
  }
}

void validate_span(const MentionSpan& m, const DesireInstance& inst,
                   const std::string& where) {
  if (m.sentence_id < 0 || m.sentence_id >= inst.sentence_count()) {
    throw DataError(where + ": mention sentence id " +
                    std::to_string(m.sentence_id) + " out of range");
  }
  const int len = inst.sentence(m.sentence_id).size();
  if (m.start < 0 || m.end > len || m.start >= m.end) {
    throw DataError(where + ": mention span [" + std::to_string(m.start) + ", " +
                    std::to_string(m.end) + ") invalid for sentence " +
                    std::to_string(m.sentence_id));
  }
}

}  // namespace

void validate_instance(const DesireInstance& inst) {
  const std::string where = "instance '" + inst.id + "'";
  if (inst.id.empty()) throw DataError("instance with empty id");
  validate_sentence(inst.desire_expression, where + " desire_expression");
  if (inst.evidences.empty()) throw DataError(where + ": instance has no evidences");
  if (inst.evidences.size() > 5) throw DataError(where + ": evidence count exceeds 5");
  for (std::size_t j = 0; j < inst.evidences.size(); ++j) {
    validate_sentence(inst.evidences[j], where + " evidence " + std::to_string(j + 1));
  }

  if (inst.desire_verb_token < 0 || inst.desire_verb_token >= inst.desire_expression.size()) {
    throw DataError(where + ": desire_verb_token out of range");
  }
  const std::string& verb_lemma = inst.desire_expression.tokens[inst.desire_verb_token].lemma;
  if (verb_lemma != "want" && verb_lemma != "wish" && verb_lemma != "hope") {
    throw DataError(where + ": desire_verb lemma '" + verb_lemma +
                    "' not in {want, wish, hope}");
  }

  if (inst.desire_subject.sentence_id != 0) {
    throw DataError(where + ": desire_subject must lie in sentence 0");
  }
  validate_span(inst.desire_subject, inst, where + " desire_subject");

  for (std::size_t c = 0; c < inst.coref_chains.size(); ++c) {
    if (inst.coref_chains[c].empty()) {
      throw DataError(where + ": coref chain " + std::to_string(c) + " is empty");
    }
    for (const MentionSpan& m : inst.coref_chains[c]) {
      validate_span(m, inst, where + " coref chain " + std::to_string(c));
    }
  }
}

namespace {

ordered_json sentence_to_json(const AnnotatedSentence& s) {
  ordered_json j;
  j["text"] = s.text;
  j["tokens"] = ordered_json::array();
  for (const Token& t : s.tokens) {
    j["tokens"].push_back({{"surface", t.surface},
                           {"lemma", t.lemma},
                           {"pos", to_string(t.pos)},
                           {"negated", t.negated}});
  }
  j["arcs"] = ordered_json::array();
  for (const Arc& a : s.arcs) {
    j["arcs"].push_back({{"head", a.head}, {"dep", a.dep}, {"rel", to_string(a.rel)}});
  }
  return j;
}

AnnotatedSentence sentence_from_json(const ordered_json& j, const std::string& where) {
  AnnotatedSentence s;
  try {
    s.text = j.value("text", std::string{});
    int idx = 0;
    for (const auto& tj : j.at("tokens")) {
      Token t;
      t.surface = tj.at("surface").get<std::string>();
      t.lemma = tj.at("lemma").get<std::string>();
      t.pos = pos_from_string(tj.at("pos").get<std::string>());
      t.negated = tj.value("negated", false);
      t.index = idx++;
      s.tokens.push_back(std::move(t));
    }
    for (const auto& aj : j.value("arcs", ordered_json::array())) {
      Arc a;
      a.head = aj.at("head").get<int>();
      a.dep = aj.at("dep").get<int>();
      a.rel = rel_from_string(aj.at("rel").get<std::string>());
      s.arcs.push_back(a);
    }
  } catch (const ordered_json::exception& e) {
    throw DataError(where + ": " + e.what());
  }
  return s;
}

MentionSpan span_from_json(const ordered_json& j, const std::string& where) {
  try {
    return MentionSpan{j.at("sentence").get<int>(), j.at("start").get<int>(),
                       j.at("end").get<int>()};
  } catch (const ordered_json::exception& e) {
    throw DataError(where + ": " + e.what());
  }
}

ordered_json span_to_json(const MentionSpan& m) {
  return {{"sentence", m.sentence_id}, {"start", m.start}, {"end", m.end}};
}

DesireInstance instance_from_json(const ordered_json& j) {
  DesireInstance inst;
  try {
    inst.id = j.at("id").get<std::string>();
  } catch (const ordered_json::exception&) {
    throw DataError("instance without an 'id' field");
  }
  const std::string where = "instance '" + inst.id + "'";
  try {
    inst.desire_expression =
        sentence_from_json(j.at("desire_expression"), where + " desire_expression");
    inst.desire_subject = span_from_json(j.at("desire_subject"), where + " desire_subject");
    inst.desire_verb_token = j.at("desire_verb_token").get<int>();
    for (const auto& ej : j.at("evidences")) {
      inst.evidences.push_back(sentence_from_json(ej, where + " evidence"));
    }
    for (const auto& cj : j.value("coref_chains", ordered_json::array())) {
      std::vector<MentionSpan> chain;
      for (const auto& mj : cj) chain.push_back(span_from_json(mj, where + " coref_chains"));
      inst.coref_chains.push_back(std::move(chain));
    }
    if (j.contains("label") && !j.at("label").is_null()) {
      inst.label = j.at("label").get<bool>();
    }
  } catch (const DataError&) {
    throw;
  } catch (const ordered_json::exception& e) {
    throw DataError(where + ": " + e.what());
  }
  validate_instance(inst);
  return inst;
}

}  // namespace

std::string corpus_to_json_string(const std::vector<DesireInstance>& corpus) {
  ordered_json arr = ordered_json::array();
  for (const DesireInstance& inst : corpus) {
    ordered_json j;
    j["id"] = inst.id;
    j["desire_expression"] = sentence_to_json(inst.desire_expression);
    j["desire_subject"] = span_to_json(inst.desire_subject);
    j["desire_verb_token"] = inst.desire_verb_token;
    j["evidences"] = ordered_json::array();
    for (const AnnotatedSentence& e : inst.evidences) {
      j["evidences"].push_back(sentence_to_json(e));
    }
    j["coref_chains"] = ordered_json::array();
    for (const auto& chain : inst.coref_chains) {
      ordered_json cj = ordered_json::array();
      for (const MentionSpan& m : chain) cj.push_back(span_to_json(m));
      j["coref_chains"].push_back(cj);
    }
    if (inst.label.has_value()) {
      j["label"] = *inst.label;
    } else {
      j["label"] = nullptr;
    }
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::vector<DesireInstance> corpus_from_json_string(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::exception& e) {
    throw DataError(std::string("corpus is not valid JSON: ") + e.what());
  }
  if (!j.is_array()) throw DataError("corpus root must be a JSON array");
  std::vector<DesireInstance> corpus;
  corpus.reserve(j.size());
  for (const auto& ij : j) corpus.push_back(instance_from_json(ij));
  return corpus;
}

std::vector<DesireInstance> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open corpus file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return corpus_from_json_string(buf.str());
}

void save_corpus(const std::filesystem::path& path,
                 const std::vector<DesireInstance>& corpus) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write corpus file " + path.string());
  out << corpus_to_json_string(corpus);
}

}  // namespace desirefill

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "desirefill/common.hpp"

namespace desirefill {

struct Token {
  std::string surface;
  std::string lemma;
  Pos pos = Pos::Other;
  int index = 0;
  bool negated = false;
};

struct Arc {
  int head = 0;
  int dep = 0;
  Rel rel = Rel::Subject;
};

struct AnnotatedSentence {
  std::string text;
  std::vector<Token> tokens;
  std::vector<Arc> arcs;

  int size() const { return static_cast<int>(tokens.size()); }
};

// sentence_id 0 is the desire expression; evidence j is sentence_id j (1-based).
struct MentionSpan {
  int sentence_id = 0;
  int start = 0;
  int end = 0;  // exclusive

  bool operator==(const MentionSpan&) const = default;
};

struct DesireInstance {
  std::string id;
  AnnotatedSentence desire_expression;
  MentionSpan desire_subject;  // always in sentence 0
  int desire_verb_token = 0;
  std::vector<AnnotatedSentence> evidences;  // 1..5 entries
  std::vector<std::vector<MentionSpan>> coref_chains;
  std::optional<bool> label;

  const AnnotatedSentence& sentence(int sentence_id) const;
  int sentence_count() const { return 1 + static_cast<int>(evidences.size()); }
};

// Loads and validates a corpus file (JSON array of instances, schema in the
// README). Throws DataError naming the offending instance and field.
std::vector<DesireInstance> load_corpus(const std::filesystem::path& path);

// Deterministic serialization: same corpus -> same bytes.
std::string corpus_to_json_string(const std::vector<DesireInstance>& corpus);
std::vector<DesireInstance> corpus_from_json_string(const std::string& text);
void save_corpus(const std::filesystem::path& path,
                 const std::vector<DesireInstance>& corpus);

// Validates one instance; used by the loader and by the synthetic generator.
void validate_instance(const DesireInstance& inst);

}  // namespace desirefill

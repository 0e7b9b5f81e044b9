#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace desirefill {

// Raised for anything wrong with input data: corpus schema violations,
// malformed lexicon files, out-of-vocabulary tokens, unusable training sets.
// The CLI maps it to exit code 2.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Pos { Noun, Verb, Adj, Adv, Pron, Other };

enum class Rel {
  Subject,
  PassiveSubject,
  Object,
  AdjectivalModifier,
  ClausalComplement,
  Negation,
};

Pos pos_from_string(const std::string& s);
std::string to_string(Pos p);
Rel rel_from_string(const std::string& s);
std::string to_string(Rel r);

// Feature ids are 1..17; the canonical key for feature k is "F<k>".
constexpr int kFeatureCount = 17;
std::string feature_key(int fid);

// Sparse real-valued feature vector keyed by strings. Zero entries are never
// stored. Backed by an ordered map, so iteration, dot products and
// serialization are all deterministic.
class FeatureVector {
 public:
  using Map = std::map<std::string, double>;

  double get(const std::string& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? 0.0 : it->second;
  }

  void set(const std::string& key, double value) {
    if (value == 0.0) {
      entries_.erase(key);
    } else {
      entries_[key] = value;
    }
  }

  void add(const std::string& key, double delta) {
    if (delta == 0.0) return;
    auto [it, inserted] = entries_.try_emplace(key, delta);
    if (!inserted) {
      it->second += delta;
      if (it->second == 0.0) entries_.erase(it);
    }
  }

  // Accumulates scale * other into this vector.
  void add_scaled(const FeatureVector& other, double scale) {
    for (const auto& [k, v] : other.entries_) add(k, scale * v);
  }

  // w.dot(x): iterates x's entries in key order, missing weights read as 0.
  double dot(const FeatureVector& x) const {
    double s = 0.0;
    for (const auto& [k, v] : x.entries_) s += get(k) * v;
    return s;
  }

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const Map& entries() const { return entries_; }

  bool operator==(const FeatureVector& other) const = default;

 private:
  Map entries_;
};

}  // namespace desirefill

#include "desirefill/lsnm.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <random>
#include <sstream>

#include "json.hpp"

namespace desirefill {

using nlohmann::ordered_json;

LsnmLayout::LsnmLayout(int num_states) : h_(num_states) {
  if (num_states < 1) throw DataError("number of latent states must be >= 1");
  size_ = 15 * h_ + 3 * h_ * h_ + 30;
}

int LsnmLayout::start(int h) const { return h; }

int LsnmLayout::content(int h, int fid) const {
  return h_ + h * 12 + (fid - 4);
}

int LsnmLayout::transition(int prev, int next) const {
  return 13 * h_ + prev * h_ + next;
}

int LsnmLayout::sustenance(int prev, int next, int fid) const {
  return 13 * h_ + h_ * h_ + (prev * h_ + next) * 2 + (fid - 16);
}

int LsnmLayout::out_state(bool f, int h) const {
  return 13 * h_ + 3 * h_ * h_ + (f ? h_ : 0) + h;
}

int LsnmLayout::out_global(bool f, int fid) const {
  return 13 * h_ + 3 * h_ * h_ + 2 * h_ + (f ? 15 : 0) + (fid - 1);
}

std::string LsnmLayout::key_name(int index) const {
  if (index < 0 || index >= size_) throw DataError("weight index out of range");
  int i = index;
  if (i < h_) return "start:" + std::to_string(i);
  i -= h_;
  if (i < 12 * h_) {
    return "c:" + std::to_string(i / 12) + ":" + feature_key(i % 12 + 4);
  }
  i -= 12 * h_;
  if (i < h_ * h_) {
    return "t:" + std::to_string(i / h_) + ":" + std::to_string(i % h_);
  }
  i -= h_ * h_;
  if (i < 2 * h_ * h_) {
    const int pair = i / 2;
    return "s:" + std::to_string(pair / h_) + ":" + std::to_string(pair % h_) +
           ":" + feature_key(i % 2 + 16);
  }
  i -= 2 * h_ * h_;
  if (i < 2 * h_) {
    return "out:" + std::to_string(i / h_) + ":" + std::to_string(i % h_);
  }
  i -= 2 * h_;
  return "og:" + std::to_string(i / 15) + ":" + feature_key(i % 15 + 1);
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t p = s.find(sep, start);
    if (p == std::string::npos) {
      parts.push_back(s.substr(start));
      break;
    }
    parts.push_back(s.substr(start, p - start));
    start = p + 1;
  }
  return parts;
}

int parse_int(const std::string& s, int lo, int hi, const std::string& key) {
  int v = 0;
  try {
    v = std::stoi(s);
  } catch (...) {
    throw DataError("malformed weight key '" + key + "'");
  }
  if (v < lo || v > hi) throw DataError("weight key '" + key + "' out of range");
  return v;
}

int parse_fid(const std::string& s, int lo, int hi, const std::string& key) {
  if (s.size() < 2 || s[0] != 'F') throw DataError("malformed weight key '" + key + "'");
  return parse_int(s.substr(1), lo, hi, key);
}

}  // namespace

int LsnmLayout::index_of(const std::string& key) const {
  const auto parts = split(key, ':');
  const int hmax = h_ - 1;
  if (parts.size() == 2 && parts[0] == "start") {
    return start(parse_int(parts[1], 0, hmax, key));
  }
  if (parts.size() == 3 && parts[0] == "c") {
    return content(parse_int(parts[1], 0, hmax, key), parse_fid(parts[2], 4, 15, key));
  }
  if (parts.size() == 3 && parts[0] == "t") {
    return transition(parse_int(parts[1], 0, hmax, key), parse_int(parts[2], 0, hmax, key));
  }
  if (parts.size() == 4 && parts[0] == "s") {
    return sustenance(parse_int(parts[1], 0, hmax, key), parse_int(parts[2], 0, hmax, key),
                      parse_fid(parts[3], 16, 17, key));
  }
  if (parts.size() == 3 && parts[0] == "out") {
    return out_state(parse_int(parts[1], 0, 1, key) == 1, parse_int(parts[2], 0, hmax, key));
  }
  if (parts.size() == 3 && parts[0] == "og") {
    return out_global(parse_int(parts[1], 0, 1, key) == 1, parse_fid(parts[2], 1, 15, key));
  }
  throw DataError("malformed weight key '" + key + "'");
}

namespace {

// Per-instance feature values in fixed array form; the only representation
// the decoder touches.
struct DenseEvidence {
  std::array<double, 12> content{};  // F4..F15
  double f16 = 0.0;
  double f17 = 0.0;
};

struct DenseInstance {
  std::vector<DenseEvidence> ev;
  std::array<double, 15> agg{};  // aggregated F1..F15
};

DenseInstance build_dense(const InstanceFeatures& feats) {
  DenseInstance d;
  d.ev.resize(feats.per_evidence.size());
  for (std::size_t j = 0; j < feats.per_evidence.size(); ++j) {
    const FeatureVector& fv = feats.per_evidence[j];
    for (int k = 0; k < 12; ++k) d.ev[j].content[k] = fv.get(feature_key(k + 4));
    d.ev[j].f16 = fv.get("F16");
    d.ev[j].f17 = fv.get("F17");
  }
  const FeatureVector agg = aggregate(feats);
  for (int k = 0; k < 15; ++k) d.agg[k] = agg.get(feature_key(k + 1));
  return d;
}

// The accumulation contract lives in these four helpers: every score in this
// module is built from exactly these binary additions, in this order.
double fold_first(const std::vector<double>& w, const LsnmLayout& L,
                  const DenseEvidence& e, int s) {
  double acc = w[L.start(s)];
  for (int k = 0; k < 12; ++k) {
    if (e.content[k] != 0.0) acc += w[L.content(s, k + 4)] * e.content[k];
  }
  return acc;
}

double fold_edge(double acc, const std::vector<double>& w, const LsnmLayout& L,
                 const DenseEvidence& e, int prev, int next) {
  acc += w[L.transition(prev, next)];
  if (e.f16 != 0.0) acc += w[L.sustenance(prev, next, 16)] * e.f16;
  if (e.f17 != 0.0) acc += w[L.sustenance(prev, next, 17)] * e.f17;
  return acc;
}

double fold_content(double acc, const std::vector<double>& w, const LsnmLayout& L,
                    const DenseEvidence& e, int s) {
  for (int k = 0; k < 12; ++k) {
    if (e.content[k] != 0.0) acc += w[L.content(s, k + 4)] * e.content[k];
  }
  return acc;
}

double fold_output(double acc, const std::vector<double>& w, const LsnmLayout& L,
                   const DenseInstance& d, bool f, int last) {
  acc += w[L.out_state(f, last)];
  for (int k = 0; k < 15; ++k) {
    if (d.agg[k] != 0.0) acc += w[L.out_global(f, k + 1)] * d.agg[k];
  }
  return acc;
}

double score_dense(const std::vector<double>& w, const LsnmLayout& L,
                   const DenseInstance& d, bool f, std::span<const int> states) {
  double acc = fold_first(w, L, d.ev[0], states[0]);
  for (std::size_t j = 1; j < d.ev.size(); ++j) {
    acc = fold_edge(acc, w, L, d.ev[j], states[j - 1], states[j]);
    acc = fold_content(acc, w, L, d.ev[j], states[j]);
  }
  return fold_output(acc, w, L, d, f, states.back());
}

Decode viterbi_dense(const std::vector<double>& w, const LsnmLayout& L,
                     const DenseInstance& d, std::optional<bool> fixed_label) {
  const int H = L.num_states();
  const std::size_t n = d.ev.size();
  if (n == 0) throw DataError("empty chain");

  std::vector<double> v(H);
  for (int s = 0; s < H; ++s) v[s] = fold_first(w, L, d.ev[0], s);

  std::vector<std::vector<int>> back(n, std::vector<int>(H, -1));
  std::vector<double> next(H);
  for (std::size_t j = 1; j < n; ++j) {
    for (int s = 0; s < H; ++s) {
      double best = -std::numeric_limits<double>::infinity();
      int bp = -1;
      for (int sp = 0; sp < H; ++sp) {
        const double cand = fold_edge(v[sp], w, L, d.ev[j], sp, s);
        if (cand > best) {  // strict: ties keep the lowest previous state
          best = cand;
          bp = sp;
        }
      }
      next[s] = fold_content(best, w, L, d.ev[j], s);
      back[j][s] = bp;
    }
    v.swap(next);
  }

  // Preference order on ties: lowest final state first, then f = false.
  double best_total = -std::numeric_limits<double>::infinity();
  int best_last = -1;
  bool best_f = false;
  for (int s = 0; s < H; ++s) {
    for (int fi = 0; fi < 2; ++fi) {
      const bool f = fi == 1;
      if (fixed_label.has_value() && f != *fixed_label) continue;
      const double total = fold_output(v[s], w, L, d, f, s);
      if (total > best_total) {
        best_total = total;
        best_last = s;
        best_f = f;
      }
    }
  }

  Decode out;
  out.label = best_f;
  out.score = best_total;
  out.states.resize(n);
  out.states[n - 1] = best_last;
  for (std::size_t j = n - 1; j > 0; --j) {
    out.states[j - 1] = back[j][out.states[j]];
  }
  return out;
}

void check_states(const InstanceFeatures& feats, std::span<const int> states) {
  if (states.size() != feats.per_evidence.size() || states.empty()) {
    throw std::invalid_argument("state sequence length must match the evidence count");
  }
}

}  // namespace

FeatureVector joint_features(const InstanceFeatures& feats,
                             std::span<const int> states,
                             bool f) {
  check_states(feats, states);
  FeatureVector out;
  const std::string flabel = f ? "1" : "0";
  out.add("start:" + std::to_string(states[0]), 1.0);
  for (std::size_t j = 0; j < states.size(); ++j) {
    const FeatureVector& fv = feats.per_evidence[j];
    const std::string h = std::to_string(states[j]);
    for (int fid = 4; fid <= 15; ++fid) {
      out.add("c:" + h + ":" + feature_key(fid), fv.get(feature_key(fid)));
    }
    if (j > 0) {
      const std::string hp = std::to_string(states[j - 1]);
      out.add("t:" + hp + ":" + h, 1.0);
      for (int fid = 16; fid <= 17; ++fid) {
        out.add("s:" + hp + ":" + h + ":" + feature_key(fid), fv.get(feature_key(fid)));
      }
    }
  }
  out.add("out:" + flabel + ":" + std::to_string(states.back()), 1.0);
  const FeatureVector agg = aggregate(feats);
  for (int fid = 1; fid <= 15; ++fid) {
    out.add("og:" + flabel + ":" + feature_key(fid), agg.get(feature_key(fid)));
  }
  return out;
}

double score_path(const LsnmModel& model,
                  const InstanceFeatures& feats,
                  bool f,
                  std::span<const int> states) {
  check_states(feats, states);
  const LsnmLayout L = model.layout();
  for (int s : states) {
    if (s < 0 || s >= L.num_states()) throw std::invalid_argument("state out of range");
  }
  return score_dense(model.weights, L, build_dense(feats), f, states);
}

Decode viterbi(const LsnmModel& model,
               const InstanceFeatures& feats,
               std::optional<bool> fixed_label) {
  return viterbi_dense(model.weights, model.layout(), build_dense(feats), fixed_label);
}

Decode predict_lsnm(const LsnmModel& model, const InstanceFeatures& feats) {
  return viterbi(model, feats, std::nullopt);
}

namespace {

// Perceptron update: adds scale * Phi(f, states) into the dense weights.
void add_joint(std::vector<double>& w, const LsnmLayout& L, const DenseInstance& d,
               bool f, const std::vector<int>& states, double scale) {
  w[L.start(states[0])] += scale;
  for (std::size_t j = 0; j < states.size(); ++j) {
    const DenseEvidence& e = d.ev[j];
    for (int k = 0; k < 12; ++k) {
      if (e.content[k] != 0.0) w[L.content(states[j], k + 4)] += scale * e.content[k];
    }
    if (j > 0) {
      w[L.transition(states[j - 1], states[j])] += scale;
      if (e.f16 != 0.0) w[L.sustenance(states[j - 1], states[j], 16)] += scale * e.f16;
      if (e.f17 != 0.0) w[L.sustenance(states[j - 1], states[j], 17)] += scale * e.f17;
    }
  }
  w[L.out_state(f, states.back())] += scale;
  for (int k = 0; k < 15; ++k) {
    if (d.agg[k] != 0.0) w[L.out_global(f, k + 1)] += scale * d.agg[k];
  }
}

double uniform01(std::mt19937_64& rng) {
  // 53-bit mantissa draw; identical across platforms, unlike
  // std::uniform_real_distribution.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

LsnmModel train_lsnm(const std::vector<LsnmExample>& data,
                     int num_states,
                     const LsnmHyper& hyper,
                     std::uint64_t seed) {
  if (data.empty()) throw DataError("degenerate training set: empty corpus");
  bool pos = false, neg = false;
  for (const LsnmExample& ex : data) (ex.label ? pos : neg) = true;
  if (!pos || !neg) throw DataError("degenerate training set: single-class corpus");

  LsnmModel model;
  model.num_states = num_states;
  model.hyper = hyper;
  model.seed = seed;
  const LsnmLayout L = model.layout();

  std::mt19937_64 rng(seed);
  model.weights.resize(L.size());
  for (double& wi : model.weights) wi = -0.01 + 0.02 * uniform01(rng);

  std::vector<DenseInstance> dense(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) dense[i] = build_dense(*data[i].feats);

  std::vector<double> sum(L.size(), 0.0);
  long steps = 0;
  for (int epoch = 0; epoch < hyper.epochs; ++epoch) {
    for (std::size_t i = 0; i < data.size(); ++i) {
      const bool gold = data[i].label;
      const Decode target = viterbi_dense(model.weights, L, dense[i], gold);
      const Decode predicted = viterbi_dense(model.weights, L, dense[i], std::nullopt);
      if (predicted.label != gold) {
        add_joint(model.weights, L, dense[i], gold, target.states, +1.0);
        add_joint(model.weights, L, dense[i], predicted.label, predicted.states, -1.0);
      }
      for (int k = 0; k < L.size(); ++k) sum[k] += model.weights[k];
      ++steps;
    }
  }
  if (hyper.average && steps > 0) {
    for (int k = 0; k < L.size(); ++k) {
      model.weights[k] = sum[k] / static_cast<double>(steps);
    }
  }
  return model;
}

std::string lsnm_to_json_string(const LsnmModel& model) {
  const LsnmLayout L = model.layout();
  ordered_json j;
  j["format"] = "desirefill-model";
  j["version"] = 1;
  j["kind"] = "lsnm";
  j["layout_version"] = 1;
  j["h"] = model.num_states;
  j["seed"] = model.seed;
  j["hyper"] = {{"epochs", model.hyper.epochs}, {"average", model.hyper.average}};
  ordered_json w = ordered_json::object();
  for (int i = 0; i < L.size(); ++i) {
    if (model.weights[i] != 0.0) w[L.key_name(i)] = model.weights[i];
  }
  j["weights"] = std::move(w);
  return j.dump(2) + "\n";
}

LsnmModel lsnm_from_json_string(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::exception& e) {
    throw DataError(std::string("model file is not valid JSON: ") + e.what());
  }
  try {
    if (j.value("format", std::string{}) != "desirefill-model" || j.at("version") != 1 ||
        j.value("kind", std::string{}) != "lsnm" || j.at("layout_version") != 1) {
      throw DataError("unsupported chain-model file format/version");
    }
    LsnmModel m;
    m.num_states = j.at("h").get<int>();
    m.seed = j.at("seed").get<std::uint64_t>();
    m.hyper.epochs = j.at("hyper").at("epochs").get<int>();
    m.hyper.average = j.at("hyper").at("average").get<bool>();
    const LsnmLayout L = m.layout();
    m.weights.assign(L.size(), 0.0);
    for (const auto& [k, v] : j.at("weights").items()) {
      m.weights[L.index_of(k)] = v.get<double>();
    }
    return m;
  } catch (const DataError&) {
    throw;
  } catch (const ordered_json::exception& e) {
    throw DataError(std::string("malformed chain-model file: ") + e.what());
  }
}

std::string decode_dump_tsv(const std::vector<std::string>& ids,
                            const std::vector<std::optional<bool>>& gold,
                            const std::vector<Decode>& decodes) {
  if (ids.size() != decodes.size() || ids.size() != gold.size()) {
    throw std::invalid_argument("decode dump inputs must have equal lengths");
  }
  std::ostringstream out;
  out << "id\tgold\tpredicted\tstates\tscore\n";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    out << ids[i] << '\t';
    if (gold[i].has_value()) {
      out << (*gold[i] ? '1' : '0');
    } else {
      out << '-';
    }
    out << '\t' << (decodes[i].label ? '1' : '0') << '\t';
    if (decodes[i].states.empty()) {
      out << '-';
    } else {
      for (std::size_t s = 0; s < decodes[i].states.size(); ++s) {
        if (s) out << ',';
        out << decodes[i].states[s];
      }
    }
    out << '\t' << std::setprecision(17) << decodes[i].score << '\n';
  }
  return out.str();
}

}  // namespace desirefill

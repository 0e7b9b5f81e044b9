#include "desirefill/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>

#include "json.hpp"

namespace desirefill {

using nlohmann::ordered_json;

double f1_from_pr(double precision, double recall) {
  const double denom = precision + recall;
  if (denom == 0.0) return 0.0;
  return 2.0 * precision * recall / denom;
}

EvalReport score(const std::vector<bool>& gold, const std::vector<bool>& predicted) {
  if (gold.size() != predicted.size()) {
    throw std::invalid_argument("gold/predicted length mismatch");
  }
  if (gold.empty()) throw std::invalid_argument("cannot score an empty list");
  EvalReport r;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (predicted[i]) {
      (gold[i] ? r.tp : r.fp) += 1;
    } else {
      (gold[i] ? r.fn : r.tn) += 1;
    }
  }
  r.precision = (r.tp + r.fp) ? 100.0 * r.tp / (r.tp + r.fp) : 0.0;
  r.recall = (r.tp + r.fn) ? 100.0 * r.tp / (r.tp + r.fn) : 0.0;
  r.f1 = f1_from_pr(r.precision, r.recall);
  return r;
}

double median_lower(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  return values[(values.size() - 1) / 2];
}

std::size_t median_restart_index(const std::vector<double>& f1s) {
  std::vector<std::size_t> order(f1s.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return f1s[a] < f1s[b]; });
  return order[(order.size() - 1) / 2];
}

namespace {

// Explicit Fisher-Yates with modulo draws; std::shuffle is not pinned across
// standard libraries.
void seeded_shuffle(std::vector<std::size_t>& v, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(v[i - 1], v[j]);
  }
}

void require_labels(const std::vector<PreparedInstance>& data) {
  for (const PreparedInstance& pi : data) {
    if (!pi.label.has_value()) {
      throw DataError("instance '" + pi.id + "' has no label");
    }
  }
}

const FeatureVector& input_for(ModelKind kind, const PreparedInstance& pi) {
  return kind == ModelKind::BowLr ? pi.bow : pi.aggregated;
}

// Trains on `train` and predicts each element of `test`, in test order.
std::vector<bool> fit_predict(const std::vector<const PreparedInstance*>& train,
                              const std::vector<const PreparedInstance*>& test,
                              const ModelSpec& spec, std::uint64_t seed) {
  std::vector<bool> pred;
  pred.reserve(test.size());
  if (spec.kind == ModelKind::Lsnm) {
    std::vector<LsnmExample> examples;
    examples.reserve(train.size());
    for (const PreparedInstance* pi : train) {
      examples.push_back(LsnmExample{&pi->feats, *pi->label});
    }
    const LsnmModel model = train_lsnm(examples, spec.num_states, spec.lsnm_hyper, seed);
    for (const PreparedInstance* pi : test) {
      pred.push_back(predict_lsnm(model, pi->feats).label);
    }
  } else {
    std::vector<FlatExample> examples;
    examples.reserve(train.size());
    for (const PreparedInstance* pi : train) {
      examples.push_back(FlatExample{&input_for(spec.kind, *pi), *pi->label});
    }
    const LinearModel model = train_unstructured(examples, spec.kind, spec.flat_hyper, seed);
    for (const PreparedInstance* pi : test) {
      pred.push_back(predict_unstructured(model, input_for(spec.kind, *pi)).first);
    }
  }
  return pred;
}

}  // namespace

std::vector<int> stratified_folds(const std::vector<PreparedInstance>& data,
                                  int k, std::uint64_t seed) {
  if (k < 2) throw DataError("cross-validation needs k >= 2");
  if (static_cast<int>(data.size()) < k) {
    throw DataError("corpus smaller than the fold count");
  }
  require_labels(data);

  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < data.size(); ++i) {
    (*data[i].label ? pos : neg).push_back(i);
  }
  seeded_shuffle(pos, seed);
  seeded_shuffle(neg, seed + 1);

  std::vector<int> fold(data.size(), 0);
  std::size_t next = 0;
  for (std::size_t i = 0; i < pos.size(); ++i, ++next) {
    fold[pos[i]] = static_cast<int>(next % k);
  }
  for (std::size_t i = 0; i < neg.size(); ++i, ++next) {
    fold[neg[i]] = static_cast<int>(next % k);
  }

  for (int f = 0; f < k; ++f) {
    bool train_pos = false, train_neg = false;
    for (std::size_t i = 0; i < data.size(); ++i) {
      if (fold[i] == f) continue;
      (*data[i].label ? train_pos : train_neg) = true;
    }
    if (!train_pos || !train_neg) {
      throw DataError("fold " + std::to_string(f) + ": training split has a single class");
    }
  }
  return fold;
}

EvalReport cross_validate(const std::vector<PreparedInstance>& data,
                          const ModelSpec& spec, int k, std::uint64_t seed,
                          Exec exec) {
  const std::vector<int> fold = stratified_folds(data, k, seed);
  const int restarts = spec.kind == ModelKind::Lsnm ? std::max(1, spec.restarts) : 1;

  // One task per (restart, fold); every task is independent and lands in its
  // own slot, so the result does not depend on scheduling.
  struct Counts {
    long tp = 0, fp = 0, fn = 0, tn = 0;
  };
  std::vector<Counts> counts(static_cast<std::size_t>(restarts) * k);
  for_each_index(exec, static_cast<std::ptrdiff_t>(counts.size()), [&](std::size_t task) {
    const int r = static_cast<int>(task) / k;
    const int f = static_cast<int>(task) % k;
    std::vector<const PreparedInstance*> train, test;
    for (std::size_t i = 0; i < data.size(); ++i) {
      (fold[i] == f ? test : train).push_back(&data[i]);
    }
    const std::vector<bool> pred = fit_predict(train, test, spec, seed + r);
    Counts& c = counts[task];
    for (std::size_t i = 0; i < test.size(); ++i) {
      if (pred[i]) {
        (*test[i]->label ? c.tp : c.fp) += 1;
      } else {
        (*test[i]->label ? c.fn : c.tn) += 1;
      }
    }
  });

  auto pooled_report = [&](int r) {
    EvalReport rep;
    for (int f = 0; f < k; ++f) {
      const Counts& c = counts[static_cast<std::size_t>(r) * k + f];
      rep.tp += c.tp;
      rep.fp += c.fp;
      rep.fn += c.fn;
      rep.tn += c.tn;
      EvalReport fr;
      fr.tp = c.tp;
      fr.fp = c.fp;
      fr.fn = c.fn;
      fr.tn = c.tn;
      fr.precision = (fr.tp + fr.fp) ? 100.0 * fr.tp / (fr.tp + fr.fp) : 0.0;
      fr.recall = (fr.tp + fr.fn) ? 100.0 * fr.tp / (fr.tp + fr.fn) : 0.0;
      rep.per_fold.push_back(f1_from_pr(fr.precision, fr.recall));
    }
    rep.precision = (rep.tp + rep.fp) ? 100.0 * rep.tp / (rep.tp + rep.fp) : 0.0;
    rep.recall = (rep.tp + rep.fn) ? 100.0 * rep.tp / (rep.tp + rep.fn) : 0.0;
    rep.f1 = f1_from_pr(rep.precision, rep.recall);
    return rep;
  };

  if (restarts == 1) return pooled_report(0);

  std::vector<EvalReport> by_restart;
  std::vector<double> f1s;
  for (int r = 0; r < restarts; ++r) {
    by_restart.push_back(pooled_report(r));
    f1s.push_back(by_restart.back().f1);
  }
  EvalReport rep = by_restart[median_restart_index(f1s)];
  rep.per_restart = f1s;
  return rep;
}

EvalReport run_restarts(const std::vector<PreparedInstance>& train,
                        const std::vector<PreparedInstance>& test,
                        int num_states, int restarts, std::uint64_t base_seed,
                        const LsnmHyper& hyper, Exec exec) {
  if (restarts < 1) throw DataError("restarts must be >= 1");
  require_labels(train);
  require_labels(test);

  ModelSpec spec;
  spec.kind = ModelKind::Lsnm;
  spec.num_states = num_states;
  spec.lsnm_hyper = hyper;

  std::vector<const PreparedInstance*> train_ptr, test_ptr;
  for (const PreparedInstance& pi : train) train_ptr.push_back(&pi);
  for (const PreparedInstance& pi : test) test_ptr.push_back(&pi);

  std::vector<EvalReport> reports(restarts);
  for_each_index(exec, restarts, [&](std::size_t r) {
    const std::vector<bool> pred = fit_predict(train_ptr, test_ptr, spec, base_seed + r);
    std::vector<bool> gold;
    gold.reserve(test.size());
    for (const PreparedInstance& pi : test) gold.push_back(*pi.label);
    reports[r] = score(gold, pred);
  });

  std::vector<double> f1s;
  for (const EvalReport& r : reports) f1s.push_back(r.f1);
  EvalReport rep = reports[median_restart_index(f1s)];
  rep.per_restart = f1s;
  return rep;
}

int select_h(const std::vector<PreparedInstance>& data,
             const std::vector<int>& candidates, int k, int restarts,
             std::uint64_t seed, Exec exec) {
  if (candidates.empty()) throw DataError("no candidate state counts given");
  std::vector<int> sorted = candidates;
  std::sort(sorted.begin(), sorted.end());

  int best_h = sorted.front();
  double best_f1 = -1.0;
  for (int h : sorted) {
    ModelSpec spec;
    spec.kind = ModelKind::Lsnm;
    spec.num_states = h;
    spec.restarts = restarts;
    const EvalReport rep = cross_validate(data, spec, k, seed, exec);
    if (rep.f1 > best_f1) {  // strict: ties keep the smallest H
      best_f1 = rep.f1;
      best_h = h;
    }
  }
  return best_h;
}

std::string report_to_json_string(const EvalReport& report) {
  ordered_json j;
  j["tp"] = report.tp;
  j["fp"] = report.fp;
  j["fn"] = report.fn;
  j["tn"] = report.tn;
  j["precision"] = report.precision;
  j["recall"] = report.recall;
  j["f1"] = report.f1;
  j["per_restart"] = report.per_restart;
  j["per_fold"] = report.per_fold;
  return j.dump(2) + "\n";
}

std::string format_report(const EvalReport& report) {
  char line[256];
  std::ostringstream out;
  out << "      P      R     F1   (positive class)\n";
  std::snprintf(line, sizeof(line), "  %5.1f  %5.1f  %5.1f\n", report.precision,
                report.recall, report.f1);
  out << line;
  std::snprintf(line, sizeof(line), "  tp=%ld fp=%ld fn=%ld tn=%ld\n", report.tp,
                report.fp, report.fn, report.tn);
  out << line;
  if (!report.per_restart.empty()) {
    std::snprintf(line, sizeof(line), "  restarts=%zu median F1=%.1f\n",
                  report.per_restart.size(), median_lower(report.per_restart));
    out << line;
  }
  if (!report.per_fold.empty()) {
    out << "  fold F1:";
    for (double f : report.per_fold) {
      std::snprintf(line, sizeof(line), " %.1f", f);
      out << line;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace desirefill

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "desirefill/linear.hpp"
#include "desirefill/lsnm.hpp"
#include "desirefill/parallel.hpp"
#include "desirefill/pipeline.hpp"

namespace desirefill {

// Counts and percentages for the positive (fulfilled) class. Percentages are
// kept at full precision; rounding to one decimal happens only when a report
// is printed.
struct EvalReport {
  long tp = 0, fp = 0, fn = 0, tn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::vector<double> per_restart;  // per-restart F1, restart order
  std::vector<double> per_fold;     // per-fold F1, fold order
};

// 2PR/(P+R) with the 0/0 -> 0 convention.
double f1_from_pr(double precision, double recall);

EvalReport score(const std::vector<bool>& gold, const std::vector<bool>& predicted);

// Median with the lower-middle rule for even counts.
double median_lower(std::vector<double> values);

struct ModelSpec {
  ModelKind kind = ModelKind::FeatLr;
  int num_states = 2;          // lsnm only
  int restarts = 1;            // lsnm only
  LsnmHyper lsnm_hyper;
  UnstructuredHyper flat_hyper;
};

// Stratified fold assignment: fold id per instance, seeded shuffle within
// each class. Throws DataError when some fold's training complement would be
// single-class.
std::vector<int> stratified_folds(const std::vector<PreparedInstance>& data,
                                  int k, std::uint64_t seed);

// k-fold cross-validation with pooled counts. Folds run concurrently.
EvalReport cross_validate(const std::vector<PreparedInstance>& data,
                          const ModelSpec& spec, int k, std::uint64_t seed,
                          Exec exec = Exec::Parallel);

// Trains `restarts` chain models with seeds base_seed.. and scores each on
// the test split. The headline counts are the restart whose F1 is the
// lower-middle median; per_restart keeps the full distribution. Restarts run
// concurrently and the result is independent of thread count.
EvalReport run_restarts(const std::vector<PreparedInstance>& train,
                        const std::vector<PreparedInstance>& test,
                        int num_states, int restarts, std::uint64_t base_seed,
                        const LsnmHyper& hyper = LsnmHyper{},
                        Exec exec = Exec::Parallel);

// Picks the candidate H with the best median cross-validated F1 over
// restarts; ties go to the smallest H.
int select_h(const std::vector<PreparedInstance>& data,
             const std::vector<int>& candidates, int k, int restarts,
             std::uint64_t seed, Exec exec = Exec::Parallel);

// Index of the restart whose F1 is the lower-middle median (stable in
// restart order among equal values).
std::size_t median_restart_index(const std::vector<double>& f1s);

std::string report_to_json_string(const EvalReport& report);
// One-decimal human-readable table.
std::string format_report(const EvalReport& report);

}  // namespace desirefill

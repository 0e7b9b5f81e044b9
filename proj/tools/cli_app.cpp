#include "cli_app.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "desirefill/corpus.hpp"
#include "desirefill/eval.hpp"
#include "desirefill/lexicons.hpp"
#include "desirefill/linear.hpp"
#include "desirefill/lsnm.hpp"
#include "desirefill/pipeline.hpp"
#include "desirefill/synth.hpp"

namespace desirefill {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write file " + path);
  out << content;
}

struct CommonOpts {
  std::string corpus_path;
  std::string lexicon_dir;
  double te_threshold = kDefaultEntailThreshold;
  bool serial = false;

  Exec exec() const { return serial ? Exec::Serial : Exec::Parallel; }
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--corpus", o.corpus_path, "corpus JSON file")->required();
  cmd->add_option("--lexicons", o.lexicon_dir, "lexicon directory")->required();
  cmd->add_option("--te-threshold", o.te_threshold,
                  "entailer coverage threshold in (0, 1]")
      ->capture_default_str();
  cmd->add_flag("--serial", o.serial, "disable parallel execution");
  cmd->set_config("--config", "", "key=value file mirroring the flags; flags win");
}

std::vector<PreparedInstance> load_and_prepare(const CommonOpts& o) {
  const auto corpus = load_corpus(o.corpus_path);
  const Lexicons lex = load_lexicons(o.lexicon_dir);
  return prepare_corpus(corpus, lex, o.te_threshold, o.exec());
}

struct AnyModel {
  std::optional<LinearModel> linear;
  std::optional<LsnmModel> lsnm;
};

AnyModel load_model(const std::string& path) {
  const std::string text = read_file(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DataError("model file is not valid JSON: " + std::string(e.what()));
  }
  AnyModel m;
  if (j.value("kind", std::string{}) == "lsnm") {
    m.lsnm = lsnm_from_json_string(text);
  } else {
    m.linear = linear_model_from_json_string(text);
  }
  return m;
}

// Stratified dev split used by multi-restart training: dev_frac of each class
// (at least one instance per class) becomes the development set.
void split_dev(const std::vector<PreparedInstance>& data, double dev_frac,
               std::uint64_t seed, std::vector<PreparedInstance>& train,
               std::vector<PreparedInstance>& dev) {
  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (!data[i].label.has_value()) {
      throw DataError("instance '" + data[i].id + "' has no label");
    }
    (*data[i].label ? pos : neg).push_back(i);
  }
  if (pos.empty() || neg.empty()) {
    throw DataError("degenerate training set: single-class corpus");
  }
  std::mt19937_64 rng(seed);
  auto shuffle = [&](std::vector<std::size_t>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[rng() % i]);
    }
  };
  shuffle(pos);
  shuffle(neg);
  std::vector<bool> in_dev(data.size(), false);
  const auto take = [&](const std::vector<std::size_t>& v) {
    std::size_t k = static_cast<std::size_t>(dev_frac * static_cast<double>(v.size()));
    k = std::max<std::size_t>(1, std::min(k, v.size() - 1));
    for (std::size_t i = 0; i < k; ++i) in_dev[v[i]] = true;
  };
  take(pos);
  take(neg);
  for (std::size_t i = 0; i < data.size(); ++i) {
    (in_dev[i] ? dev : train).push_back(data[i]);
  }
}

int cmd_gen_synth(const std::string& rule, int count, double cue_prob,
                  const std::string& lengths, std::uint64_t seed,
                  const std::string& out_path) {
  SynthConfig cfg;
  cfg.rule = label_rule_from_string(rule);
  cfg.count = count;
  cfg.cue_prob = cue_prob;
  cfg.seed = seed;
  {
    std::istringstream in(lengths);
    std::string part;
    std::size_t i = 0;
    while (std::getline(in, part, ',') && i < 5) cfg.length_weights[i++] = std::stod(part);
    if (i != 5) throw DataError("--lengths needs five comma-separated weights");
  }
  const auto corpus = generate(cfg);
  save_corpus(out_path, corpus);
  std::cout << "wrote " << corpus.size() << " instances to " << out_path << "\n";
  return 0;
}

int cmd_dump_features(const CommonOpts& common, const std::string& out_path) {
  const auto corpus = load_corpus(common.corpus_path);
  const Lexicons lex = load_lexicons(common.lexicon_dir);
  const auto prepared = prepare_corpus(corpus, lex, common.te_threshold, common.exec());
  std::vector<InstanceFeatures> feats;
  feats.reserve(prepared.size());
  for (const PreparedInstance& pi : prepared) feats.push_back(pi.feats);
  const std::string tsv = dump_features_tsv(corpus, feats);
  if (out_path.empty()) {
    std::cout << tsv;
  } else {
    write_file(out_path, tsv);
  }
  return 0;
}

struct TrainOpts {
  CommonOpts common;
  std::string kind_str;
  std::string model_out;
  std::uint64_t seed = 0;
  int num_states = 2;
  int epochs = 0;  // 0 = kind default
  int restarts = 1;
  double dev_frac = 0.2;
  double learning_rate = 0.1;
  double l2 = 1e-4;
  bool no_average = false;
};

int cmd_train(const TrainOpts& o) {
  const ModelKind kind = model_kind_from_string(o.kind_str);
  const auto prepared = load_and_prepare(o.common);

  if (kind != ModelKind::Lsnm) {
    if (o.restarts != 1) {
      throw CLI::ValidationError("--restarts", "restarts only apply to lsnm training");
    }
    UnstructuredHyper hyper;
    hyper.learning_rate = o.learning_rate;
    hyper.epochs = o.epochs > 0 ? o.epochs : 50;
    hyper.l2 = o.l2;
    hyper.average = !o.no_average;
    std::vector<FlatExample> examples;
    for (const PreparedInstance& pi : prepared) {
      if (!pi.label.has_value()) throw DataError("instance '" + pi.id + "' has no label");
      examples.push_back(FlatExample{
          kind == ModelKind::BowLr ? &pi.bow : &pi.aggregated, *pi.label});
    }
    const LinearModel model = train_unstructured(examples, kind, hyper, o.seed);
    write_file(o.model_out, linear_model_to_json_string(model));
    std::cout << "trained " << o.kind_str << " on " << examples.size()
              << " instances -> " << o.model_out << "\n";
    return 0;
  }

  LsnmHyper hyper;
  hyper.epochs = o.epochs > 0 ? o.epochs : 20;
  hyper.average = !o.no_average;

  if (o.restarts == 1) {
    std::vector<LsnmExample> examples;
    for (const PreparedInstance& pi : prepared) {
      if (!pi.label.has_value()) throw DataError("instance '" + pi.id + "' has no label");
      examples.push_back(LsnmExample{&pi.feats, *pi.label});
    }
    const LsnmModel model = train_lsnm(examples, o.num_states, hyper, o.seed);
    write_file(o.model_out, lsnm_to_json_string(model));
    std::cout << "trained lsnm (H=" << o.num_states << ") on " << examples.size()
              << " instances -> " << o.model_out << "\n";
    return 0;
  }

  // Multi-restart: the persisted model is the restart whose dev F1 is the
  // lower-middle median, so the saved artifact matches the reported number.
  std::vector<PreparedInstance> train_part, dev_part;
  split_dev(prepared, o.dev_frac, o.seed, train_part, dev_part);
  std::vector<LsnmExample> examples;
  for (const PreparedInstance& pi : train_part) {
    examples.push_back(LsnmExample{&pi.feats, *pi.label});
  }
  std::vector<bool> dev_gold;
  for (const PreparedInstance& pi : dev_part) dev_gold.push_back(*pi.label);

  std::vector<LsnmModel> models(static_cast<std::size_t>(o.restarts));
  std::vector<double> f1s(static_cast<std::size_t>(o.restarts));
  for_each_index(o.common.exec(), o.restarts, [&](std::size_t r) {
    models[r] = train_lsnm(examples, o.num_states, hyper, o.seed + r);
    std::vector<bool> pred;
    for (const PreparedInstance& pi : dev_part) {
      pred.push_back(predict_lsnm(models[r], pi.feats).label);
    }
    f1s[r] = score(dev_gold, pred).f1;
  });
  const std::size_t pick = median_restart_index(f1s);
  write_file(o.model_out, lsnm_to_json_string(models[pick]));
  std::cout << "trained lsnm (H=" << o.num_states << ", restarts=" << o.restarts
            << ") median dev F1=" << median_lower(f1s) << " (restart " << pick
            << ") -> " << o.model_out << "\n";
  return 0;
}

int cmd_predict(const CommonOpts& common, const std::string& model_path,
                const std::string& out_path) {
  const auto corpus = load_corpus(common.corpus_path);
  const Lexicons lex = load_lexicons(common.lexicon_dir);
  const auto prepared = prepare_corpus(corpus, lex, common.te_threshold, common.exec());
  const AnyModel model = load_model(model_path);

  std::vector<std::string> ids;
  std::vector<std::optional<bool>> gold;
  std::vector<Decode> decodes;
  for (const PreparedInstance& pi : prepared) {
    ids.push_back(pi.id);
    gold.push_back(pi.label);
    if (model.lsnm) {
      decodes.push_back(predict_lsnm(*model.lsnm, pi.feats));
    } else {
      const auto [label, s] = predict_unstructured(*model.linear,
                                                   model_input(*model.linear, pi));
      decodes.push_back(Decode{label, {}, s});
    }
  }
  const std::string tsv = decode_dump_tsv(ids, gold, decodes);
  if (out_path.empty()) {
    std::cout << tsv;
  } else {
    write_file(out_path, tsv);
  }
  return 0;
}

int cmd_eval(const CommonOpts& common, const std::string& model_path,
             const std::string& report_json) {
  const auto prepared = load_and_prepare(common);
  const AnyModel model = load_model(model_path);

  std::vector<bool> gold, pred;
  for (const PreparedInstance& pi : prepared) {
    if (!pi.label.has_value()) throw DataError("instance '" + pi.id + "' has no label");
    gold.push_back(*pi.label);
    if (model.lsnm) {
      pred.push_back(predict_lsnm(*model.lsnm, pi.feats).label);
    } else {
      pred.push_back(
          predict_unstructured(*model.linear, model_input(*model.linear, pi)).first);
    }
  }
  const EvalReport report = score(gold, pred);
  std::cout << format_report(report);
  if (!report_json.empty()) write_file(report_json, report_to_json_string(report));
  return 0;
}

struct CvOpts {
  CommonOpts common;
  std::string kind_str;
  std::uint64_t seed = 0;
  int k = 5;
  int num_states = 2;
  int restarts = 1;
  int epochs = 0;
  double learning_rate = 0.1;
  double l2 = 1e-4;
  bool no_average = false;
  std::string candidates;  // nonempty -> state-count selection mode
  std::string report_json;
};

int cmd_cv(const CvOpts& o) {
  const auto prepared = load_and_prepare(o.common);
  ModelSpec spec;
  spec.kind = model_kind_from_string(o.kind_str);
  spec.num_states = o.num_states;
  spec.restarts = o.restarts;
  spec.lsnm_hyper.epochs = o.epochs > 0 ? o.epochs : 20;
  spec.lsnm_hyper.average = !o.no_average;
  spec.flat_hyper.learning_rate = o.learning_rate;
  spec.flat_hyper.epochs = o.epochs > 0 ? o.epochs : 50;
  spec.flat_hyper.l2 = o.l2;
  spec.flat_hyper.average = !o.no_average;

  if (!o.candidates.empty()) {
    if (spec.kind != ModelKind::Lsnm) {
      throw CLI::ValidationError("--candidates", "state selection applies to lsnm only");
    }
    std::vector<int> cands;
    std::istringstream in(o.candidates);
    std::string part;
    while (std::getline(in, part, ',')) cands.push_back(std::stoi(part));
    const int h = select_h(prepared, cands, o.k, o.restarts, o.seed, o.common.exec());
    std::cout << "selected H = " << h << "\n";
    return 0;
  }

  const EvalReport report = cross_validate(prepared, spec, o.k, o.seed, o.common.exec());
  std::cout << format_report(report);
  if (!o.report_json.empty()) write_file(o.report_json, report_to_json_string(report));
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"desire fulfillment prediction toolkit"};
  app.require_subcommand(1);

  // gen-synth
  auto* gen = app.add_subcommand("gen-synth", "generate a synthetic corpus");
  std::string gen_rule = "last-state-parity";
  int gen_count = 0;
  double gen_cue_prob = 0.5;
  std::string gen_lengths = "0.05,0.2,0.3,0.25,0.2";
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("--count", gen_count, "number of instances")->required();
  gen->add_option("--rule", gen_rule, "last-state-parity | focal-presence | mixed")
      ->capture_default_str();
  gen->add_option("--cue-prob", gen_cue_prob, "dissenting-cue probability")
      ->capture_default_str();
  gen->add_option("--lengths", gen_lengths, "evidence-length weights for n=1..5")
      ->capture_default_str();
  gen->add_option("--seed", gen_seed, "generator seed")->required();
  gen->add_option("--out", gen_out, "output corpus path")->required();
  gen->set_config("--config", "", "key=value file mirroring the flags; flags win");

  // dump-features
  auto* dump = app.add_subcommand("dump-features", "emit the feature TSV");
  CommonOpts dump_common;
  std::string dump_out;
  add_common(dump, dump_common);
  dump->add_option("--out", dump_out, "output TSV path (default stdout)");

  // train
  auto* train = app.add_subcommand("train", "train a model");
  TrainOpts to;
  add_common(train, to.common);
  train->add_option("--model-kind", to.kind_str,
                    "bow-lr | feat-lr | feat-perceptron | lsnm")
      ->required();
  train->add_option("--model-out", to.model_out, "output model path")->required();
  train->add_option("--seed", to.seed, "training seed")->required();
  train->add_option("--h", to.num_states, "latent state count (lsnm)")
      ->capture_default_str();
  train->add_option("--epochs", to.epochs, "epoch budget (0 = kind default)");
  train->add_option("--restarts", to.restarts, "random restarts (lsnm)")
      ->capture_default_str();
  train->add_option("--dev-frac", to.dev_frac,
                    "dev fraction for multi-restart median selection")
      ->capture_default_str();
  train->add_option("--learning-rate", to.learning_rate, "LR step size")
      ->capture_default_str();
  train->add_option("--l2", to.l2, "LR L2 strength")->capture_default_str();
  train->add_flag("--no-average", to.no_average, "disable weight averaging");

  // predict
  auto* predict = app.add_subcommand("predict", "write a decode dump");
  CommonOpts pr_common;
  std::string pr_model, pr_out;
  add_common(predict, pr_common);
  predict->add_option("--model", pr_model, "model file")->required();
  predict->add_option("--out", pr_out, "output TSV path (default stdout)");

  // eval
  auto* eval = app.add_subcommand("eval", "score a model on a labeled corpus");
  CommonOpts ev_common;
  std::string ev_model, ev_json;
  add_common(eval, ev_common);
  eval->add_option("--model", ev_model, "model file")->required();
  eval->add_option("--report-json", ev_json, "machine-readable report path");

  // cv
  auto* cv = app.add_subcommand("cv", "cross-validate / select the state count");
  CvOpts co;
  add_common(cv, co.common);
  cv->add_option("--model-kind", co.kind_str, "bow-lr | feat-lr | feat-perceptron | lsnm")
      ->required();
  cv->add_option("--seed", co.seed, "fold/training seed")->required();
  cv->add_option("--k", co.k, "fold count")->capture_default_str();
  cv->add_option("--h", co.num_states, "latent state count (lsnm)")
      ->capture_default_str();
  cv->add_option("--restarts", co.restarts, "random restarts (lsnm)")
      ->capture_default_str();
  cv->add_option("--epochs", co.epochs, "epoch budget (0 = kind default)");
  cv->add_option("--learning-rate", co.learning_rate, "LR step size")
      ->capture_default_str();
  cv->add_option("--l2", co.l2, "LR L2 strength")->capture_default_str();
  cv->add_flag("--no-average", co.no_average, "disable weight averaging");
  cv->add_option("--candidates", co.candidates,
                 "comma list of H values; prints the selected H");
  cv->add_option("--report-json", co.report_json, "machine-readable report path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed()) {
      return cmd_gen_synth(gen_rule, gen_count, gen_cue_prob, gen_lengths, gen_seed,
                           gen_out);
    }
    if (dump->parsed()) return cmd_dump_features(dump_common, dump_out);
    if (train->parsed()) return cmd_train(to);
    if (predict->parsed()) return cmd_predict(pr_common, pr_model, pr_out);
    if (eval->parsed()) return cmd_eval(ev_common, ev_model, ev_json);
    if (cv->parsed()) return cmd_cv(co);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace desirefill

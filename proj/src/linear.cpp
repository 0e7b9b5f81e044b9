#include "desirefill/linear.hpp"

#include <cmath>

#include "json.hpp"

namespace desirefill {

using nlohmann::ordered_json;

ModelKind model_kind_from_string(const std::string& s) {
  if (s == "bow-lr") return ModelKind::BowLr;
  if (s == "feat-lr") return ModelKind::FeatLr;
  if (s == "feat-perceptron") return ModelKind::FeatPerceptron;
  if (s == "lsnm") return ModelKind::Lsnm;
  throw DataError("unknown model kind '" + s + "'");
}

std::string to_string(ModelKind k) {
  switch (k) {
    case ModelKind::BowLr: return "bow-lr";
    case ModelKind::FeatLr: return "feat-lr";
    case ModelKind::FeatPerceptron: return "feat-perceptron";
    case ModelKind::Lsnm: return "lsnm";
  }
  return "feat-lr";
}

namespace {

double sigmoid(double z) {
  if (z >= 0) {
    return 1.0 / (1.0 + std::exp(-z));
  }
  const double e = std::exp(z);
  return e / (1.0 + e);
}

void check_two_classes(const std::vector<FlatExample>& data) {
  if (data.empty()) throw DataError("degenerate training set: empty corpus");
  bool pos = false, neg = false;
  for (const FlatExample& ex : data) (ex.label ? pos : neg) = true;
  if (!pos || !neg) throw DataError("degenerate training set: single-class corpus");
}

LinearModel train_lr(const std::vector<FlatExample>& data, ModelKind kind,
                     const UnstructuredHyper& hyper) {
  LinearModel m;
  m.kind = kind;
  m.hyper = hyper;
  const double n = static_cast<double>(data.size());
  for (int epoch = 0; epoch < hyper.epochs; ++epoch) {
    FeatureVector grad;
    double grad_b = 0.0;
    for (const FlatExample& ex : data) {
      const double y = ex.label ? 1.0 : 0.0;
      const double p = sigmoid(m.weights.dot(*ex.features) + m.bias);
      grad.add_scaled(*ex.features, (y - p) / n);
      grad_b += (y - p) / n;
    }
    grad.add_scaled(m.weights, -hyper.l2);
    m.weights.add_scaled(grad, hyper.learning_rate);
    m.bias += hyper.learning_rate * grad_b;  // bias unregularized
  }
  return m;
}

LinearModel train_perceptron(const std::vector<FlatExample>& data,
                             const UnstructuredHyper& hyper) {
  LinearModel m;
  m.kind = ModelKind::FeatPerceptron;
  m.hyper = hyper;
  FeatureVector sum_w;
  double sum_b = 0.0;
  long steps = 0;
  for (int epoch = 0; epoch < hyper.epochs; ++epoch) {
    for (const FlatExample& ex : data) {
      const double y = ex.label ? 1.0 : -1.0;
      const double score = m.weights.dot(*ex.features) + m.bias;
      if (y * score <= 0.0) {
        m.weights.add_scaled(*ex.features, y);
        m.bias += y;
      }
      sum_w.add_scaled(m.weights, 1.0);
      sum_b += m.bias;
      ++steps;
    }
  }
  if (hyper.average && steps > 0) {
    FeatureVector avg;
    for (const auto& [k, v] : sum_w.entries()) avg.set(k, v / static_cast<double>(steps));
    m.weights = avg;
    m.bias = sum_b / static_cast<double>(steps);
  }
  return m;
}

}  // namespace

LinearModel train_unstructured(const std::vector<FlatExample>& data,
                               ModelKind kind,
                               const UnstructuredHyper& hyper,
                               std::uint64_t seed) {
  check_two_classes(data);
  LinearModel m;
  switch (kind) {
    case ModelKind::BowLr:
    case ModelKind::FeatLr:
      m = train_lr(data, kind, hyper);
      break;
    case ModelKind::FeatPerceptron:
      m = train_perceptron(data, hyper);
      break;
    case ModelKind::Lsnm:
      throw std::invalid_argument("lsnm is not an unstructured kind");
  }
  m.seed = seed;
  return m;
}

std::pair<bool, double> predict_unstructured(const LinearModel& model,
                                             const FeatureVector& features) {
  const double score = model.weights.dot(features) + model.bias;
  return {score >= 0.0, score};
}

const FeatureVector& model_input(const LinearModel& model, const PreparedInstance& pi) {
  return model.kind == ModelKind::BowLr ? pi.bow : pi.aggregated;
}

std::string linear_model_to_json_string(const LinearModel& model) {
  ordered_json j;
  j["format"] = "desirefill-model";
  j["version"] = 1;
  j["kind"] = to_string(model.kind);
  j["hyper"] = {{"learning_rate", model.hyper.learning_rate},
                {"epochs", model.hyper.epochs},
                {"l2", model.hyper.l2},
                {"average", model.hyper.average}};
  j["seed"] = model.seed;
  j["bias"] = model.bias;
  ordered_json w = ordered_json::object();
  for (const auto& [k, v] : model.weights.entries()) w[k] = v;
  j["weights"] = std::move(w);
  return j.dump(2) + "\n";
}

LinearModel linear_model_from_json_string(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::exception& e) {
    throw DataError(std::string("model file is not valid JSON: ") + e.what());
  }
  try {
    if (j.value("format", std::string{}) != "desirefill-model" || j.at("version") != 1) {
      throw DataError("unsupported model file format/version");
    }
    LinearModel m;
    m.kind = model_kind_from_string(j.at("kind").get<std::string>());
    if (m.kind == ModelKind::Lsnm) {
      throw DataError("model file holds a chain model; load it as one");
    }
    m.hyper.learning_rate = j.at("hyper").at("learning_rate").get<double>();
    m.hyper.epochs = j.at("hyper").at("epochs").get<int>();
    m.hyper.l2 = j.at("hyper").at("l2").get<double>();
    m.hyper.average = j.at("hyper").at("average").get<bool>();
    m.seed = j.at("seed").get<std::uint64_t>();
    m.bias = j.at("bias").get<double>();
    for (const auto& [k, v] : j.at("weights").items()) {
      m.weights.set(k, v.get<double>());
    }
    return m;
  } catch (const DataError&) {
    throw;
  } catch (const ordered_json::exception& e) {
    throw DataError(std::string("malformed model file: ") + e.what());
  }
}

}  // namespace desirefill

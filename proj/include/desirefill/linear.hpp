#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "desirefill/common.hpp"
#include "desirefill/pipeline.hpp"

namespace desirefill {

enum class ModelKind { BowLr, FeatLr, FeatPerceptron, Lsnm };

ModelKind model_kind_from_string(const std::string& s);
std::string to_string(ModelKind k);

struct UnstructuredHyper {
  double learning_rate = 0.1;
  int epochs = 50;
  double l2 = 1e-4;
  bool average = true;  // perceptron only
};

struct LinearModel {
  ModelKind kind = ModelKind::FeatLr;
  FeatureVector weights;
  double bias = 0.0;
  UnstructuredHyper hyper;
  std::uint64_t seed = 0;
};

struct FlatExample {
  const FeatureVector* features = nullptr;
  bool label = false;
};

// Logistic-regression kinds run full-batch gradient descent for the epoch
// budget; the perceptron kind is an averaged perceptron in data order.
// Requires both classes in the training set, otherwise throws DataError
// ("degenerate training set").
LinearModel train_unstructured(const std::vector<FlatExample>& data,
                               ModelKind kind,
                               const UnstructuredHyper& hyper,
                               std::uint64_t seed);

// score = w . phi + bias; label = (score >= 0), so an exact zero predicts the
// positive class.
std::pair<bool, double> predict_unstructured(const LinearModel& model,
                                             const FeatureVector& features);

const FeatureVector& model_input(const LinearModel& model, const PreparedInstance& pi);

std::string linear_model_to_json_string(const LinearModel& model);
LinearModel linear_model_from_json_string(const std::string& text);

}  // namespace desirefill

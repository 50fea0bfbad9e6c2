// Uniform fit/predict surface over the four classifier families plus
// versioned JSON persistence.

#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "cadorder/dataset.hpp"
#include "cadorder/dtree.hpp"
#include "cadorder/knn.hpp"
#include "cadorder/mlp.hpp"
#include "cadorder/svm.hpp"

namespace cadorder {

enum class ModelKind { Knn, DecisionTree, Mlp, Svm };

std::string to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string& s);

// Config parsing from JSON objects; unknown keys are rejected.
KNNConfig knn_config_from_json(const nlohmann::json& j);
DTConfig dt_config_from_json(const nlohmann::json& j);
MLPConfig mlp_config_from_json(const nlohmann::json& j);
SVMConfig svm_config_from_json(const nlohmann::json& j);

using AnyModel = std::variant<KNNModel, DecisionTree, MLPModel, SVMModel>;

// Trains on an already-standardized dataset.
AnyModel fit_raw(ModelKind kind, const nlohmann::json& params, const Dataset& data, uint64_t seed);
int predict_raw_model(const AnyModel& model, const FeatureVector& standardized);

struct ModelMetadata {
  std::string version = "cadorder-model-1";
  uint64_t seed = 0;
  std::string train_hash;
};

// FNV-1a over the dataset bytes, for provenance metadata.
std::string dataset_hash(const Dataset& data);

class TrainedModel {
 public:
  TrainedModel() = default;

  static TrainedModel fit(ModelKind kind, const nlohmann::json& params, const Dataset& standardized,
                          const Standardizer& standardizer, uint64_t seed);

  int predict_standardized(const FeatureVector& v) const;
  int predict(const FeatureVector& raw) const;  // applies the stored standardizer

  ModelKind kind() const { return kind_; }
  const Standardizer& standardizer() const { return standardizer_; }
  const ModelMetadata& metadata() const { return meta_; }
  const AnyModel& model() const { return model_; }
  bool converged() const;

  nlohmann::json to_json() const;
  static TrainedModel from_json(const nlohmann::json& j);

  void save(const std::string& path) const;
  static TrainedModel load(const std::string& path);

 private:
  ModelKind kind_ = ModelKind::Knn;
  Standardizer standardizer_;
  ModelMetadata meta_;
  AnyModel model_;
};

}  // namespace cadorder

#include "cadorder/model.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace cadorder {

using nlohmann::json;

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Knn: return "knn";
    case ModelKind::DecisionTree: return "dt";
    case ModelKind::Mlp: return "mlp";
    case ModelKind::Svm: return "svm";
  }
  return "?";
}

ModelKind model_kind_from_string(const std::string& s) {
  if (s == "knn") return ModelKind::Knn;
  if (s == "dt") return ModelKind::DecisionTree;
  if (s == "mlp") return ModelKind::Mlp;
  if (s == "svm") return ModelKind::Svm;
  throw std::invalid_argument("unknown model kind: " + s);
}

namespace {

void check_keys(const json& j, std::initializer_list<const char*> allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) ok = true;
    if (!ok) throw std::invalid_argument("unknown config key: " + it.key());
  }
}

}  // namespace

KNNConfig knn_config_from_json(const json& j) {
  check_keys(j, {"k", "weighting", "algorithm"});
  KNNConfig c;
  if (j.contains("k")) c.k = j.at("k").get<int>();
  if (j.contains("weighting")) {
    std::string w = j.at("weighting").get<std::string>();
    if (w == "uniform")
      c.weighting = KNNConfig::Weighting::Uniform;
    else if (w == "inverse-distance")
      c.weighting = KNNConfig::Weighting::InverseDistance;
    else
      throw std::invalid_argument("knn weighting: " + w);
  }
  if (j.contains("algorithm")) {
    std::string a = j.at("algorithm").get<std::string>();
    if (a == "brute")
      c.algorithm = KNNConfig::Algorithm::Brute;
    else if (a == "ball-tree")
      c.algorithm = KNNConfig::Algorithm::BallTree;
    else
      throw std::invalid_argument("knn algorithm: " + a);
  }
  return c;
}

DTConfig dt_config_from_json(const json& j) {
  check_keys(j, {"criterion", "max_depth"});
  DTConfig c;
  if (j.contains("criterion")) {
    std::string s = j.at("criterion").get<std::string>();
    if (s == "gini")
      c.criterion = DTConfig::Criterion::Gini;
    else if (s == "entropy")
      c.criterion = DTConfig::Criterion::Entropy;
    else
      throw std::invalid_argument("dt criterion: " + s);
  }
  if (j.contains("max_depth")) c.max_depth = j.at("max_depth").get<int>();
  return c;
}

MLPConfig mlp_config_from_json(const json& j) {
  check_keys(j, {"hidden_size", "activation", "alpha", "max_iter", "tol"});
  MLPConfig c;
  if (j.contains("hidden_size")) c.hidden_size = j.at("hidden_size").get<int>();
  if (j.contains("activation")) {
    std::string a = j.at("activation").get<std::string>();
    if (a == "identity")
      c.activation = MLPConfig::Activation::Identity;
    else if (a == "logistic")
      c.activation = MLPConfig::Activation::Logistic;
    else if (a == "tanh")
      c.activation = MLPConfig::Activation::Tanh;
    else if (a == "relu")
      c.activation = MLPConfig::Activation::Relu;
    else
      throw std::invalid_argument("mlp activation: " + a);
  }
  if (j.contains("alpha")) c.alpha = j.at("alpha").get<double>();
  if (j.contains("max_iter")) c.max_iter = j.at("max_iter").get<int>();
  if (j.contains("tol")) c.tol = j.at("tol").get<double>();
  return c;
}

SVMConfig svm_config_from_json(const json& j) {
  check_keys(j, {"C", "gamma", "tol", "max_passes"});
  SVMConfig c;
  if (j.contains("C")) c.C = j.at("C").get<double>();
  if (j.contains("gamma")) c.gamma = j.at("gamma").get<double>();
  if (j.contains("tol")) c.tol = j.at("tol").get<double>();
  if (j.contains("max_passes")) c.max_passes = j.at("max_passes").get<int>();
  return c;
}

AnyModel fit_raw(ModelKind kind, const json& params, const Dataset& data, uint64_t seed) {
  switch (kind) {
    case ModelKind::Knn: return KNNModel(knn_config_from_json(params), data);
    case ModelKind::DecisionTree: return DecisionTree(dt_config_from_json(params), data);
    case ModelKind::Mlp: return MLPModel::fit(mlp_config_from_json(params), data, seed);
    case ModelKind::Svm: return SVMModel::fit(svm_config_from_json(params), data);
  }
  throw std::logic_error("unreachable");
}

int predict_raw_model(const AnyModel& model, const FeatureVector& v) {
  return std::visit([&](const auto& m) { return m.predict(v); }, model);
}

std::string dataset_hash(const Dataset& data) {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&](const void* ptr, size_t len) {
    const unsigned char* p = static_cast<const unsigned char*>(ptr);
    for (size_t i = 0; i < len; ++i) {
      h ^= p[i];
      h *= 1099511628211ull;
    }
  };
  for (size_t i = 0; i < data.size(); ++i) {
    mix(data.features[i].data(), sizeof(double) * kNumFeatures);
    mix(&data.labels[i], sizeof(int));
  }
  char buf[17];
  snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

TrainedModel TrainedModel::fit(ModelKind kind, const json& params, const Dataset& standardized,
                               const Standardizer& standardizer, uint64_t seed) {
  TrainedModel m;
  m.kind_ = kind;
  m.standardizer_ = standardizer;
  m.meta_.seed = seed;
  m.meta_.train_hash = dataset_hash(standardized);
  m.model_ = fit_raw(kind, params, standardized, seed);
  return m;
}

int TrainedModel::predict_standardized(const FeatureVector& v) const {
  return predict_raw_model(model_, v);
}

int TrainedModel::predict(const FeatureVector& raw) const {
  return predict_standardized(transform(standardizer_, raw));
}

bool TrainedModel::converged() const {
  if (const auto* m = std::get_if<MLPModel>(&model_)) return m->converged();
  if (const auto* m = std::get_if<SVMModel>(&model_)) return m->converged();
  return true;
}

namespace {

json standardizer_to_json(const Standardizer& s) {
  return json{{"mean", s.mean}, {"std", s.std}};
}

Standardizer standardizer_from_json(const json& j) {
  Standardizer s;
  auto mean = j.at("mean").get<std::vector<double>>();
  auto sd = j.at("std").get<std::vector<double>>();
  if (mean.size() != kNumFeatures || sd.size() != kNumFeatures)
    throw std::invalid_argument("standardizer size mismatch");
  std::copy(mean.begin(), mean.end(), s.mean.begin());
  std::copy(sd.begin(), sd.end(), s.std.begin());
  return s;
}

json knn_to_json(const KNNModel& m) {
  json rows = json::array();
  for (const auto& f : m.data().features) rows.push_back(f);
  return json{
      {"config",
       {{"k", m.config().k},
        {"weighting",
         m.config().weighting == KNNConfig::Weighting::Uniform ? "uniform" : "inverse-distance"},
        {"algorithm", m.config().algorithm == KNNConfig::Algorithm::Brute ? "brute" : "ball-tree"}}},
      {"features", rows},
      {"labels", m.data().labels}};
}

KNNModel knn_from_json(const json& j) {
  Dataset d;
  for (const auto& row : j.at("features")) {
    auto v = row.get<std::vector<double>>();
    FeatureVector f{};
    std::copy(v.begin(), v.end(), f.begin());
    d.features.push_back(f);
  }
  d.labels = j.at("labels").get<std::vector<int>>();
  return KNNModel(knn_config_from_json(j.at("config")), std::move(d));
}

json dt_to_json(const DecisionTree& m) {
  json nodes = json::array();
  for (const auto& n : m.nodes())
    nodes.push_back({{"feature", n.feature},
                     {"threshold", n.threshold},
                     {"left", n.left},
                     {"right", n.right},
                     {"label", n.label}});
  return json{{"config",
               {{"criterion", m.config().criterion == DTConfig::Criterion::Gini ? "gini" : "entropy"},
                {"max_depth", m.config().max_depth}}},
              {"nodes", nodes}};
}

DecisionTree dt_from_json(const json& j) {
  std::vector<DecisionTree::Node> nodes;
  for (const auto& n : j.at("nodes")) {
    DecisionTree::Node node;
    node.feature = n.at("feature").get<int>();
    node.threshold = n.at("threshold").get<double>();
    node.left = n.at("left").get<int>();
    node.right = n.at("right").get<int>();
    node.label = n.at("label").get<int>();
    nodes.push_back(node);
  }
  DecisionTree t;
  t.set_state(dt_config_from_json(j.at("config")), std::move(nodes));
  return t;
}

const char* activation_name(MLPConfig::Activation a) {
  switch (a) {
    case MLPConfig::Activation::Identity: return "identity";
    case MLPConfig::Activation::Logistic: return "logistic";
    case MLPConfig::Activation::Tanh: return "tanh";
    case MLPConfig::Activation::Relu: return "relu";
  }
  return "?";
}

json mlp_to_json(const MLPModel& m) {
  return json{{"config",
               {{"hidden_size", m.config().hidden_size},
                {"activation", activation_name(m.config().activation)},
                {"alpha", m.config().alpha},
                {"max_iter", m.config().max_iter},
                {"tol", m.config().tol}}},
              {"params", m.params()},
              {"converged", m.converged()}};
}

MLPModel mlp_from_json(const json& j) {
  MLPModel m;
  m.set_state(mlp_config_from_json(j.at("config")), j.at("params").get<std::vector<double>>(),
              j.at("converged").get<bool>());
  return m;
}

json svm_to_json(const SVMModel& m) {
  json pairs = json::array();
  for (const auto& p : m.pairs()) {
    json sv = json::array();
    for (const auto& v : p.svm.support_vectors) sv.push_back(v);
    pairs.push_back({{"class_lo", p.class_lo},
                     {"class_hi", p.class_hi},
                     {"alpha", p.svm.alpha},
                     {"bias", p.svm.bias},
                     {"converged", p.svm.converged},
                     {"support_vectors", sv},
                     {"support_coef", p.svm.support_coef}});
  }
  return json{{"config",
               {{"C", m.config().C},
                {"gamma", m.config().gamma},
                {"tol", m.config().tol},
                {"max_passes", m.config().max_passes}}},
              {"pairs", pairs},
              {"converged", m.converged()}};
}

SVMModel svm_from_json(const json& j) {
  std::vector<SVMModel::Pair> pairs;
  for (const auto& p : j.at("pairs")) {
    SVMModel::Pair pair;
    pair.class_lo = p.at("class_lo").get<int>();
    pair.class_hi = p.at("class_hi").get<int>();
    pair.svm.alpha = p.at("alpha").get<std::vector<double>>();
    pair.svm.bias = p.at("bias").get<double>();
    pair.svm.converged = p.at("converged").get<bool>();
    for (const auto& row : p.at("support_vectors")) {
      auto v = row.get<std::vector<double>>();
      FeatureVector f{};
      std::copy(v.begin(), v.end(), f.begin());
      pair.svm.support_vectors.push_back(f);
    }
    pair.svm.support_coef = p.at("support_coef").get<std::vector<double>>();
    pairs.push_back(std::move(pair));
  }
  SVMModel m;
  m.set_state(svm_config_from_json(j.at("config")), std::move(pairs), j.at("converged").get<bool>());
  return m;
}

}  // namespace

json TrainedModel::to_json() const {
  json j;
  j["version"] = meta_.version;
  j["kind"] = cadorder::to_string(kind_);
  j["standardizer"] = standardizer_to_json(standardizer_);
  j["metadata"] = {{"seed", meta_.seed}, {"train_hash", meta_.train_hash}};
  switch (kind_) {
    case ModelKind::Knn: j["model"] = knn_to_json(std::get<KNNModel>(model_)); break;
    case ModelKind::DecisionTree: j["model"] = dt_to_json(std::get<DecisionTree>(model_)); break;
    case ModelKind::Mlp: j["model"] = mlp_to_json(std::get<MLPModel>(model_)); break;
    case ModelKind::Svm: j["model"] = svm_to_json(std::get<SVMModel>(model_)); break;
  }
  return j;
}

TrainedModel TrainedModel::from_json(const json& j) {
  TrainedModel m;
  std::string version = j.at("version").get<std::string>();
  if (version != m.meta_.version)
    throw std::invalid_argument("unsupported model file version: " + version);
  m.kind_ = model_kind_from_string(j.at("kind").get<std::string>());
  m.standardizer_ = standardizer_from_json(j.at("standardizer"));
  m.meta_.seed = j.at("metadata").at("seed").get<uint64_t>();
  m.meta_.train_hash = j.at("metadata").at("train_hash").get<std::string>();
  const json& mj = j.at("model");
  switch (m.kind_) {
    case ModelKind::Knn: m.model_ = knn_from_json(mj); break;
    case ModelKind::DecisionTree: m.model_ = dt_from_json(mj); break;
    case ModelKind::Mlp: m.model_ = mlp_from_json(mj); break;
    case ModelKind::Svm: m.model_ = svm_from_json(mj); break;
  }
  return m;
}

void TrainedModel::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write model file: " + path);
  out << to_json().dump(2) << "\n";
}

TrainedModel TrainedModel::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read model file: " + path);
  json j;
  in >> j;
  return from_json(j);
}

}  // namespace cadorder

#include "cadorder/cv.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cadorder/rng.hpp"

namespace cadorder {

using nlohmann::json;

std::vector<Fold> kfold_split(size_t n, int k, uint64_t seed) {
  if (k < 1 || static_cast<size_t>(k) > n) throw std::invalid_argument("kfold: need 1 <= k <= n");
  std::vector<size_t> idx(n);
  for (size_t i = 0; i < n; ++i) idx[i] = i;
  Rng rng(seed);
  rng.shuffle(idx);

  std::vector<Fold> folds(static_cast<size_t>(k));
  // Deal the shuffled indices round-robin so fold sizes differ by <= 1.
  for (size_t i = 0; i < n; ++i)
    folds[i % static_cast<size_t>(k)].validation.push_back(idx[i]);
  for (auto& f : folds) {
    std::sort(f.validation.begin(), f.validation.end());
    for (size_t i = 0; i < n; ++i)
      if (!std::binary_search(f.validation.begin(), f.validation.end(), i)) f.train.push_back(i);
  }
  return folds;
}

namespace {

std::vector<json> expand_grid(const ParamGrid& grid) {
  std::vector<json> points{json::object()};
  for (const auto& [name, values] : grid) {
    if (values.empty()) throw std::invalid_argument("grid: empty value list for " + name);
    std::vector<json> next;
    for (const auto& p : points) {
      for (const auto& v : values) {
        json q = p;
        q[name] = v;
        next.push_back(std::move(q));
      }
    }
    points = std::move(next);
  }
  return points;
}

}  // namespace

GridSearchResult grid_search(ModelKind kind, const ParamGrid& grid, const Dataset& data, int k,
                             uint64_t seed) {
  if (grid.empty()) throw std::invalid_argument("grid: empty grid");
  data.validate();
  auto points = expand_grid(grid);
  auto folds = kfold_split(data.size(), k, seed);
  Rng root(seed);

  GridSearchResult result;
  result.best_accuracy = -1;
  for (size_t pi = 0; pi < points.size(); ++pi) {
    GridPoint gp;
    gp.params = points[pi];
    double sum = 0;
    for (size_t fi = 0; fi < folds.size(); ++fi) {
      Dataset train = data.subset(folds[fi].train);
      uint64_t fit_seed = root.child(pi * folds.size() + fi).next_u64();
      AnyModel model = fit_raw(kind, gp.params, train, fit_seed);
      size_t correct = 0;
      for (size_t i : folds[fi].validation)
        if (predict_raw_model(model, data.features[i]) == data.labels[i]) ++correct;
      double acc = static_cast<double>(correct) / static_cast<double>(folds[fi].validation.size());
      gp.fold_accuracy.push_back(acc);
      sum += acc;
    }
    gp.mean_accuracy = sum / static_cast<double>(folds.size());
    if (gp.mean_accuracy > result.best_accuracy) {
      result.best_accuracy = gp.mean_accuracy;
      result.best_params = gp.params;
    }
    result.table.push_back(std::move(gp));
  }

  for (const auto& [name, values] : grid) {
    if (values.size() < 2 || !values.front().is_number()) continue;
    const json& chosen = result.best_params.at(name);
    if (chosen == values.front() || chosen == values.back())
      result.boundary_warnings.push_back("optimal value for '" + name + "' (" + chosen.dump() +
                                         ") lies on the grid boundary; widen the range");
  }
  return result;
}

std::string GridSearchResult::table_csv() const {
  std::ostringstream os;
  if (table.empty()) return "";
  std::vector<std::string> names;
  for (auto it = table[0].params.begin(); it != table[0].params.end(); ++it) names.push_back(it.key());
  for (const auto& n : names) os << n << ",";
  for (size_t f = 0; f < table[0].fold_accuracy.size(); ++f) os << "fold" << f + 1 << ",";
  os << "mean_accuracy\n";
  os.precision(17);
  for (const auto& gp : table) {
    for (const auto& n : names) {
      const json& v = gp.params.at(n);
      os << (v.is_string() ? v.get<std::string>() : v.dump()) << ",";
    }
    for (double a : gp.fold_accuracy) os << a << ",";
    os << gp.mean_accuracy << "\n";
  }
  return os.str();
}

ParamGrid default_grid(ModelKind kind) {
  switch (kind) {
    case ModelKind::Knn:
      return {{"k", {1, 3, 5, 9, 15}},
              {"weighting", {"uniform", "inverse-distance"}},
              {"algorithm", {"ball-tree"}}};
    case ModelKind::DecisionTree:
      return {{"criterion", {"gini", "entropy"}}, {"max_depth", {5, 11, 17, 23}}};
    case ModelKind::Mlp:
      return {{"hidden_size", {6, 12, 18, 24}},
              {"activation", {"tanh"}},
              {"alpha", {5e-6, 5e-5, 5e-4}}};
    case ModelKind::Svm:
      return {{"C", {31.6, 100.0, 316.0, 1000.0}}, {"gamma", {0.025, 0.08, 0.25}}, {"tol", {0.0316}}};
  }
  throw std::logic_error("unreachable");
}

}  // namespace cadorder

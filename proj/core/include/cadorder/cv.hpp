// k-fold cross-validation and exhaustive hyperparameter grid search.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cadorder/dataset.hpp"
#include "cadorder/model.hpp"

namespace cadorder {

struct Fold {
  std::vector<size_t> train;
  std::vector<size_t> validation;
};

// k disjoint folds covering [0, n), sizes differing by at most 1,
// shuffled deterministically by seed.
std::vector<Fold> kfold_split(size_t n, int k, uint64_t seed);

// Value lists per hyperparameter name; expanded as a cartesian product in
// deterministic (name, list) order.
using ParamGrid = std::map<std::string, std::vector<nlohmann::json>>;

struct GridPoint {
  nlohmann::json params;
  std::vector<double> fold_accuracy;
  double mean_accuracy = 0;
};

struct GridSearchResult {
  nlohmann::json best_params;
  double best_accuracy = 0;
  std::vector<GridPoint> table;
  // One entry per numeric hyperparameter whose optimum sits on the edge
  // of its value list.
  std::vector<std::string> boundary_warnings;

  std::string table_csv() const;
};

GridSearchResult grid_search(ModelKind kind, const ParamGrid& grid, const Dataset& data, int k,
                             uint64_t seed);

// Table-3-centered default grids.
ParamGrid default_grid(ModelKind kind);

}  // namespace cadorder

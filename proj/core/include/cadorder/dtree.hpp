// CART-style decision tree classifier grown greedily to a depth bound.
// Split search is exhaustive over features and midpoints between
// consecutive distinct sorted values; ties break toward the lower feature
// index then lower threshold.

#pragma once

#include <vector>

#include "cadorder/dataset.hpp"

namespace cadorder {

struct DTConfig {
  enum class Criterion { Gini, Entropy } criterion = Criterion::Gini;
  int max_depth = 17;
};

// Impurities of a label multiset; exposed for direct checks.
double gini_impurity(const std::vector<size_t>& class_counts);
double entropy_impurity(const std::vector<size_t>& class_counts);

class DecisionTree {
 public:
  struct Node {
    int feature = -1;  // -1 for leaves
    double threshold = 0;
    int left = -1;
    int right = -1;
    int label = 0;  // majority label (valid for every node)
    bool is_leaf() const { return feature < 0; }
  };

  DecisionTree() = default;
  DecisionTree(DTConfig config, const Dataset& data);

  int predict(const FeatureVector& v) const;

  const DTConfig& config() const { return config_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  void set_state(DTConfig config, std::vector<Node> nodes);  // deserialization

 private:
  DTConfig config_;
  std::vector<Node> nodes_;

  int grow(const Dataset& data, std::vector<size_t> idx, int depth);
};

}  // namespace cadorder

// Instance-based k-nearest-neighbour classifier with brute-force and
// ball-tree query paths; the two must agree exactly.

#pragma once

#include <memory>
#include <vector>

#include "cadorder/dataset.hpp"

namespace cadorder {

struct KNNConfig {
  int k = 3;
  enum class Weighting { Uniform, InverseDistance } weighting = Weighting::InverseDistance;
  enum class Algorithm { Brute, BallTree } algorithm = Algorithm::BallTree;
};

class BallTree {
 public:
  explicit BallTree(const std::vector<FeatureVector>& points, size_t leaf_size = 16);

  // Indices of the k nearest points, closest first; distance ties broken
  // by lower index.
  std::vector<size_t> query(const FeatureVector& q, size_t k) const;

 private:
  struct Node {
    FeatureVector centroid{};
    double radius = 0;
    std::vector<size_t> indices;  // leaves only
    int left = -1;
    int right = -1;
    bool is_leaf() const { return left < 0; }
  };

  std::vector<FeatureVector> points_;
  std::vector<Node> nodes_;

  int build(std::vector<size_t> idx, size_t leaf_size);
};

class KNNModel {
 public:
  KNNModel() = default;
  KNNModel(KNNConfig config, Dataset data);

  int predict(const FeatureVector& v) const;

  const KNNConfig& config() const { return config_; }
  const Dataset& data() const { return data_; }

  // Neighbour lookup honoring config().algorithm; exposed for the
  // brute/ball-tree equivalence check.
  std::vector<size_t> neighbours(const FeatureVector& v) const;

 private:
  KNNConfig config_;
  Dataset data_;
  std::shared_ptr<const BallTree> tree_;  // built once; model stays copyable
};

}  // namespace cadorder

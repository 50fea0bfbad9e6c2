#include "cadorder/dtree.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cadorder {

double gini_impurity(const std::vector<size_t>& class_counts) {
  size_t n = 0;
  for (size_t c : class_counts) n += c;
  if (n == 0) return 0;
  double sum_sq = 0;
  for (size_t c : class_counts) {
    double p = static_cast<double>(c) / static_cast<double>(n);
    sum_sq += p * p;
  }
  return 1.0 - sum_sq;
}

double entropy_impurity(const std::vector<size_t>& class_counts) {
  size_t n = 0;
  for (size_t c : class_counts) n += c;
  if (n == 0) return 0;
  double h = 0;
  for (size_t c : class_counts) {
    if (c == 0) continue;
    double p = static_cast<double>(c) / static_cast<double>(n);
    h -= p * std::log2(p);
  }
  return h;
}

namespace {

double impurity(DTConfig::Criterion crit, const std::vector<size_t>& counts) {
  return crit == DTConfig::Criterion::Gini ? gini_impurity(counts) : entropy_impurity(counts);
}

int majority_label(const std::vector<size_t>& counts) {
  int best = 0;
  for (int c = 1; c < static_cast<int>(counts.size()); ++c)
    if (counts[static_cast<size_t>(c)] > counts[static_cast<size_t>(best)]) best = c;
  return best;
}

}  // namespace

DecisionTree::DecisionTree(DTConfig config, const Dataset& data) : config_(config) {
  data.validate();
  if (config.max_depth < 1) throw std::invalid_argument("dtree: max_depth must be >= 1");
  std::vector<size_t> idx(data.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  grow(data, std::move(idx), 0);
}

int DecisionTree::grow(const Dataset& data, std::vector<size_t> idx, int depth) {
  std::vector<size_t> counts(kNumOrderings, 0);
  for (size_t i : idx) ++counts[static_cast<size_t>(data.labels[i])];
  int node_id = static_cast<int>(nodes_.size());
  nodes_.emplace_back();
  nodes_[static_cast<size_t>(node_id)].label = majority_label(counts);

  double node_impurity = impurity(config_.criterion, counts);
  if (node_impurity == 0.0 || depth >= config_.max_depth) return node_id;

  // Exhaustive split search, weighted child impurity.
  int best_feature = -1;
  double best_threshold = 0;
  double best_score = node_impurity;
  const double n = static_cast<double>(idx.size());
  for (int f = 0; f < kNumFeatures; ++f) {
    std::vector<std::pair<double, int>> vals;  // (value, label)
    vals.reserve(idx.size());
    for (size_t i : idx) vals.emplace_back(data.features[i][static_cast<size_t>(f)], data.labels[i]);
    std::sort(vals.begin(), vals.end());
    std::vector<size_t> left(kNumOrderings, 0);
    std::vector<size_t> right = counts;
    for (size_t i = 0; i + 1 < vals.size(); ++i) {
      ++left[static_cast<size_t>(vals[i].second)];
      --right[static_cast<size_t>(vals[i].second)];
      if (vals[i].first == vals[i + 1].first) continue;
      double threshold = vals[i].first + (vals[i + 1].first - vals[i].first) / 2;
      double nl = static_cast<double>(i + 1);
      double score = (nl / n) * impurity(config_.criterion, left) +
                     ((n - nl) / n) * impurity(config_.criterion, right);
      if (score < best_score) {
        best_score = score;
        best_feature = f;
        best_threshold = threshold;
      }
    }
  }
  if (best_feature < 0) return node_id;  // no improving split

  std::vector<size_t> left_idx, right_idx;
  for (size_t i : idx) {
    if (data.features[i][static_cast<size_t>(best_feature)] <= best_threshold)
      left_idx.push_back(i);
    else
      right_idx.push_back(i);
  }
  if (left_idx.empty() || right_idx.empty()) return node_id;

  int l = grow(data, std::move(left_idx), depth + 1);
  int r = grow(data, std::move(right_idx), depth + 1);
  Node& node = nodes_[static_cast<size_t>(node_id)];
  node.feature = best_feature;
  node.threshold = best_threshold;
  node.left = l;
  node.right = r;
  return node_id;
}

int DecisionTree::predict(const FeatureVector& v) const {
  if (nodes_.empty()) throw std::logic_error("dtree: empty tree");
  int id = 0;
  while (!nodes_[static_cast<size_t>(id)].is_leaf()) {
    const Node& n = nodes_[static_cast<size_t>(id)];
    id = v[static_cast<size_t>(n.feature)] <= n.threshold ? n.left : n.right;
  }
  return nodes_[static_cast<size_t>(id)].label;
}

void DecisionTree::set_state(DTConfig config, std::vector<Node> nodes) {
  config_ = config;
  nodes_ = std::move(nodes);
}

}  // namespace cadorder

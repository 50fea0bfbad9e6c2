#include "cadorder/knn.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace cadorder {

BallTree::BallTree(const std::vector<FeatureVector>& points, size_t leaf_size) : points_(points) {
  std::vector<size_t> idx(points.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  if (!idx.empty()) build(std::move(idx), leaf_size);
}

int BallTree::build(std::vector<size_t> idx, size_t leaf_size) {
  int node_id = static_cast<int>(nodes_.size());
  nodes_.emplace_back();

  FeatureVector centroid{};
  for (size_t i : idx)
    for (size_t j = 0; j < kNumFeatures; ++j) centroid[j] += points_[i][j];
  for (size_t j = 0; j < kNumFeatures; ++j) centroid[j] /= static_cast<double>(idx.size());
  double radius_sq = 0;
  for (size_t i : idx) radius_sq = std::max(radius_sq, squared_distance(centroid, points_[i]));

  nodes_[static_cast<size_t>(node_id)].centroid = centroid;
  nodes_[static_cast<size_t>(node_id)].radius = std::sqrt(radius_sq);

  if (idx.size() <= leaf_size) {
    std::sort(idx.begin(), idx.end());
    nodes_[static_cast<size_t>(node_id)].indices = std::move(idx);
    return node_id;
  }

  // Split along the dimension of largest spread, at the median.
  size_t dim = 0;
  double best_spread = -1;
  for (size_t j = 0; j < kNumFeatures; ++j) {
    double lo = points_[idx[0]][j], hi = lo;
    for (size_t i : idx) {
      lo = std::min(lo, points_[i][j]);
      hi = std::max(hi, points_[i][j]);
    }
    if (hi - lo > best_spread) {
      best_spread = hi - lo;
      dim = j;
    }
  }
  size_t mid = idx.size() / 2;
  std::nth_element(idx.begin(), idx.begin() + static_cast<long>(mid), idx.end(),
                   [&](size_t a, size_t b) {
                     double va = points_[a][dim], vb = points_[b][dim];
                     return va != vb ? va < vb : a < b;
                   });
  std::vector<size_t> left(idx.begin(), idx.begin() + static_cast<long>(mid));
  std::vector<size_t> right(idx.begin() + static_cast<long>(mid), idx.end());
  int l = build(std::move(left), leaf_size);
  int r = build(std::move(right), leaf_size);
  nodes_[static_cast<size_t>(node_id)].left = l;
  nodes_[static_cast<size_t>(node_id)].right = r;
  return node_id;
}

std::vector<size_t> BallTree::query(const FeatureVector& q, size_t k) const {
  using Entry = std::pair<double, size_t>;  // (distance, index), max-heap
  std::priority_queue<Entry> heap;

  auto consider = [&](size_t i) {
    Entry e{std::sqrt(squared_distance(q, points_[i])), i};
    if (heap.size() < k) {
      heap.push(e);
    } else if (e < heap.top()) {
      heap.pop();
      heap.push(e);
    }
  };

  // Depth-first with radius pruning; ties at the cutoff distance keep the
  // lower index, matching the brute-force (distance, index) order.
  auto lower_bound = [&](int node) {
    const Node& n = nodes_[static_cast<size_t>(node)];
    return std::sqrt(squared_distance(q, n.centroid)) - n.radius;
  };
  std::vector<int> stack;
  if (!nodes_.empty()) stack.push_back(0);
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    const Node& n = nodes_[static_cast<size_t>(id)];
    if (heap.size() == k && lower_bound(id) > heap.top().first) continue;
    if (n.is_leaf()) {
      for (size_t i : n.indices) consider(i);
    } else {
      // Nearer child first.
      int a = n.left, b = n.right;
      if (lower_bound(b) < lower_bound(a)) std::swap(a, b);
      stack.push_back(b);
      stack.push_back(a);
    }
  }

  std::vector<Entry> out;
  while (!heap.empty()) {
    out.push_back(heap.top());
    heap.pop();
  }
  std::sort(out.begin(), out.end());
  std::vector<size_t> result;
  for (const auto& [d, i] : out) result.push_back(i);
  return result;
}

KNNModel::KNNModel(KNNConfig config, Dataset data) : config_(config), data_(std::move(data)) {
  data_.validate();
  if (config_.k < 1 || static_cast<size_t>(config_.k) > data_.size())
    throw std::invalid_argument("knn: k must be in [1, N]");
  if (config_.algorithm == KNNConfig::Algorithm::BallTree)
    tree_ = std::make_shared<BallTree>(data_.features);
}

std::vector<size_t> KNNModel::neighbours(const FeatureVector& v) const {
  const size_t k = static_cast<size_t>(config_.k);
  if (config_.algorithm == KNNConfig::Algorithm::BallTree) return tree_->query(v, k);
  std::vector<std::pair<double, size_t>> dist;
  dist.reserve(data_.size());
  for (size_t i = 0; i < data_.size(); ++i)
    dist.emplace_back(std::sqrt(squared_distance(v, data_.features[i])), i);
  std::sort(dist.begin(), dist.end());
  std::vector<size_t> out;
  for (size_t i = 0; i < k; ++i) out.push_back(dist[i].second);
  return out;
}

int KNNModel::predict(const FeatureVector& v) const {
  for (double x : v)
    if (!std::isfinite(x)) throw std::invalid_argument("knn: non-finite feature");
  std::vector<size_t> nn = neighbours(v);
  std::array<double, kNumOrderings> votes{};
  if (config_.weighting == KNNConfig::Weighting::InverseDistance) {
    // Exact match: the stored label wins outright.
    for (size_t i : nn)
      if (squared_distance(v, data_.features[i]) == 0.0) return data_.labels[static_cast<size_t>(i)];
    for (size_t i : nn)
      votes[static_cast<size_t>(data_.labels[i])] +=
          1.0 / std::sqrt(squared_distance(v, data_.features[i]));
  } else {
    for (size_t i : nn) votes[static_cast<size_t>(data_.labels[i])] += 1.0;
  }
  int best = 0;
  for (int c = 1; c < kNumOrderings; ++c)
    if (votes[static_cast<size_t>(c)] > votes[static_cast<size_t>(best)]) best = c;
  return best;
}

}  // namespace cadorder

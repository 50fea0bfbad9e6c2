#pragma once

#include <stdexcept>
#include <vector>

#include "cadorder/features.hpp"
#include "cadorder/ordering.hpp"

namespace cadorder {

// Standardized feature rows with one target ordering per row.
struct Dataset {
  std::vector<FeatureVector> features;
  std::vector<int> labels;  // OrderingId indices

  size_t size() const { return features.size(); }

  void validate() const {
    if (features.size() != labels.size()) throw std::invalid_argument("row/label count mismatch");
    if (features.empty()) throw std::invalid_argument("empty dataset");
    for (int y : labels)
      if (y < 0 || y >= kNumOrderings) throw std::invalid_argument("label out of range");
  }

  Dataset subset(const std::vector<size_t>& idx) const {
    Dataset d;
    d.features.reserve(idx.size());
    d.labels.reserve(idx.size());
    for (size_t i : idx) {
      d.features.push_back(features[i]);
      d.labels.push_back(labels[i]);
    }
    return d;
  }
};

inline double squared_distance(const FeatureVector& a, const FeatureVector& b) {
  double s = 0;
  for (size_t j = 0; j < a.size(); ++j) {
    double d = a[j] - b[j];
    s += d * d;
  }
  return s;
}

}  // namespace cadorder

#include "cadorder/ordering.hpp"

#include <algorithm>

namespace cadorder {

OrderingId OrderingId::from_permutation(const std::array<int, 3>& elim) {
  for (int i = 0; i < kNumOrderings; ++i)
    if (kTable[static_cast<size_t>(i)] == elim) return OrderingId(i);
  throw std::invalid_argument("not a permutation of (x0,x1,x2)");
}

std::string OrderingId::to_string() const {
  auto e = elimination();
  return variable_name(e[0]) + "," + variable_name(e[1]) + "," + variable_name(e[2]);
}

OrderingSet::OrderingSet(std::vector<int> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  if (indices_.empty()) throw std::invalid_argument("empty ordering set");
  if (indices_.front() < 0 || indices_.back() >= kNumOrderings)
    throw std::invalid_argument("ordering index out of range");
}

bool OrderingSet::contains(int index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

OrderingSet OrderingSet::all() { return OrderingSet({0, 1, 2, 3, 4, 5}); }

}  // namespace cadorder

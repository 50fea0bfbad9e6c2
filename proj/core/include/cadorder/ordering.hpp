#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "cadorder/poly.hpp"

namespace cadorder {

inline constexpr int kNumOrderings = 6;

// One of the 6 elimination orders of 3 variables.  The first variable in
// the permutation is projected away first.
//
// Canonical table:
//   0=(x0,x1,x2) 1=(x0,x2,x1) 2=(x1,x0,x2) 3=(x1,x2,x0) 4=(x2,x0,x1) 5=(x2,x1,x0)
class OrderingId {
 public:
  explicit OrderingId(int index) : index_(index) {
    if (index < 0 || index >= kNumOrderings) throw std::invalid_argument("ordering index out of range");
  }

  static OrderingId from_permutation(const std::array<int, 3>& elim);

  int index() const { return index_; }
  std::array<int, 3> elimination() const { return kTable[static_cast<size_t>(index_)]; }

  // "x2,x1,x0" style, first-eliminated first.
  std::string to_string() const;

  friend auto operator<=>(const OrderingId&, const OrderingId&) = default;

 private:
  static constexpr std::array<std::array<int, 3>, kNumOrderings> kTable = {{
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
  }};
  int index_;
};

// Non-empty, sorted, duplicate-free subset of the 6 orderings.
class OrderingSet {
 public:
  explicit OrderingSet(std::vector<int> indices);

  const std::vector<int>& indices() const { return indices_; }
  bool contains(int index) const;
  size_t size() const { return indices_.size(); }
  int lowest() const { return indices_.front(); }

  static OrderingSet all();

  friend bool operator==(const OrderingSet&, const OrderingSet&) = default;

 private:
  std::vector<int> indices_;
};

}  // namespace cadorder

// Collins-style projection: one level maps a polynomial set to the
// canonical union of all coefficients, discriminants and pairwise
// resultants with respect to the eliminated variable.

#pragma once

#include <vector>

#include "cadorder/ordering.hpp"
#include "cadorder/problem.hpp"

namespace cadorder {

struct ProjectionLevels {
  // levels[0] is the input set; levels[k] is the projection of
  // levels[k-1] along the k-th eliminated variable.
  std::vector<std::vector<Polynomial>> levels;
};

// Polynomials of degree 0 in var pass through unchanged.  Output is
// canonical: primitive parts, no constants, no duplicates, sorted.
std::vector<Polynomial> project_once(const std::vector<Polynomial>& polys, int var);

// Three levels for three variables; the last level is univariate in the
// final variable of the elimination order.
ProjectionLevels projection_levels(const Problem& problem, OrderingId ordering);

}  // namespace cadorder

#pragma once

#include <string>
#include <vector>

#include "cadorder/poly.hpp"

namespace cadorder {

// An identified set of polynomials over a fixed variable space; the unit
// passed to heuristics, feature extraction and labeling.
struct Problem {
  std::string id;
  int num_vars = kDefaultNumVars;
  std::vector<Polynomial> polynomials;
};

// Primitive parts (sign-normalized), constants and duplicates dropped,
// deterministic order.  Throws std::invalid_argument when nothing survives.
Problem make_problem(std::string id, int num_vars, std::vector<Polynomial> polys);

}  // namespace cadorder

#include "cadorder/problem.hpp"

#include <algorithm>

namespace cadorder {

Problem make_problem(std::string id, int num_vars, std::vector<Polynomial> polys) {
  std::vector<Polynomial> canon;
  for (auto& p : polys) {
    if (p.is_constant()) continue;
    canon.push_back(p.primitive_part());
  }
  std::sort(canon.begin(), canon.end(),
            [](const Polynomial& a, const Polynomial& b) { return a.less_than(b); });
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  if (canon.empty())
    throw std::invalid_argument("problem '" + id + "': empty polynomial set after filtering");
  return Problem{std::move(id), num_vars, std::move(canon)};
}

}  // namespace cadorder

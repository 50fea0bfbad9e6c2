#include "cadorder/projection.hpp"

#include <algorithm>

namespace cadorder {

namespace {

void add_canonical(std::vector<Polynomial>& out, const Polynomial& p) {
  if (p.is_constant()) return;
  out.push_back(p.primitive_part());
}

}  // namespace

std::vector<Polynomial> project_once(const std::vector<Polynomial>& polys, int var) {
  std::vector<Polynomial> out;
  for (const auto& p : polys) {
    int d = p.degree_in(var);
    if (d == 0) {
      add_canonical(out, p);
      continue;
    }
    for (int k = 0; k <= d; ++k) add_canonical(out, p.coefficient_of(var, k));
    if (d >= 2) add_canonical(out, discriminant(p, var));
  }
  for (size_t i = 0; i < polys.size(); ++i) {
    if (polys[i].degree_in(var) < 1) continue;
    for (size_t j = i + 1; j < polys.size(); ++j) {
      if (polys[j].degree_in(var) < 1) continue;
      add_canonical(out, resultant(polys[i], polys[j], var));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Polynomial& a, const Polynomial& b) { return a.less_than(b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ProjectionLevels projection_levels(const Problem& problem, OrderingId ordering) {
  ProjectionLevels result;
  result.levels.push_back(problem.polynomials);
  auto elim = ordering.elimination();
  for (int k = 0; k + 1 < problem.num_vars; ++k)
    result.levels.push_back(project_once(result.levels.back(), elim[static_cast<size_t>(k)]));
  return result;
}

}  // namespace cadorder

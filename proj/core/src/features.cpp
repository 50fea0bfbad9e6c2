#include "cadorder/features.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cadorder {

FeatureVector extract_features(const Problem& problem) {
  if (problem.polynomials.empty()) throw std::invalid_argument("empty polynomial list");
  const auto& polys = problem.polynomials;
  FeatureVector f{};
  f[0] = static_cast<double>(polys.size());
  int max_td = 0;
  std::array<int, 3> max_deg{};
  std::array<int, 3> polys_with{};
  std::array<long, 3> monomials_with{};
  long total_monomials = 0;
  for (const auto& p : polys) {
    max_td = std::max(max_td, p.total_degree());
    for (int v = 0; v < 3; ++v) {
      max_deg[static_cast<size_t>(v)] = std::max(max_deg[static_cast<size_t>(v)], p.degree_in(v));
      if (p.contains_var(v)) ++polys_with[static_cast<size_t>(v)];
    }
    for (const auto& t : p.terms()) {
      ++total_monomials;
      for (int v = 0; v < 3; ++v)
        if (t.contains(v)) ++monomials_with[static_cast<size_t>(v)];
    }
  }
  f[1] = static_cast<double>(max_td);
  for (int v = 0; v < 3; ++v) {
    f[static_cast<size_t>(2 + v)] = static_cast<double>(max_deg[static_cast<size_t>(v)]);
    f[static_cast<size_t>(5 + v)] =
        static_cast<double>(polys_with[static_cast<size_t>(v)]) / static_cast<double>(polys.size());
    f[static_cast<size_t>(8 + v)] =
        static_cast<double>(monomials_with[static_cast<size_t>(v)]) / static_cast<double>(total_monomials);
  }
  return f;
}

std::vector<std::string> feature_names() {
  std::vector<std::string> names;
  for (int i = 1; i <= kNumFeatures; ++i) names.push_back("f" + std::to_string(i));
  return names;
}

Standardizer fit_standardizer(const std::vector<FeatureVector>& rows) {
  if (rows.size() < 2) throw std::invalid_argument("standardizer needs at least 2 rows");
  Standardizer s;
  const double n = static_cast<double>(rows.size());
  for (int j = 0; j < kNumFeatures; ++j) {
    double sum = 0;
    for (const auto& r : rows) sum += r[static_cast<size_t>(j)];
    double mean = sum / n;
    double sq = 0;
    for (const auto& r : rows) {
      double d = r[static_cast<size_t>(j)] - mean;
      sq += d * d;
    }
    double sd = std::sqrt(sq / n);
    s.mean[static_cast<size_t>(j)] = mean;
    s.std[static_cast<size_t>(j)] = sd > 0 ? sd : 1.0;
  }
  return s;
}

FeatureVector transform(const Standardizer& s, const FeatureVector& v) {
  FeatureVector out;
  for (int j = 0; j < kNumFeatures; ++j)
    out[static_cast<size_t>(j)] =
        (v[static_cast<size_t>(j)] - s.mean[static_cast<size_t>(j)]) / s.std[static_cast<size_t>(j)];
  return out;
}

std::vector<FeatureVector> transform_all(const Standardizer& s, const std::vector<FeatureVector>& rows) {
  std::vector<FeatureVector> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(transform(s, r));
  return out;
}

std::string feature_matrix_csv(const std::vector<FeatureVector>& rows) {
  std::ostringstream os;
  auto names = feature_names();
  for (size_t i = 0; i < names.size(); ++i) os << (i ? "," : "") << names[i];
  os << "\n";
  os.precision(17);
  for (const auto& r : rows) {
    for (int j = 0; j < kNumFeatures; ++j) os << (j ? "," : "") << r[static_cast<size_t>(j)];
    os << "\n";
  }
  return os.str();
}

}  // namespace cadorder

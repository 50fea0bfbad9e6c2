// The 11 input features:
//   1  number of polynomials
//   2  maximum total degree of polynomials
//   3-5  maximum degree of x0/x1/x2 among all polynomials
//   6-8  proportion of polynomials containing x0/x1/x2
//   9-11 proportion of monomials containing x0/x1/x2

#pragma once

#include <array>
#include <string>
#include <vector>

#include "cadorder/problem.hpp"

namespace cadorder {

inline constexpr int kNumFeatures = 11;

using FeatureVector = std::array<double, kNumFeatures>;

FeatureVector extract_features(const Problem& problem);

std::vector<std::string> feature_names();  // f1..f11

// Per-column affine rescaling fitted on training rows only.
struct Standardizer {
  std::array<double, kNumFeatures> mean{};
  std::array<double, kNumFeatures> std{};
};

// Population standard deviation; zero-variance columns get std 1.
Standardizer fit_standardizer(const std::vector<FeatureVector>& rows);

FeatureVector transform(const Standardizer& s, const FeatureVector& v);

std::vector<FeatureVector> transform_all(const Standardizer& s, const std::vector<FeatureVector>& rows);

// CSV with a header row f1..f11.
std::string feature_matrix_csv(const std::vector<FeatureVector>& rows);

}  // namespace cadorder

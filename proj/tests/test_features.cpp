#include <doctest.h>

#include <algorithm>

#include "cadorder/features.hpp"
#include "test_util.hpp"

using namespace cadorder;
using test_util::P;

namespace {

FeatureVector feats(std::vector<Polynomial> polys) {
  return extract_features(make_problem("t", 3, std::move(polys)));
}

}  // namespace

TEST_CASE("worked feature examples") {
  // {x0^2*x1 - 1, x1*x2 + x0}: 4 monomials, x0 in 2, x1 in 2, x2 in 1;
  // every variable check follows the stated definitions.
  FeatureVector f = feats({P("x0^2*x1 - 1"), P("x1*x2 + x0")});
  CHECK(f[0] == 2);
  CHECK(f[1] == 3);
  CHECK(f[2] == 2);
  CHECK(f[3] == 1);
  CHECK(f[4] == 1);
  CHECK(f[5] == doctest::Approx(1.0));  // x0 occurs in both polynomials
  CHECK(f[6] == doctest::Approx(1.0));
  CHECK(f[7] == doctest::Approx(0.5));
  CHECK(f[8] == doctest::Approx(0.5));
  CHECK(f[9] == doctest::Approx(0.5));
  CHECK(f[10] == doctest::Approx(0.25));

  FeatureVector g = feats({P("x0")});
  CHECK(g == FeatureVector{1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 0});

  FeatureVector h = feats({P("x0 + x1 + x2")});
  for (int j = 0; j < 8; ++j) CHECK(h[static_cast<size_t>(j)] == 1);
  for (int j = 8; j < 11; ++j) CHECK(h[static_cast<size_t>(j)] == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("feature invariants on random problems") {
  test_util::Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    Problem pr = test_util::random_problem(rng, 5, 5, 4);
    FeatureVector f = extract_features(pr);
    CHECK(f[0] >= 1);
    CHECK(f[1] >= 0);
    for (int j = 2; j < 5; ++j) CHECK(f[1] >= f[static_cast<size_t>(j)]);
    for (int j = 5; j < 11; ++j) {
      CHECK(f[static_cast<size_t>(j)] >= 0.0);
      CHECK(f[static_cast<size_t>(j)] <= 1.0);
    }

    // Invariant under polynomial list reordering.
    Problem shuffled = pr;
    std::reverse(shuffled.polynomials.begin(), shuffled.polynomials.end());
    CHECK(extract_features(shuffled) == f);
  }
}

TEST_CASE("variable relabeling permutes feature blocks") {
  // Swap x0 and x2 throughout a problem.
  auto swap02 = [](const Polynomial& p) {
    std::vector<Monomial> out;
    for (auto t : p.terms()) {
      std::swap(t.exponents[0], t.exponents[2]);
      out.push_back(std::move(t));
    }
    return Polynomial(3, std::move(out));
  };
  test_util::Rng rng(37);
  for (int i = 0; i < 50; ++i) {
    Problem pr = test_util::random_problem(rng, 4, 4, 4);
    std::vector<Polynomial> swapped;
    for (const auto& p : pr.polynomials) swapped.push_back(swap02(p));
    FeatureVector f = extract_features(pr);
    FeatureVector g = extract_features(make_problem("s", 3, std::move(swapped)));
    CHECK(f[0] == g[0]);
    CHECK(f[1] == g[1]);
    CHECK(f[2] == g[4]);
    CHECK(f[4] == g[2]);
    CHECK(f[5] == g[7]);
    CHECK(f[7] == g[5]);
    CHECK(f[8] == g[10]);
    CHECK(f[10] == g[8]);
    CHECK(f[3] == g[3]);
    CHECK(f[6] == g[6]);
    CHECK(f[9] == g[9]);
  }
}

TEST_CASE("standardizer") {
  std::vector<FeatureVector> rows(2);
  rows[0].fill(0);
  rows[1].fill(2);
  rows[0][1] = 5;  // constant column
  rows[1][1] = 5;
  Standardizer s = fit_standardizer(rows);
  CHECK(s.mean[0] == doctest::Approx(1.0));
  CHECK(s.std[0] == doctest::Approx(1.0));  // population std of {0,2}
  CHECK(s.mean[1] == doctest::Approx(5.0));
  CHECK(s.std[1] == doctest::Approx(1.0));  // zero-variance replacement

  FeatureVector at_mean = s.mean;
  for (double v : transform(s, at_mean)) CHECK(v == doctest::Approx(0.0));
  FeatureVector plus_one;
  for (size_t j = 0; j < kNumFeatures; ++j) plus_one[j] = s.mean[j] + s.std[j];
  for (double v : transform(s, plus_one)) CHECK(v == doctest::Approx(1.0));

  CHECK_THROWS_AS(fit_standardizer({rows[0]}), std::invalid_argument);
}

TEST_CASE("transformed training columns have mean 0") {
  test_util::Rng rng(41);
  std::vector<FeatureVector> rows;
  for (int i = 0; i < 40; ++i) rows.push_back(extract_features(test_util::random_problem(rng, 5, 5, 4)));
  Standardizer s = fit_standardizer(rows);
  auto t = transform_all(s, rows);
  for (int j = 0; j < kNumFeatures; ++j) {
    double sum = 0;
    for (const auto& r : t) sum += r[static_cast<size_t>(j)];
    CHECK(std::abs(sum / static_cast<double>(t.size())) < 1e-9);
  }
}

TEST_CASE("feature CSV header") {
  std::string csv = feature_matrix_csv({});
  CHECK(csv.rfind("f1,f2,f3,f4,f5,f6,f7,f8,f9,f10,f11\n", 0) == 0);
}

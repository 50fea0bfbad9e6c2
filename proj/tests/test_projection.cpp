#include <doctest.h>

#include "cadorder/projection.hpp"
#include "test_util.hpp"

using namespace cadorder;
using test_util::P;

TEST_CASE("project_once worked examples") {
  CHECK(project_once({P("x0^2 + x1")}, 0) == std::vector<Polynomial>{P("x1")});
  CHECK(project_once({P("x1 + x2")}, 0) == std::vector<Polynomial>{P("x1 + x2")});
  // Coefficients of x0 - x1 contribute x1; the cross resultant is x1 - 1.
  CHECK(project_once({P("x0 - x1"), P("x0 - 1")}, 0) ==
        std::vector<Polynomial>{P("x1"), P("x1 - 1")});
  CHECK(project_once({}, 0).empty());
}

TEST_CASE("projection_levels worked examples") {
  Problem pr = make_problem("p", 3, {P("x0^2 + x1")});
  auto levels = projection_levels(pr, OrderingId(0));
  REQUIRE(levels.levels.size() == 3);
  CHECK(levels.levels[0] == std::vector<Polynomial>{P("x0^2 + x1")});
  CHECK(levels.levels[1] == std::vector<Polynomial>{P("x1")});
  CHECK(levels.levels[2].empty());

  Problem single = make_problem("q", 3, {P("x1")});
  auto l2 = projection_levels(single, OrderingId(0));
  CHECK(l2.levels[0] == std::vector<Polynomial>{P("x1")});
  CHECK(l2.levels[1] == std::vector<Polynomial>{P("x1")});
  CHECK(l2.levels[2].empty());
}

TEST_CASE("quadratic discriminant appears at level 2") {
  Problem pr = make_problem("disc", 3, {P("x0^2 + x1*x0 + x2")});
  auto levels = projection_levels(pr, OrderingId(0));
  const auto& level2 = levels.levels[1];
  bool found = false;
  for (const auto& p : level2)
    if (p == P("x1^2 - 4*x2")) found = true;
  CHECK(found);
}

TEST_CASE("eliminated variables never reappear") {
  test_util::Rng rng(23);
  for (int i = 0; i < 50; ++i) {
    Problem pr = test_util::random_problem(rng, 4, 4, 3);
    for (int o = 0; o < kNumOrderings; ++o) {
      OrderingId ord(o);
      auto elim = ord.elimination();
      auto levels = projection_levels(pr, ord);
      for (size_t k = 1; k < levels.levels.size(); ++k)
        for (const auto& p : levels.levels[k])
          for (size_t j = 0; j < k; ++j)
            CHECK(p.degree_in(elim[j]) == 0);
    }
  }
}

TEST_CASE("project_once is monotone under set union (coefficient/discriminant parts)") {
  test_util::Rng rng(29);
  for (int i = 0; i < 30; ++i) {
    Problem a = test_util::random_problem(rng, 3, 3, 3, "a");
    Problem b = test_util::random_problem(rng, 3, 3, 3, "b");
    std::vector<Polynomial> both = a.polynomials;
    both.insert(both.end(), b.polynomials.begin(), b.polynomials.end());
    auto from_a = project_once(a.polynomials, 0);
    auto from_both = project_once(both, 0);
    for (const auto& p : from_a) {
      bool present = false;
      for (const auto& q : from_both)
        if (p == q) present = true;
      CHECK(present);
    }
  }
}

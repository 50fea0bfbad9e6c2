#include <doctest.h>

#include "cadorder/parse.hpp"
#include "test_util.hpp"

using namespace cadorder;
using test_util::P;

TEST_CASE("plain format term parsing") {
  CHECK(parse_polynomial_plain("3*x0^2*x1 - x2 + 1") ==
        Polynomial(3, {{{2, 1, 0}, 3}, {{0, 0, 1}, -1}, {{0, 0, 0}, 1}}));
  CHECK(parse_polynomial_plain("-x0") == -P("x0"));
  CHECK(parse_polynomial_plain("x1^3") == P("x1^3"));
}

TEST_CASE("plain format problems skip comments and blank lines") {
  Problem pr = parse_problem("# header\n\nx0^2 + x1\nx1*x2 - 1 # trailing\n", ProblemFormat::Plain);
  CHECK(pr.polynomials.size() == 2);
}

TEST_CASE("plain format syntax errors carry position") {
  try {
    parse_problem("x0 +\n", ProblemFormat::Plain);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.col > 1);
  }
  CHECK_THROWS_AS(parse_problem("x3 + 1\n", ProblemFormat::Plain), ParseError);
}

static const char* kSmtExample = R"((set-logic QF_NRA)
(declare-fun x () Real)
(declare-fun y () Real)
(declare-fun z () Real)
(assert (> (+ (* x x) y) 0))
(check-sat)
)";

TEST_CASE("smtlib atom transcription") {
  Problem pr = parse_problem(kSmtExample, ProblemFormat::SmtLibSubset);
  CHECK(pr.num_vars == 3);
  REQUIRE(pr.polynomials.size() == 1);
  CHECK(pr.polynomials[0] == P("x0^2 + x1"));
}

TEST_CASE("smtlib duplicate atoms collapse") {
  Problem pr = parse_problem(
      "(declare-fun x () Real)(assert (and (= x 1) (= x 1)))", ProblemFormat::SmtLibSubset);
  REQUIRE(pr.polynomials.size() == 1);
  CHECK(pr.polynomials[0] == P("x0 - 1"));
}

TEST_CASE("smtlib rational coefficients are cleared") {
  Problem pr = parse_problem(
      "(declare-const a Real)(assert (>= (+ (* 0.5 a) 0.25) 0))", ProblemFormat::SmtLibSubset);
  REQUIRE(pr.polynomials.size() == 1);
  CHECK(pr.polynomials[0] == P("2*x0 + 1"));

  Problem pr2 = parse_problem(
      "(declare-const a Real)(assert (= (* (/ 1 3) a) 1))", ProblemFormat::SmtLibSubset);
  CHECK(pr2.polynomials[0] == P("x0 - 3"));
}

TEST_CASE("smtlib connectives, negation and exponent") {
  Problem pr = parse_problem(
      "(declare-fun u () Real)(declare-fun v () Real)"
      "(assert (or (not (< (^ u 2) v)) (<= (- v) u)))",
      ProblemFormat::SmtLibSubset);
  CHECK(pr.polynomials.size() == 2);
}

TEST_CASE("smtlib rejects a fourth variable") {
  CHECK_THROWS_AS(parse_problem("(declare-fun a () Real)(declare-fun b () Real)"
                                "(declare-fun c () Real)(declare-fun d () Real)"
                                "(assert (> a 0))",
                                ProblemFormat::SmtLibSubset),
                  ParseError);
}

TEST_CASE("smtlib unsupported constructs fail loudly") {
  CHECK_THROWS_AS(parse_problem("(declare-fun x () Real)(assert (let ((y x)) (> y 0)))",
                                ProblemFormat::SmtLibSubset),
                  ParseError);
  CHECK_THROWS_AS(parse_problem("(assert (> w 0))", ProblemFormat::SmtLibSubset), ParseError);
}

TEST_CASE("empty polynomial set after filtering is an error") {
  CHECK_THROWS(parse_problem("(assert (> 1 0))", ProblemFormat::SmtLibSubset));
}

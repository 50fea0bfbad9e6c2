#pragma once

#include <stdexcept>
#include <string>

#include "cadorder/problem.hpp"

namespace cadorder {

enum class ProblemFormat { Plain, SmtLibSubset };

ProblemFormat format_from_string(const std::string& s);

struct ParseError : std::runtime_error {
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
  int line;
  int col;
};

// Parses problem source text into a canonical Problem.  Boolean structure
// and relation signs are discarded; every atom p ~ q contributes the single
// polynomial p - q.  Rational coefficients are cleared to integers.
Problem parse_problem(const std::string& text, ProblemFormat format, std::string id = "problem");

// One polynomial in the plain format, e.g. "3*x0^2*x1 - x2 + 1".
Polynomial parse_polynomial_plain(const std::string& text, int num_vars = kDefaultNumVars);

}  // namespace cadorder

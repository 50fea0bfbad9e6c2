// Exact sparse multivariate polynomial arithmetic over the integers.
//
// Polynomials live in a fixed ambient variable space (3 variables by
// default); eliminated variables simply carry exponent 0.  Terms are kept
// in canonical form: descending lexicographic exponent order, merged, no
// zero coefficients.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cadorder {

using BigInt = mpz_class;

inline constexpr int kDefaultNumVars = 3;

struct Variable {
  int index = 0;

  friend bool operator==(const Variable&, const Variable&) = default;
};

inline std::string variable_name(int index) { return "x" + std::to_string(index); }

struct Monomial {
  std::vector<int> exponents;  // length == ambient variable count
  BigInt coeff;

  int total_degree() const {
    int d = 0;
    for (int e : exponents) d += e;
    return d;
  }
  bool contains(int var) const { return exponents[static_cast<size_t>(var)] > 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exponents == b.exponents && a.coeff == b.coeff;
  }
};

class Polynomial {
 public:
  explicit Polynomial(int num_vars = kDefaultNumVars) : num_vars_(num_vars) {}

  // Canonicalizes: merges equal exponent vectors, drops zeros, sorts.
  Polynomial(int num_vars, std::vector<Monomial> terms);

  static Polynomial constant(const BigInt& c, int num_vars = kDefaultNumVars);
  static Polynomial variable(int index, int num_vars = kDefaultNumVars);

  int num_vars() const { return num_vars_; }
  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  // -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(int var) const;
  bool contains_var(int var) const { return degree_in(var) > 0; }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator*(const BigInt& c) const;

  bool operator==(const Polynomial& rhs) const {
    return num_vars_ == rhs.num_vars_ && terms_ == rhs.terms_;
  }

  Polynomial derivative(int var) const;

  // Coefficient of var^k, as a polynomial with exponent 0 in var.
  Polynomial coefficient_of(int var, int k) const;
  Polynomial leading_coefficient_in(int var) const { return coefficient_of(var, degree_in(var)); }

  // gcd of all coefficients (non-negative; 0 for the zero polynomial).
  BigInt content() const;
  // Content removed and sign fixed so the lexicographically leading
  // coefficient is positive.
  Polynomial primitive_part() const;

  // Exact quotient, or nullopt when the division does not come out even.
  static std::optional<Polynomial> exact_div(const Polynomial& num, const Polynomial& den);

  // Strict total order for canonical containers.
  bool less_than(const Polynomial& rhs) const;

  // Plain text form, e.g. "3*x0^2*x1 - x2 + 1".
  std::string to_string() const;

 private:
  int num_vars_;
  std::vector<Monomial> terms_;

  void canonicalize();
};

// Determinant of the Sylvester matrix of p and q with respect to var,
// computed by fraction-free Bareiss elimination.  Requires positive degree
// in var on both sides.
Polynomial resultant(const Polynomial& p, const Polynomial& q, int var);

// Classical discriminant: (-1)^(d(d-1)/2) * resultant(p, dp/dvar, var)
// divided exactly by the leading coefficient of p in var, so that
// disc(x^2 + bx + c) = b^2 - 4c.
Polynomial discriminant(const Polynomial& p, int var);

// Bareiss determinant of a general square polynomial matrix.
Polynomial polynomial_determinant(std::vector<std::vector<Polynomial>> m, int num_vars);

// The Sylvester matrix of p, q w.r.t. var (rows of coefficients, highest
// degree first).  Exposed for the cofactor-expansion cross-check.
std::vector<std::vector<Polynomial>> sylvester_matrix(const Polynomial& p, const Polynomial& q,
                                                      int var);

}  // namespace cadorder

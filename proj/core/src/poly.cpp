#include "cadorder/poly.hpp"

#include <algorithm>
#include <sstream>

namespace cadorder {

namespace {

// Descending lexicographic order on exponent vectors.
bool exp_greater(const std::vector<int>& a, const std::vector<int>& b) { return a > b; }

}  // namespace

Polynomial::Polynomial(int num_vars, std::vector<Monomial> terms)
    : num_vars_(num_vars), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (static_cast<int>(t.exponents.size()) != num_vars_)
      throw std::invalid_argument("monomial exponent vector length mismatch");
    for (int e : t.exponents)
      if (e < 0) throw std::invalid_argument("negative exponent");
  }
  canonicalize();
}

void Polynomial::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Monomial& a, const Monomial& b) { return exp_greater(a.exponents, b.exponents); });
  std::vector<Monomial> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().exponents == t.exponents)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Monomial& t) { return t.coeff == 0; });
  terms_ = std::move(merged);
}

Polynomial Polynomial::constant(const BigInt& c, int num_vars) {
  Polynomial p(num_vars);
  if (c != 0) p.terms_.push_back({std::vector<int>(static_cast<size_t>(num_vars), 0), c});
  return p;
}

Polynomial Polynomial::variable(int index, int num_vars) {
  if (index < 0 || index >= num_vars) throw std::invalid_argument("variable index out of range");
  Polynomial p(num_vars);
  std::vector<int> e(static_cast<size_t>(num_vars), 0);
  e[static_cast<size_t>(index)] = 1;
  p.terms_.push_back({std::move(e), BigInt(1)});
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].total_degree() == 0);
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.total_degree());
  return d;
}

int Polynomial::degree_in(int var) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exponents[static_cast<size_t>(var)]);
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  std::vector<Monomial> all = terms_;
  all.insert(all.end(), rhs.terms_.begin(), rhs.terms_.end());
  return Polynomial(num_vars_, std::move(all));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + (-rhs); }

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  std::vector<Monomial> prod;
  prod.reserve(terms_.size() * rhs.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : rhs.terms_) {
      Monomial m;
      m.exponents.resize(static_cast<size_t>(num_vars_));
      for (int i = 0; i < num_vars_; ++i)
        m.exponents[static_cast<size_t>(i)] =
            a.exponents[static_cast<size_t>(i)] + b.exponents[static_cast<size_t>(i)];
      m.coeff = a.coeff * b.coeff;
      prod.push_back(std::move(m));
    }
  }
  return Polynomial(num_vars_, std::move(prod));
}

Polynomial Polynomial::operator*(const BigInt& c) const {
  Polynomial r(*this);
  if (c == 0) return Polynomial(num_vars_);
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::derivative(int var) const {
  std::vector<Monomial> out;
  for (const auto& t : terms_) {
    int e = t.exponents[static_cast<size_t>(var)];
    if (e == 0) continue;
    Monomial m = t;
    m.coeff *= e;
    m.exponents[static_cast<size_t>(var)] = e - 1;
    out.push_back(std::move(m));
  }
  return Polynomial(num_vars_, std::move(out));
}

Polynomial Polynomial::coefficient_of(int var, int k) const {
  std::vector<Monomial> out;
  for (const auto& t : terms_) {
    if (t.exponents[static_cast<size_t>(var)] != k) continue;
    Monomial m = t;
    m.exponents[static_cast<size_t>(var)] = 0;
    out.push_back(std::move(m));
  }
  return Polynomial(num_vars_, std::move(out));
}

BigInt Polynomial::content() const {
  BigInt g = 0;
  for (const auto& t : terms_) {
    g = gcd(g, t.coeff);
    if (g == 1) break;
  }
  return g;
}

Polynomial Polynomial::primitive_part() const {
  if (terms_.empty()) return *this;
  BigInt g = content();
  if (terms_[0].coeff < 0) g = -g;
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff /= g;
  return r;
}

std::optional<Polynomial> Polynomial::exact_div(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw std::invalid_argument("division by zero polynomial");
  Polynomial rem = num;
  Polynomial quot(num.num_vars_);
  const Monomial& lead_d = den.terms_[0];
  while (!rem.is_zero()) {
    const Monomial& lead_r = rem.terms_[0];
    Monomial t;
    t.exponents.resize(static_cast<size_t>(num.num_vars_));
    for (int i = 0; i < num.num_vars_; ++i) {
      int d = lead_r.exponents[static_cast<size_t>(i)] - lead_d.exponents[static_cast<size_t>(i)];
      if (d < 0) return std::nullopt;
      t.exponents[static_cast<size_t>(i)] = d;
    }
    if (lead_r.coeff % lead_d.coeff != 0) return std::nullopt;
    t.coeff = lead_r.coeff / lead_d.coeff;
    Polynomial term(num.num_vars_, {t});
    quot = quot + term;
    rem = rem - term * den;
  }
  return quot;
}

bool Polynomial::less_than(const Polynomial& rhs) const {
  auto key = [](const Polynomial& p) {
    std::vector<std::pair<std::vector<int>, BigInt>> k;
    for (const auto& t : p.terms_) k.emplace_back(t.exponents, t.coeff);
    return k;
  };
  return key(*this) < key(rhs);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    BigInt c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool has_var = t.total_degree() > 0;
    bool printed = false;
    if (c != 1 || !has_var) {
      os << c.get_str();
      printed = true;
    }
    for (size_t i = 0; i < t.exponents.size(); ++i) {
      int e = t.exponents[i];
      if (e == 0) continue;
      if (printed) os << "*";
      os << variable_name(static_cast<int>(i));
      if (e > 1) os << "^" << e;
      printed = true;
    }
  }
  return os.str();
}

std::vector<std::vector<Polynomial>> sylvester_matrix(const Polynomial& p, const Polynomial& q,
                                                      int var) {
  const int dp = p.degree_in(var);
  const int dq = q.degree_in(var);
  const int n = dp + dq;
  const int nv = p.num_vars();
  std::vector<std::vector<Polynomial>> m(static_cast<size_t>(n),
                                         std::vector<Polynomial>(static_cast<size_t>(n), Polynomial(nv)));
  for (int r = 0; r < dq; ++r)
    for (int k = 0; k <= dp; ++k) m[static_cast<size_t>(r)][static_cast<size_t>(r + k)] = p.coefficient_of(var, dp - k);
  for (int r = 0; r < dp; ++r)
    for (int k = 0; k <= dq; ++k) m[static_cast<size_t>(dq + r)][static_cast<size_t>(r + k)] = q.coefficient_of(var, dq - k);
  return m;
}

Polynomial polynomial_determinant(std::vector<std::vector<Polynomial>> m, int num_vars) {
  const size_t n = m.size();
  if (n == 0) return Polynomial::constant(1, num_vars);
  int sign = 1;
  Polynomial prev_pivot = Polynomial::constant(1, num_vars);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t swap_row = k;
      for (size_t r = k + 1; r < n; ++r)
        if (!m[r][k].is_zero()) {
          swap_row = r;
          break;
        }
      if (swap_row == k) return Polynomial(num_vars);  // zero column, singular
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Polynomial num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = Polynomial::exact_div(num, prev_pivot);
        if (!q) throw std::logic_error("Bareiss division not exact");
        m[i][j] = std::move(*q);
      }
      m[i][k] = Polynomial(num_vars);
    }
    prev_pivot = m[k][k];
  }
  Polynomial det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

Polynomial resultant(const Polynomial& p, const Polynomial& q, int var) {
  if (p.degree_in(var) < 1 || q.degree_in(var) < 1)
    throw std::invalid_argument("resultant requires positive degree in the eliminated variable");
  return polynomial_determinant(sylvester_matrix(p, q, var), p.num_vars());
}

Polynomial discriminant(const Polynomial& p, int var) {
  if (p.degree_in(var) < 2) throw std::invalid_argument("discriminant requires degree >= 2");
  Polynomial res = resultant(p, p.derivative(var), var);
  auto q = Polynomial::exact_div(res, p.leading_coefficient_in(var));
  if (!q) throw std::logic_error("discriminant division by leading coefficient not exact");
  int d = p.degree_in(var);
  if ((d * (d - 1) / 2) % 2 != 0) return -*q;
  return *q;
}

}  // namespace cadorder

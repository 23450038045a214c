#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "domfan/exchange_matrix.hpp"
#include "domfan/numeric.hpp"

namespace domfan {

/// Integer Laurent polynomial in x_1..x_nx with ordinary polynomial
/// dependence on y_1..y_ny. A monomial is one dense exponent vector of length
/// nx + ny (x exponents first). Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Exponent = IntVector;
  using TermMap = std::map<Exponent, Integer>;

  LaurentPoly(size_t nx, size_t ny) : nx_(nx), ny_(ny) {}

  static LaurentPoly constant(size_t nx, size_t ny, const Integer& c);
  static LaurentPoly x(size_t nx, size_t ny, size_t i);
  static LaurentPoly y(size_t nx, size_t ny, size_t i);
  static LaurentPoly monomial(size_t nx, size_t ny, const IntVector& xexp, const IntVector& yexp,
                              const Integer& c = 1);

  size_t nx() const { return nx_; }
  size_t ny() const { return ny_; }
  const TermMap& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant(const Integer& c) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  /// Non-negative powers of anything; negative powers only of x-monomials
  /// with coefficient +-1.
  LaurentPoly pow(int64_t e) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.nx_ == b.nx_ && a.ny_ == b.ny_ && a.terms_ == b.terms_;
  }
  /// Total order on canonical forms (used for deterministic containers).
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

  /// Terms in ascending lexicographic exponent order, e.g.
  /// "1 * x2^-1 + 1 * x1*x2^-1*y2".
  std::string to_string() const;

  void add_term(const Exponent& e, const Integer& c);

 private:
  void check_compatible(const LaurentPoly& o) const;

  size_t nx_, ny_;
  TermMap terms_;
};

/// Exact quotient; throws InexactDivision when num is not den times a
/// Laurent polynomial.
LaurentPoly div_exact(const LaurentPoly& num, const LaurentPoly& den);

/// Ring homomorphism x_i -> xs[i], y_j -> ys[j]. All images must live in the
/// same ring. Negative x exponents require an invertible (single-term, unit,
/// y-free) image.
LaurentPoly substitute(const LaurentPoly& p, const std::vector<LaurentPoly>& xs,
                       const std::vector<LaurentPoly>& ys);

/// Degree under deg x_k = e_k, deg y_k = -(column k of B).
IntVector g_degree(const LaurentPoly& p, const ExchangeMatrix& b);

/// F(y) = p evaluated at x = 1.
LaurentPoly f_polynomial(const LaurentPoly& z);

/// Checks z = x^g F(yhat) with yhat_i = y_i prod_k x_k^{b_ki}.
bool check_g_f(const LaurentPoly& z, const ExchangeMatrix& b);

/// Parses arithmetic expressions over integers, x1..xn, y1..yn and any names
/// in `bindings`, with + - * / ^ and parentheses. Division is exact division;
/// exponents are integer literals (possibly negative). Accepts the output of
/// to_string.
LaurentPoly parse_laurent(std::string_view text, size_t nx, size_t ny,
                          const std::map<std::string, LaurentPoly>& bindings = {});

}  // namespace domfan

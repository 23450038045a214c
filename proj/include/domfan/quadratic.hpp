#pragma once

#include <compare>
#include <string>

#include "domfan/numeric.hpp"

namespace domfan {

/// Exact real number p + q*sqrt(d) with d squarefree (d = 0 when rational).
class QuadraticNumber {
 public:
  QuadraticNumber(const Rational& p = 0);
  /// Accepts any nonnegative radicand and pulls out its square part.
  QuadraticNumber(const Rational& p, const Rational& q, const Integer& radicand);

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }
  const Integer& d() const { return d_; }
  bool is_rational() const { return q_ == 0; }

  QuadraticNumber operator-() const;
  double to_double() const;
  /// "p", or "p + q*sqrt(d)".
  std::string to_string() const;

  friend bool operator==(const QuadraticNumber&, const QuadraticNumber&) = default;

 private:
  Rational p_, q_;
  Integer d_;
};

/// Exact comparison of real values.
std::strong_ordering qn_cmp(const QuadraticNumber& x, const QuadraticNumber& y);

/// Sign of a + b*sqrt(d) for d >= 0 (any d, not necessarily squarefree).
int surd_sign(const Rational& a, const Rational& b, const Integer& d);

}  // namespace domfan

#include "domfan/quadratic.hpp"

#include <cmath>

#include "domfan/error.hpp"

namespace domfan {

namespace {

// radicand = s^2 * core with core squarefree.
void split_square(const Integer& radicand, Integer& s, Integer& core) {
  s = 1;
  core = radicand;
  if (core == 0) return;
  Integer f = 2;
  while (f * f <= core) {
    Integer f2 = f * f;
    while (core % f2 == 0) {
      core /= f2;
      s *= f;
    }
    f += (f == 2) ? 1 : 2;
  }
}

std::strong_ordering from_sign(int s) {
  return s < 0 ? std::strong_ordering::less
               : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

}  // namespace

QuadraticNumber::QuadraticNumber(const Rational& p) : p_(p), q_(0), d_(0) {}

QuadraticNumber::QuadraticNumber(const Rational& p, const Rational& q, const Integer& radicand)
    : p_(p), q_(q), d_(0) {
  if (radicand < 0) throw InvalidArgument("negative radicand");
  Integer s, core;
  split_square(radicand, s, core);
  if (core == 0 || q_ == 0) {
    q_ = 0;
    return;
  }
  q_ *= Rational(s);
  if (core == 1) {
    p_ += q_;
    q_ = 0;
    return;
  }
  d_ = core;
}

QuadraticNumber QuadraticNumber::operator-() const {
  QuadraticNumber r = *this;
  r.p_ = -r.p_;
  r.q_ = -r.q_;
  return r;
}

double QuadraticNumber::to_double() const { return p_.get_d() + q_.get_d() * std::sqrt(d_.get_d()); }

std::string QuadraticNumber::to_string() const {
  if (q_ == 0) return domfan::to_string(p_);
  const std::string surd = "sqrt(" + d_.get_str() + ")";
  const Rational mag = abs(q_);
  const std::string term = mag == 1 ? surd : domfan::to_string(Rational(mag)) + "*" + surd;
  if (p_ == 0) return (q_ < 0 ? "-" : "") + term;
  return domfan::to_string(p_) + (q_ < 0 ? " - " : " + ") + term;
}

int surd_sign(const Rational& a, const Rational& b, const Integer& d) {
  if (d < 0) throw InvalidArgument("negative radicand");
  const int sa = sign(a);
  const int sb = d == 0 ? 0 : sign(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger magnitude wins.
  Rational diff = a * a - b * b * Rational(d);
  if (diff == 0) return 0;
  return diff > 0 ? sa : sb;
}

std::strong_ordering qn_cmp(const QuadraticNumber& x, const QuadraticNumber& y) {
  const Rational a = x.p() - y.p();
  if (x.d() == y.d() || x.q() == 0 || y.q() == 0) {
    // At most one distinct surd.
    if (x.q() == 0) return from_sign(surd_sign(a, -y.q(), y.d()));
    if (y.q() == 0) return from_sign(surd_sign(a, x.q(), x.d()));
    return from_sign(surd_sign(a, x.q() - y.q(), x.d()));
  }
  // sign(a + X) with X = b1*sqrt(d1) + b2*sqrt(d2), d1 != d2 squarefree.
  const Rational b1 = x.q(), b2 = -y.q();
  const Integer d1 = x.d(), d2 = y.d();
  int sx;
  if (sign(b1) == sign(b2))
    sx = sign(b1);
  else
    sx = (b1 * b1 * Rational(d1) > b2 * b2 * Rational(d2)) ? sign(b1) : sign(b2);
  const int sa = sign(a);
  if (sa == 0) return from_sign(sx);
  if (sa == sx) return from_sign(sa);
  // Compare a^2 with X^2 = b1^2 d1 + b2^2 d2 + 2 b1 b2 sqrt(d1 d2).
  int s = surd_sign(a * a - b1 * b1 * Rational(d1) - b2 * b2 * Rational(d2), -2 * b1 * b2, d1 * d2);
  return from_sign(s > 0 ? sa : sx);
}

}  // namespace domfan

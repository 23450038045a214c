#include "domfan/numeric.hpp"

#include <numeric>

#include "domfan/error.hpp"

namespace domfan {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InvalidArgument("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0) throw InvalidArgument("malformed rational literal '" + s + "'");
  if (q.get_den() == 0) throw InvalidArgument("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

RationalVector to_rational(const IntVector& v) {
  RationalVector out;
  out.reserve(v.size());
  for (int64_t x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

IntVector primitive(IntVector v) {
  int64_t g = 0;
  for (int64_t x : v) g = std::gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

IntVector primitive_direction(const RationalVector& v) {
  Integer den = 1;
  for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> scaled;
  scaled.reserve(v.size());
  Integer g = 0;
  for (const auto& x : v) {
    Integer s = x.get_num() * (den / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_mpz_t());
    scaled.push_back(std::move(s));
  }
  IntVector out;
  out.reserve(v.size());
  for (auto& s : scaled) {
    if (g != 0) s /= g;
    out.push_back(to_int64(s));
  }
  return out;
}

int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw Error("integer " + z.get_str() + " exceeds 64-bit range");
  return z.get_si();
}

int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("matrix entry overflow");
  return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("matrix entry overflow");
  return r;
}

}  // namespace domfan

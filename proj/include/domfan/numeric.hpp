#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace domfan {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
using IntVector = std::vector<int64_t>;

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }
inline int sign(int64_t v) { return (v > 0) - (v < 0); }

RationalVector to_rational(const IntVector& v);

/// Divides an integer vector by the gcd of its entries. The zero vector is
/// returned unchanged.
IntVector primitive(IntVector v);

/// Scales a nonzero rational vector to the primitive integer vector pointing
/// the same way.
IntVector primitive_direction(const RationalVector& v);

int64_t to_int64(const Integer& z);

// Checked arithmetic for matrix entries; overflow raises domfan::Error.
int64_t checked_add(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);

}  // namespace domfan

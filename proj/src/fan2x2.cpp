#include "domfan/fan2x2.hpp"

#include <algorithm>

#include "domfan/error.hpp"

namespace domfan {

std::string to_string(Rank2Type t) {
  switch (t) {
    case Rank2Type::Zero: return "zero";
    case Rank2Type::Finite: return "finite";
    case Rank2Type::Affine: return "affine";
    case Rank2Type::Wild: return "wild";
  }
  return "?";
}

Rank2Params canonicalize_2x2(const ExchangeMatrix& b) {
  if (b.rank() != 2) throw InvalidArgument("expected a 2x2 exchange matrix");
  int64_t a = b(0, 1), c = b(1, 0);
  bool antipode = a < 0;
  if (antipode) a = -a, c = -c;
  const int64_t prod = checked_mul(a, c);
  Rank2Type type = a == 0 ? Rank2Type::Zero
                   : prod > -4 ? Rank2Type::Finite
                   : prod == -4 ? Rank2Type::Affine : Rank2Type::Wild;
  return {a, c, antipode, type};
}

Integer p_m(size_t m, int64_t a, int64_t b) {
  const Integer n = -Integer(static_cast<long>(a)) * static_cast<long>(b);
  Integer prev = 1, cur = 1;  // P_0, P_1
  if (m <= 1) return 1;
  for (size_t k = 2; k <= m; ++k) {
    Integer next = (k % 2 == 0) ? Integer(n * cur - prev) : Integer(cur - prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

namespace {

IntegerRay primitive_ray(Integer x, Integer y) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  if (g != 0) x /= g, y /= g;
  return {x, y};
}

int sgn64(int64_t v) { return (v > 0) - (v < 0); }

// v_k and w_k for the canonical a > 0 > b, from a table of P values.
IntegerRay v_k(size_t k, int64_t a, int64_t b, const std::vector<Integer>& p) {
  if (k % 2 == 0) return primitive_ray(sgn64(a) * p[k], -Integer(static_cast<long>(a)) * p[k + 1]);
  return primitive_ray(-Integer(static_cast<long>(b)) * p[k], sgn64(b) * p[k + 1]);
}

IntegerRay w_k(size_t k, int64_t a, int64_t b, const std::vector<Integer>& p) {
  if (k % 2 == 0) return primitive_ray(-Integer(static_cast<long>(b)) * p[k + 1], sgn64(b) * p[k]);
  return primitive_ray(sgn64(a) * p[k + 1], -Integer(static_cast<long>(a)) * p[k]);
}

std::vector<Integer> p_table(size_t count, int64_t a, int64_t b) {
  std::vector<Integer> p;
  for (size_t m = 0; m < count; ++m) p.push_back(p_m(m, a, b));
  return p;
}

bool on_axis(const IntegerRay& r) { return r[0] == 0 || r[1] == 0; }

std::vector<IntegerRay> axis_rays() { return {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}; }

// Relevant rays of the canonical form (fourth quadrant).
std::vector<IntegerRay> canonical_relevant_rays(const Rank2Params& pr, size_t kmax) {
  std::vector<IntegerRay> out;
  if (pr.type == Rank2Type::Zero) return out;
  if (pr.type == Rank2Type::Finite) {
    // Follow v_k and w_k until they land on a coordinate axis.
    const size_t cap = 8;
    auto p = p_table(cap + 2, pr.a, pr.b);
    for (size_t k = 0;; ++k) {
      if (k >= cap) throw Error("finite-type ray generation did not reach an axis");
      IntegerRay r = v_k(k, pr.a, pr.b, p);
      if (on_axis(r)) break;
      out.push_back(r);
    }
    for (size_t k = 0;; ++k) {
      if (k >= cap) throw Error("finite-type ray generation did not reach an axis");
      IntegerRay r = w_k(k, pr.a, pr.b, p);
      if (on_axis(r)) break;
      out.push_back(r);
    }
  } else {
    auto p = p_table(kmax + 2, pr.a, pr.b);
    for (size_t k = 0; k <= kmax; ++k) {
      out.push_back(v_k(k, pr.a, pr.b, p));
      out.push_back(w_k(k, pr.a, pr.b, p));
    }
    if (pr.type == Rank2Type::Affine) {
      // v_inf = w_inf has slope -a/2.
      out.push_back(primitive_ray(2, -Integer(static_cast<long>(pr.a))));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

QuadraticNumber s_infinity(int64_t a, int64_t b) {
  const Integer n = -Integer(static_cast<long>(a)) * static_cast<long>(b);
  if (n < 4) throw InvalidArgument("limit slopes exist only when ab <= -4");
  const Rational ra(static_cast<long>(a));
  return QuadraticNumber(-ra / 2, -ra / (2 * Rational(n)), n * (n - 4));
}

QuadraticNumber t_infinity(int64_t a, int64_t b) {
  const Integer n = -Integer(static_cast<long>(a)) * static_cast<long>(b);
  if (n < 4) throw InvalidArgument("limit slopes exist only when ab <= -4");
  const Rational rb(static_cast<long>(b));
  return QuadraticNumber(Rational(n) / (2 * rb), Rational(-1) / (2 * rb), n * (n - 4));
}

Rank2Rays rays_2x2(const ExchangeMatrix& b, size_t kmax) {
  Rank2Rays out{canonicalize_2x2(b), axis_rays(), std::nullopt, std::nullopt};
  const auto& pr = out.params;
  for (auto& r : canonical_relevant_rays(pr, kmax)) out.rays.push_back(r);
  if (pr.type == Rank2Type::Affine || pr.type == Rank2Type::Wild) {
    // Limit rays scaled by 1/sqrt(-ab) so each coordinate is a single surd.
    const Integer n = -Integer(static_cast<long>(pr.a)) * static_cast<long>(pr.b);
    const Rational ra(static_cast<long>(pr.a)), rb(static_cast<long>(pr.b));
    const Integer rad = n * (n - 4);
    out.v_inf = LimitRay{QuadraticNumber(2), QuadraticNumber(-ra, -ra / Rational(n), rad)};
    out.w_inf = LimitRay{QuadraticNumber(-rb, -rb / Rational(n), rad), QuadraticNumber(-2)};
  }
  if (pr.antipode) {
    for (auto& r : out.rays) r = {-r[0], -r[1]};
    if (out.v_inf) {
      *out.v_inf = {-(*out.v_inf)[0], -(*out.v_inf)[1]};
      *out.w_inf = {-(*out.w_inf)[0], -(*out.w_inf)[1]};
    }
  }
  std::sort(out.rays.begin(), out.rays.end());
  return out;
}

SlopeSet slopes_2x2(const ExchangeMatrix& b, size_t kmax) {
  const Rank2Params pr = canonicalize_2x2(b);
  SlopeSet out{pr.type, pr.antipode ? "antipode" : "identity", {}, {}, {}, std::nullopt, std::nullopt};
  for (const auto& r : canonical_relevant_rays(pr, kmax)) {
    Rational s(r[1], r[0]);
    s.canonicalize();
    out.rational_slopes.insert(s);
  }
  if (pr.type == Rank2Type::Affine || pr.type == Rank2Type::Wild) {
    auto p = p_table(kmax + 2, pr.a, pr.b);
    for (size_t k = 0; k <= kmax; ++k) {
      IntegerRay v = v_k(k, pr.a, pr.b, p), w = w_k(k, pr.a, pr.b, p);
      Rational sv(v[1], v[0]), sw(w[1], w[0]);
      sv.canonicalize();
      sw.canonicalize();
      out.s.push_back(sv);
      out.t.push_back(sw);
    }
    out.s_inf = s_infinity(pr.a, pr.b);
    out.t_inf = t_infinity(pr.a, pr.b);
  }
  return out;
}

Rank2Verdict refines_2x2(const ExchangeMatrix& b, const ExchangeMatrix& bp) {
  if (b.rank() != 2 || bp.rank() != 2) throw InvalidArgument("expected 2x2 exchange matrices");
  if (!dominates(b, bp)) return {false, 1, "B does not dominate B'"};
  const bool wild = canonicalize_2x2(b).type == Rank2Type::Wild;
  const bool wild_p = canonicalize_2x2(bp).type == Rank2Type::Wild;
  if (!wild && !wild_p) return {true, 2, "neither matrix is wild and B dominates B'"};
  if (wild != wild_p) {
    if (bp.is_zero()) return {true, 3, "B' is the zero matrix"};
    const bool unit = std::abs(bp(0, 1)) == 1 && std::abs(bp(1, 0)) == 1;
    int differences = 0;
    for (size_t i = 0; i < 2; ++i)
      for (size_t j = 0; j < 2; ++j) differences += b(i, j) != bp(i, j);
    if (unit && differences == 1) return {true, 3, "B' = +-[[0,1],[-1,0]] and B differs from it in one entry"};
    return {false, 3, "exactly one matrix is wild and B' is neither zero nor a one-entry relaxation"};
  }
  if (b == bp) return {true, 4, "both wild and equal"};
  return {false, 4, "both wild and distinct"};
}

bool scatfan_refines_2x2(const ExchangeMatrix& b, const ExchangeMatrix& bp) {
  if (b.rank() != 2 || bp.rank() != 2) throw InvalidArgument("expected 2x2 exchange matrices");
  return dominates(b, bp);
}

}  // namespace domfan

#include "domfan/theta2x2.hpp"

#include <map>

#include "domfan/error.hpp"

namespace domfan {

namespace {

LaurentPoly one() { return LaurentPoly::constant(2, 2, 1); }
LaurentPoly x(size_t i) { return LaurentPoly::x(2, 2, i - 1); }
LaurentPoly y(size_t i) { return LaurentPoly::y(2, 2, i - 1); }

LaurentPoly mono(int64_t x1, int64_t x2, int64_t y1, int64_t y2, const Integer& c = 1) {
  return LaurentPoly::monomial(2, 2, {x1, x2}, {y1, y2}, c);
}

// C(n, k), zero when n < k or n < 0.
Integer binom(int64_t n, int64_t k) {
  if (k < 0 || n < 0 || n < k) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

int64_t pos(int64_t v) { return v > 0 ? v : 0; }

LaurentPoly x0(int64_t b) { return div_exact(mono(b, 0, 0, 1) + one(), x(2)); }

}  // namespace

std::string to_string(ThetaRegion r) {
  switch (r) {
    case ThetaRegion::FirstColumn: return "first-column";
    case ThetaRegion::SecondRow: return "second-row";
    case ThetaRegion::Special: return "special";
  }
  return "?";
}

std::optional<ThetaRegion> theta_region(const ThetaRequest& req) {
  const auto [m1, m2] = req.m;
  if (-req.b <= m1 && m1 <= 0 && m2 >= 0) return ThetaRegion::FirstColumn;
  if (m1 < -req.b && 0 <= m2 && m2 < -req.a) return ThetaRegion::SecondRow;
  if (req.a == -3 && req.b == 1 && m1 == -2 && m2 == 3) return ThetaRegion::Special;
  return std::nullopt;
}

LaurentPoly theta(const ThetaRequest& req) {
  const int64_t a = req.a, b = req.b;
  if (!(a < 0 && 0 < b)) throw InvalidArgument("theta needs a < 0 < b");
  const auto region = theta_region(req);
  if (!region)
    throw RegionNotCovered("no closed form for m = (" + std::to_string(req.m[0]) + "," +
                           std::to_string(req.m[1]) + ")");
  const auto [m1, m2] = req.m;
  const LaurentPoly z0 = x0(b);
  LaurentPoly out(2, 2);
  switch (*region) {
    case ThetaRegion::FirstColumn: {
      for (int64_t i = 0; i <= -m1; ++i) {
        const int64_t e = m2 + a * i;
        out += mono(m1, pos(e), i, 0, binom(-m1, i)) * z0.pow(pos(-e));
      }
      break;
    }
    case ThetaRegion::SecondRow: {
      out = mono(m1, m2, 0, 0);
      for (int64_t i = 1; i <= -m1; ++i)
        for (int64_t j = 0; j <= m2; ++j) {
          Integer c = binom(-m1 - b * j, i) * binom(m2, j);
          if (c == 0) continue;
          out += mono(m1 + b * j, 0, i, j, c) * z0.pow(-m2 - a * i);
        }
      break;
    }
    case ThetaRegion::Special: {
      out = mono(-2, 3, 0, 0) + mono(-2, 0, 1, 0, 2) + mono(-1, 0, 1, 1, 3) + mono(-2, 0, 2, 0) * z0.pow(3);
      break;
    }
  }
  return out;
}

LaurentPoly rank2_cluster_variable(int64_t a, int64_t b, int i) {
  if (a > 0 || b < 0) throw InvalidArgument("rank-2 cluster variables need a <= 0 <= b");
  if (i < -4 || i > 5) throw InvalidArgument("cluster variable index must lie in [-4, 5]");
  if ((i == -4 || i == 5) && (a == 0 || b == 0))
    throw InvalidArgument("x_-4 and x_5 need a < 0 < b");
  std::map<int, LaurentPoly> memo;
  auto get = [&](auto&& self, int k) -> LaurentPoly {
    if (auto it = memo.find(k); it != memo.end()) return it->second;
    LaurentPoly v(2, 2);
    switch (k) {
      case 1: v = x(1); break;
      case 2: v = x(2); break;
      case 0: v = x0(b); break;
      case -1: v = div_exact(self(self, 0).pow(-a) * y(1) + one(), x(1)); break;
      case -2: v = div_exact(self(self, -1).pow(b) + y(2), self(self, 0)); break;
      case -3: v = div_exact(self(self, -2).pow(-a) + mono(0, 0, 1, -a), self(self, -1)); break;
      case -4: v = div_exact(self(self, -3).pow(b) + mono(0, 0, b, -a * b - 1), self(self, -2)); break;
      case 3: v = div_exact(y(1) + x(2).pow(-a), x(1)); break;
      case 4: v = div_exact(mono(0, 0, b, 1) + self(self, 3).pow(b), x(2)); break;
      case 5: v = div_exact(mono(0, 0, -a * b - 1, -a) + self(self, 4).pow(-a), self(self, 3)); break;
    }
    memo.emplace(k, v);
    return v;
  };
  return get(get, i);
}

LaurentPoly x_infinity(int64_t a, int64_t b) {
  const char* text = nullptr;
  if (a == -2 && b == 2) text = "(y1 + y1*y2*x1^2 + x2^2)/(x1*x2)";
  if (a == -1 && b == 4) text = "(x1^4*y1^2*y2 + x2^2 + 2*x2*y1 + y1^2)/(x1^2*x2)";
  if (a == -4 && b == 1) text = "(y1*y2^2*x1^2 + y1 + 2*y1*y2*x1 + x2^4)/(x1*x2^2)";
  if (!text)
    throw InvalidArgument("limiting-ray theta function is only tabulated for (a,b) in {(-2,2),(-1,4),(-4,1)}");
  return parse_laurent(text, 2, 2);
}

LaurentPoly limit_theta(const ExchangeMatrix& bm) {
  if (bm.rank() != 2) throw InvalidArgument("expected a 2x2 exchange matrix");
  if (bm(0, 1) > 0) return x_infinity(bm(1, 0), bm(0, 1));
  // Swapping the two indices turns [[0,-p],[q,0]] into [[0,q],[-p,0]].
  LaurentPoly swapped = x_infinity(bm(0, 1), bm(1, 0));
  return substitute(swapped, {x(2), x(1)}, {y(2), y(1)});
}

}  // namespace domfan

#include <doctest.h>

#include "domfan/error.hpp"
#include "domfan/fan2x2.hpp"
#include "domfan/quadratic.hpp"

using namespace domfan;

namespace {
ExchangeMatrix M(int64_t b12, int64_t b21) { return ExchangeMatrix({{0, b12}, {b21, 0}}); }
Rational Q(long p, long q = 1) { return Rational(p, q); }
}  // namespace

TEST_SUITE("fan2x2") {
  TEST_CASE("exact quadratic comparison") {
    CHECK(qn_cmp(QuadraticNumber(0, 1, 2), QuadraticNumber(Q(3, 2))) == std::strong_ordering::less);
    CHECK(qn_cmp(QuadraticNumber(1, 1, 8), QuadraticNumber(1, 2, 2)) == std::strong_ordering::equal);
    CHECK(QuadraticNumber(1, 1, 8) == QuadraticNumber(1, 2, 2));
    CHECK(qn_cmp(QuadraticNumber(0, 1, 3), QuadraticNumber(0, 1, 2)) == std::strong_ordering::greater);
    CHECK(qn_cmp(QuadraticNumber(0, 1, 2), QuadraticNumber(Q(7, 5))) == std::strong_ordering::greater);
    CHECK(qn_cmp(QuadraticNumber(Q(3, 2), -1, 2), QuadraticNumber(Q(1, 11))) == std::strong_ordering::less);
    CHECK(surd_sign(-3, 1, 9) == 0);
    CHECK(surd_sign(-3, 1, 8) == -1);
    CHECK(qn_cmp(s_infinity(1, -5), QuadraticNumber(Q(-1, 2))) == std::strong_ordering::less);
    CHECK(qn_cmp(QuadraticNumber(Q(-1, 2)), t_infinity(1, -5)) == std::strong_ordering::less);
    CHECK(QuadraticNumber(Q(-1, 2), Q(-1, 2), 5).to_string() == "-1/2 - 1/2*sqrt(5)");
  }

  TEST_CASE("the P_m sequence") {
    for (int64_t a = 0; a <= 4; ++a)
      for (int64_t b = -4; b <= 0; ++b) {
        CHECK(p_m(0, a, b) == 1);
        CHECK(p_m(1, a, b) == 1);
        CHECK(p_m(2, a, b) == -a * b - 1);
        CHECK(p_m(3, a, b) == -a * b - 2);
        CHECK(p_m(4, a, b) == a * a * b * b + 3 * a * b + 1);
        CHECK(p_m(5, a, b) == a * a * b * b + 4 * a * b + 3);
      }
    for (auto [a, b] : {std::pair<int64_t, int64_t>{1, -4}, {2, -2}}) {
      std::vector<Integer> got;
      for (size_t m = 0; m <= 5; ++m) got.push_back(p_m(m, a, b));
      CHECK(got == std::vector<Integer>{1, 1, 3, 2, 5, 3});
    }
  }

  TEST_CASE("canonical form") {
    const Rank2Params p = canonicalize_2x2(M(-2, 1));
    CHECK(p.a == 2);
    CHECK(p.b == -1);
    CHECK(p.antipode);
    CHECK(canonicalize_2x2(M(0, 0)).type == Rank2Type::Zero);
    CHECK(canonicalize_2x2(M(1, -3)).type == Rank2Type::Finite);
    CHECK(canonicalize_2x2(M(4, -1)).type == Rank2Type::Affine);
    CHECK(canonicalize_2x2(M(2, -3)).type == Rank2Type::Wild);
    CHECK_THROWS_AS(canonicalize_2x2(ExchangeMatrix::zero(3)), InvalidArgument);
  }

  TEST_CASE("rays") {
    const Rank2Rays g2 = rays_2x2(M(1, -3));
    std::set<IntegerRay> got(g2.rays.begin(), g2.rays.end());
    const std::set<IntegerRay> want{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {2, -1}, {3, -2}, {3, -1}};
    CHECK(got == want);
    CHECK_FALSE(g2.v_inf);
    const Rank2Rays z = rays_2x2(M(0, 0));
    CHECK(z.rays.size() == 4);
    const Rank2Rays neg = rays_2x2(M(-1, 3));
    for (const auto& r : neg.rays) CHECK(want.count({-r[0], -r[1]}) == 1);
    const Rank2Rays aff = rays_2x2(M(2, -2), 4);
    REQUIRE(aff.v_inf);
    CHECK(aff.v_inf->at(1).to_double() / aff.v_inf->at(0).to_double() == doctest::Approx(-1.0));
    CHECK(*aff.v_inf == *aff.w_inf);
  }

  TEST_CASE("slope examples") {
    CHECK(slopes_2x2(M(1, -2)).rational_slopes == std::set<Rational>{-1, Q(-1, 2)});
    CHECK(slopes_2x2(M(3, -1)).rational_slopes == std::set<Rational>{-3, -2, Q(-3, 2), -1});
    const SlopeSet aff = slopes_2x2(M(1, -4), 3);
    CHECK(aff.s == std::vector<Rational>{-1, Q(-3, 4), Q(-2, 3), Q(-5, 8)});
    CHECK(aff.t == std::vector<Rational>{Q(-1, 4), Q(-1, 3), Q(-3, 8), Q(-2, 5)});
    CHECK(*aff.s_inf == QuadraticNumber(Q(-1, 2)));
    CHECK(*aff.t_inf == QuadraticNumber(Q(-1, 2)));
    CHECK(slopes_2x2(M(-1, 4), 3).transform == "antipode");
  }

  TEST_CASE("slopes are monotone and squeeze the limits") {
    for (auto [a, b] : {std::pair<int64_t, int64_t>{1, -4}, {2, -2}, {4, -1}, {1, -5}, {2, -3}, {5, -5}}) {
      const SlopeSet s = slopes_2x2(M(a, b), 12);
      for (size_t k = 0; k + 1 < s.s.size(); ++k) {
        CHECK(s.s[k] < s.s[k + 1]);
        CHECK(s.t[k] > s.t[k + 1]);
      }
      CHECK(qn_cmp(QuadraticNumber(s.s.back()), *s.s_inf) == std::strong_ordering::less);
      CHECK(qn_cmp(QuadraticNumber(s.t.back()), *s.t_inf) == std::strong_ordering::greater);
      CHECK(qn_cmp(*s.s_inf, *s.t_inf) != std::strong_ordering::greater);
      // Affine slopes converge like 1/k, so only a loose numeric agreement is expected at k = 12.
      CHECK(s.s_inf->to_double() == doctest::Approx(s.s.back().get_d()).epsilon(0.1));
    }
  }

  TEST_CASE("refinement examples") {
    CHECK(refines_2x2(M(1, -3), M(1, -2)).refines);
    CHECK(refines_2x2(M(1, -5), M(1, -1)).refines);
    CHECK_FALSE(refines_2x2(M(3, -3), M(1, -1)).refines);
    CHECK_FALSE(refines_2x2(M(1, -1), M(1, -2)).refines);
    CHECK(refines_2x2(M(2, -3), M(2, -3)).refines);
    CHECK_FALSE(refines_2x2(M(2, -3), M(2, -2)).refines);
    CHECK(refines_2x2(M(5, -5), M(0, 0)).refines);
    CHECK_THROWS_AS(refines_2x2(ExchangeMatrix::zero(3), M(0, 0)), InvalidArgument);
  }

  TEST_CASE("scattering-fan refinement") {
    CHECK(scatfan_refines_2x2(M(1, -4), M(1, -3)));
    CHECK_FALSE(scatfan_refines_2x2(M(2, -2), M(3, -1)));
    CHECK(scatfan_refines_2x2(M(2, -3), M(2, -3)));
    CHECK(scatfan_refines_2x2(M(2, -3), M(1, -2)));
  }
}

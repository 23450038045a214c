#include <doctest.h>

#include "domfan/cluster.hpp"
#include "domfan/error.hpp"
#include "domfan/theta2x2.hpp"

using namespace domfan;

namespace {
LaurentPoly P(const char* text, std::map<std::string, LaurentPoly> bind = {}) { return parse_laurent(text, 2, 2, bind); }
ExchangeMatrix M(int64_t b12, int64_t b21) { return ExchangeMatrix({{0, b12}, {b21, 0}}); }
}  // namespace

TEST_SUITE("theta2x2") {
  TEST_CASE("regions") {
    CHECK(theta_region({-2, 3, {0, 4}}) == ThetaRegion::FirstColumn);
    CHECK(theta_region({-2, 3, {-1, 5}}).has_value());
    CHECK_FALSE(theta_region({-2, 3, {1, -1}}).has_value());
    CHECK(to_string(ThetaRegion::Special) == "special");
  }

  TEST_CASE("closed forms") {
    for (auto [a, b] : {std::pair<int64_t, int64_t>{-1, 1}, {-2, 3}, {-4, 1}})
      for (int64_t m2 : {0, 2, 5}) CHECK(theta({a, b, {0, m2}}) == LaurentPoly::x(2, 2, 1).pow(m2));
    CHECK(theta({-1, 1, {-1, 1}}) == P("(y1 + x2)/x1"));
    CHECK(theta({-1, 1, {-1, 1}}) == rank2_cluster_variable(-1, 1, 3));
    const LaurentPoly x0 = rank2_cluster_variable(-3, 1, 0);
    CHECK(theta({-3, 1, {-2, 3}}) ==
          P("x1^-2*x2^3 + 2*y1*x1^-2 + 3*y1*y2*x1^-1 + y1^2*x0^3*x1^-2", {{"x0", x0}}));
    CHECK_THROWS_AS(theta({-1, 1, {1, -1}}), RegionNotCovered);
    CHECK_THROWS_AS(theta({1, 1, {0, 1}}), InvalidArgument);
    CHECK_THROWS_AS(theta({-1, 0, {0, 1}}), InvalidArgument);
  }

  TEST_CASE("cluster variables of the rank-2 chain") {
    CHECK(rank2_cluster_variable(-2, 3, 1) == P("x1"));
    CHECK(rank2_cluster_variable(-2, 3, 2) == P("x2"));
    CHECK(rank2_cluster_variable(-2, 3, 0) == P("(x1^3*y2 + 1)/x2"));
    CHECK(rank2_cluster_variable(-2, 3, 3) == P("(y1 + x2^2)/x1"));
    CHECK_THROWS_AS(rank2_cluster_variable(-1, 1, 6), InvalidArgument);
    // Each one is homogeneous for B = [[0,b],[a,0]].
    for (int i = -4; i <= 5; ++i) CHECK_NOTHROW(g_degree(rank2_cluster_variable(-2, 3, i), M(3, -2)));
  }

  TEST_CASE("limiting theta functions") {
    CHECK(x_infinity(-2, 2) == P("(y1 + y1*y2*x1^2 + x2^2)/(x1*x2)"));
    CHECK(x_infinity(-1, 4) == P("(x1^4*y1^2*y2 + x2^2 + 2*x2*y1 + y1^2)/(x1^2*x2)"));
    CHECK(x_infinity(-4, 1) == P("(y1*y2^2*x1^2 + y1 + 2*y1*y2*x1 + x2^4)/(x1*x2^2)"));
    CHECK(g_degree(x_infinity(-2, 2), M(2, -2)) == IntVector{-1, 1});
    CHECK(g_degree(x_infinity(-1, 4), M(4, -1)) == IntVector{-2, 1});
    CHECK(g_degree(x_infinity(-4, 1), M(1, -4)) == IntVector{-1, 2});
    CHECK_THROWS_AS(x_infinity(-1, 3), InvalidArgument);
    CHECK(limit_theta(M(2, -2)) == x_infinity(-2, 2));
    // The opposite orientation swaps the roles of the two indices.
    const LaurentPoly swapped = limit_theta(M(-1, 4));
    CHECK(g_degree(swapped, M(-1, 4)) == IntVector{1, -2});
  }
}

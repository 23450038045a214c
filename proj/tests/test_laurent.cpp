#include <doctest.h>

#include "domfan/error.hpp"
#include "domfan/laurent.hpp"

using namespace domfan;

namespace {
LaurentPoly P(const char* text, size_t n = 2) { return parse_laurent(text, n, n); }
const ExchangeMatrix kA2(std::vector<IntVector>{{0, 1}, {-1, 0}});
}  // namespace

TEST_SUITE("laurent") {
  TEST_CASE("ring arithmetic") {
    CHECK((P("x1 + 1") * P("x1 - 1")) == P("x1^2 - 1"));
    CHECK((P("x1*y2 + 3") + -P("x1*y2 + 3")).is_zero());
    CHECK((P("x1^-1") * P("x1")).is_constant(1));
    CHECK(P("(x1 + x2)").pow(3) == P("x1^3 + 3*x1^2*x2 + 3*x1*x2^2 + x2^3"));
    CHECK(P("x1*x2^-2").pow(-2) == P("x1^-2*x2^4"));
    CHECK_THROWS(P("x1 + 1").pow(-1));
    CHECK_THROWS(LaurentPoly(2, 2) + LaurentPoly(3, 3));
  }

  TEST_CASE("printing round-trips through the parser") {
    const LaurentPoly p = P("(x1*y2 + 1)/x2 - 7*y1^3*x2^-4");
    CHECK(P(p.to_string().c_str()) == p);
    CHECK(LaurentPoly(2, 2).to_string() == "0");
  }

  TEST_CASE("exact division") {
    CHECK(div_exact(P("x1*y2 + 1"), P("x2")) == P("x1*x2^-1*y2 + x2^-1"));
    CHECK(div_exact(P("x1^2 - 1"), P("x1 - 1")) == P("x1 + 1"));
    CHECK(div_exact(P("x1 + y1"), P("x2")) == P("x1*x2^-1 + y1*x2^-1"));
    CHECK(div_exact(P("(x1 + y1)*(x2^-1 + y2*x1)"), P("x2^-1 + y2*x1")) == P("x1 + y1"));
    CHECK_THROWS_AS(div_exact(P("x1^2 + 1"), P("x1 - 1")), InexactDivision);
    CHECK_THROWS_AS(div_exact(P("x1"), LaurentPoly(2, 2)), InvalidArgument);
    CHECK_THROWS_AS(P("(x1 + 1)/(x2 + 1)"), InexactDivision);
  }

  TEST_CASE("g-degrees") {
    CHECK(g_degree(P("x1"), kA2) == IntVector{1, 0});
    CHECK(g_degree(P("y1"), kA2) == IntVector{0, 1});
    // deg x1 y2 = (1,0) + (-1,0) = (0,0), so the quotient by x2 has degree (0,-1).
    CHECK(g_degree(P("(x1*y2 + 1)/x2"), kA2) == IntVector{0, -1});
    CHECK(g_degree(P("(x2 + y1)/x1"), kA2) == IntVector{-1, 1});
    CHECK_THROWS_AS(g_degree(P("x1 + 1"), kA2), Inhomogeneous);
    CHECK_THROWS(g_degree(LaurentPoly(2, 2), kA2));
  }

  TEST_CASE("substitution") {
    const LaurentPoly p = P("(x1*y2 + 1)/x2 + y1^2");
    CHECK(substitute(p, {P("x1"), P("x2")}, {P("y1"), P("y2")}) == p);
    const LaurentPoly one = LaurentPoly::constant(2, 2, 1);
    CHECK(substitute(P("(x2 + y1)/x1"), {one, one}, {P("y1"), P("y2")}) == P("1 + y1"));
    CHECK(substitute(P("x1*y1"), {P("x1"), P("x2")}, {P("y1*x2^3"), P("y2")}) == P("x1*x2^3*y1"));
    CHECK_THROWS(substitute(P("x1^-1"), {P("x1 + 1"), P("x2")}, {P("y1"), P("y2")}));
  }

  TEST_CASE("F-polynomials and the separation formula") {
    CHECK(f_polynomial(P("x1")).is_constant(1));
    CHECK(check_g_f(P("x1"), kA2));
    CHECK(f_polynomial(P("(x2 + y1)/x1")) == P("1 + y1"));
    CHECK(check_g_f(P("(x2 + y1)/x1"), kA2));
    CHECK(check_g_f(P("(x1*y2 + 1)/x2"), kA2));
    CHECK(check_g_f(P("(x2 + 2*y1)/x1"), kA2));
    CHECK_THROWS_AS(check_g_f(P("x1 + x2"), kA2), Inhomogeneous);
  }
}

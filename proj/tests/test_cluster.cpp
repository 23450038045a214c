#include <doctest.h>

#include <set>

#include "domfan/cluster.hpp"
#include "domfan/error.hpp"

using namespace domfan;

namespace {
ExchangeMatrix M(std::vector<IntVector> rows) { return ExchangeMatrix(std::move(rows)); }
LaurentPoly P(const char* text, size_t n = 2) { return parse_laurent(text, n, n); }
const ExchangeMatrix kA2 = M({{0, 1}, {-1, 0}});
}  // namespace

TEST_SUITE("cluster-engine") {
  TEST_CASE("initial seed") {
    const Seed s = initial_seed(kA2);
    CHECK(s.cluster == std::vector<LaurentPoly>{P("x1"), P("x2")});
    CHECK(s.coefficients == std::vector<IntVector>{{1, 0}, {0, 1}});
  }

  TEST_CASE("seed mutation") {
    const Seed s = initial_seed(kA2);
    const Seed s2 = mutate_seed(s, 1);
    CHECK(s2.cluster[1] == P("(x1*y2 + 1)/x2"));
    CHECK(s2.cluster[0] == P("x1"));
    CHECK(mutate_seed(s, 0).cluster[0] == P("(x2 + y1)/x1"));
    for (size_t k : {0, 1}) CHECK(mutate_seed(mutate_seed(s, k), k) == s);
    CHECK_THROWS_AS(mutate_seed(s, 2), IndexOutOfRange);
  }

  TEST_CASE("catalog sizes in finite type") {
    struct Row {
      std::vector<IntVector> b;
      size_t variables, clusters;
    };
    const std::vector<Row> rows{
        {{{0, 0}, {0, 0}}, 4, 4},
        {{{0, 1}, {-1, 0}}, 5, 5},
        {{{0, 1}, {-2, 0}}, 6, 6},
        {{{0, 1}, {-3, 0}}, 8, 8},
        {{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}, 9, 14},
        {{{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}}, 9, 14},
        {{{0, 1, 0}, {-1, 0, 1}, {0, -2, 0}}, 12, 20},
    };
    for (const auto& r : rows) {
      const ClusterCatalog c = enumerate(M(r.b));
      CHECK(c.variables().size() == r.variables);
      CHECK(c.clusters().size() == r.clusters);
    }
    CHECK_THROWS_AS(enumerate(M({{0, 2}, {-2, 0}}), 20), BudgetExceeded);
  }

  TEST_CASE("g-vectors are distinct and agree with the grading") {
    const ClusterCatalog c = enumerate(M({{0, 1, 0}, {-1, 0, 1}, {0, -2, 0}}));
    std::set<IntVector> seen(c.gvectors().begin(), c.gvectors().end());
    CHECK(seen.size() == c.variables().size());
    for (size_t i = 0; i < c.variables().size(); ++i) {
      CHECK(g_degree(c.variables()[i], c.matrix()) == c.gvectors()[i]);
      CHECK(g_vector(c, c.variables()[i]) == c.gvectors()[i]);
    }
    const ClusterCatalog a2 = enumerate(kA2);
    CHECK(g_vector(a2, P("x1")) == IntVector{1, 0});
    CHECK(g_vector(a2, P("(x1*y2 + 1)/x2")) == IntVector{0, -1});
  }

  TEST_CASE("exchange records reproduce the exchange relations") {
    const ClusterCatalog c = enumerate(M({{0, 1}, {-3, 0}}));
    REQUIRE_FALSE(c.exchanges().empty());
    for (const auto& e : c.exchanges()) {
      const size_t n = c.matrix().rank();
      LaurentPoly pos = LaurentPoly::constant(n, n, 1), neg = LaurentPoly::constant(n, n, 1);
      for (size_t i = 0; i < n; ++i) {
        const LaurentPoly v = c.variables()[e.cluster[i]];
        if (e.b_column[i] > 0) pos *= v.pow(e.b_column[i]);
        if (e.b_column[i] < 0) neg *= v.pow(-e.b_column[i]);
        const LaurentPoly y = LaurentPoly::y(n, n, i);
        if (e.c_column[i] > 0) pos *= y.pow(e.c_column[i]);
        if (e.c_column[i] < 0) neg *= y.pow(-e.c_column[i]);
      }
      CHECK(c.variables()[e.cluster[e.k]] * c.variables()[e.new_variable] == pos + neg);
    }
  }

  TEST_CASE("g-vector fans") {
    CHECK(gvector_fan(transpose(kA2)).cones().size() == 5);
    CHECK(gvector_fan(ExchangeMatrix::zero(2)).cones().size() == 4);
    CHECK(gvector_fan(transpose(M({{0, 1}, {-3, 0}}))).cones().size() == 8);
  }

  TEST_CASE("cluster monomials by g-vector") {
    const ClusterCatalog c = enumerate(kA2);
    CHECK(cluster_monomial_for_gvector(c, {0, 0}).empty());
    CHECK(evaluate(c, cluster_monomial_for_gvector(c, {0, 0})).is_constant(1));
    CHECK(evaluate(c, cluster_monomial_for_gvector(c, {1, 0})) == P("x1"));
    CHECK(evaluate(c, cluster_monomial_for_gvector(c, {2, 1})) == P("x1^2*x2"));
    CHECK(evaluate(c, cluster_monomial_for_gvector(c, {0, -2})) == P("(x1*y2 + 1)/x2").pow(2));
  }
}

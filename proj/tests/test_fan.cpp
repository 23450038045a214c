#include <doctest.h>

#include "domfan/cluster.hpp"
#include "domfan/error.hpp"
#include "domfan/fan.hpp"

using namespace domfan;

namespace {
ExchangeMatrix M(std::vector<IntVector> rows) { return ExchangeMatrix(std::move(rows)); }
RationalCone C(std::vector<IntVector> rays) {
  const size_t n = rays.front().size();
  return RationalCone(n, std::move(rays));
}
Fan quadrants() { return gvector_fan(ExchangeMatrix::zero(2)); }
Fan mutation_fan(const ExchangeMatrix& b) { return gvector_fan(transpose(b)); }
const ExchangeMatrix kA2 = M({{0, 1}, {-1, 0}});
}  // namespace

TEST_SUITE("fan-geometry") {
  TEST_CASE("cone membership") {
    const RationalCone q = C({{1, 0}, {0, 1}});
    CHECK(cone_contains(q, {1, 1}));
    CHECK_FALSE(cone_contains(q, {1, -1}));
    CHECK(cone_contains(q, {0, 0}));
    CHECK(cone_contains(C({{1, 2, 0}}), {Rational(1, 2), 1, 0}));
    CHECK_FALSE(cone_contains(C({{1, 2, 0}}), {1, 1, 0}));
    CHECK(q.contains_in_interior({1, 1}));
    CHECK_FALSE(q.contains_in_interior({1, 0}));
  }

  TEST_CASE("cone inclusion") {
    const RationalCone q = C({{1, 0}, {0, 1}});
    CHECK(cone_subset(C({{1, 0}, {1, 1}}), q));
    CHECK_FALSE(cone_subset(q, C({{1, 0}, {1, 1}})));
    CHECK(cone_subset(q, q));
    CHECK(cone_subset(C({{1, 1, 1}}), C({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
  }

  TEST_CASE("refinement") {
    CHECK(fan_refines(mutation_fan(kA2), quadrants()).refines);
    CHECK_FALSE(fan_refines(quadrants(), mutation_fan(kA2)).refines);
    CHECK(fan_refines(mutation_fan(kA2), mutation_fan(kA2)).refines);
    const Fan cyc = mutation_fan(M({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}}));
    const Fan erased = mutation_fan(M({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}));
    const RefinementResult r = fan_refines(cyc, erased);
    CHECK_FALSE(r.refines);
    CHECK(r.uncovered.has_value());
  }

  TEST_CASE("walls") {
    const auto qw = walls(quadrants());
    CHECK(qw.size() == 4);
    for (const auto& w : qw) CHECK((w.normal == IntVector{1, 0} || w.normal == IntVector{0, 1}));
    CHECK(walls(mutation_fan(kA2)).size() == 5);
    CHECK(hyperplane_normal({{1, 1, 0}, {0, 0, 1}}, 3) == IntVector{1, -1, 0});
  }

  TEST_CASE("coarsening by roots") {
    const Fan f = mutation_fan(kA2);
    RootSet all;
    for (const auto& w : walls(f)) all.insert(w.normal);
    CHECK(coarsening_by_roots(f, all) == f);
    CHECK(coarsening_by_roots(f, RootSet{{1, 0}, {0, 1}}) == quadrants());
  }

  TEST_CASE("fans cover space once") {
    for (const auto& b : {kA2, M({{0, 1}, {-3, 0}}), M({{0, 1, 0}, {-1, 0, 1}, {0, -2, 0}})}) {
      const CoverageReport r = sample_coverage(mutation_fan(b), 2000);
      CHECK(r.uncovered == 0);
      CHECK(r.multiply_interior == 0);
    }
  }

  TEST_CASE("malformed input") {
    CHECK_THROWS_AS(RationalCone(2, {{1, 0, 0}}), InvalidArgument);
    CHECK_THROWS_AS(RationalCone(2, {{0, 0}}), InvalidArgument);
  }
}

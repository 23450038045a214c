#include <doctest.h>

#include <random>

#include "domfan/error.hpp"
#include "domfan/mulin.hpp"
#include "oracles.hpp"

using namespace domfan;

namespace {
ExchangeMatrix M(std::vector<IntVector> rows) { return ExchangeMatrix(std::move(rows)); }
const ExchangeMatrix kA2 = M({{0, 1}, {-1, 0}});

LinearRelation rel(size_t dim, std::vector<std::pair<long, RationalVector>> terms) {
  std::vector<RelationTerm> t;
  for (auto& [c, v] : terms) t.push_back({Rational(c), v});
  return LinearRelation(dim, std::move(t));
}
const LinearRelation kA2Triple = rel(2, {{1, {1, 0}}, {1, {0, 1}}, {-1, {1, 1}}});
}  // namespace

TEST_SUITE("mulin") {
  TEST_CASE("mutation map examples") {
    CHECK(eta(kA2, 0, {1, 0}) == RationalVector{-1, 1});
    CHECK(eta(kA2, 0, {-1, 0}) == RationalVector{1, 0});
    CHECK(eta(kA2, 1, {0, 0}) == RationalVector{0, 0});
    CHECK(eta_seq(kA2, std::vector<size_t>{}, {3, -2}) == RationalVector{3, -2});
    CHECK_THROWS_AS(eta(kA2, 2, {1, 0}), IndexOutOfRange);
    CHECK_THROWS_AS(eta(kA2, 0, {1, 0, 0}), InvalidArgument);
  }

  TEST_CASE("mutation map matches the four-case formula, inverts, scales and is antipodal") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
      const size_t n = 2 + trial % 3;
      const auto rows = oracle::random_skew_symmetrizable(rng, n, 3);
      const ExchangeMatrix b(rows);
      const RationalVector v = oracle::random_vector(rng, n, 5);
      const auto ks = oracle::random_sequence(rng, n, 1 + trial % 5);
      CHECK(eta_seq(b, ks, v) == oracle::eta_seq(rows, ks, v));
      const size_t k = ks.front();
      CHECK(eta(mutate(b, k), k, eta(b, k, v)) == v);
      RationalVector v3 = v, img3 = eta(b, k, v);
      for (auto& x : v3) x *= Rational(3, 2);
      for (auto& x : img3) x *= Rational(3, 2);
      CHECK(eta(b, k, v3) == img3);
      RationalVector neg = v;
      for (auto& x : neg) x = -x;
      RationalVector img = eta_seq(negate(b), ks, neg);
      for (auto& x : img) x = -x;
      CHECK(img == eta_seq(b, ks, v));
    }
  }

  TEST_CASE("relations must sum to zero") {
    CHECK_THROWS_AS(rel(2, {{1, {1, 0}}, {1, {0, 1}}}), InvalidArgument);
    CHECK_THROWS_AS(rel(2, {{1, {1, 0, 0}}, {-1, {1, 0, 0}}}), InvalidArgument);
    CHECK(rel(2, {}).empty());
  }

  TEST_CASE("coherence of the A2 examples") {
    const CoherenceVerdict bad = check_coherence(kA2, rel(2, {{1, {1, 0}}, {1, {-1, 0}}}), 4);
    CHECK(bad.status == CoherenceStatus::Fails);
    REQUIRE(bad.counterexample);
    // The min equation already fails without mutating; the linear one after mu_1.
    CHECK(bad.counterexample->sequence.empty());
    CHECK(bad.counterexample->equation == FailingEquation::Min);
    REQUIRE(bad.first_linear_failure);
    CHECK(*bad.first_linear_failure == std::vector<size_t>{0});

    for (size_t depth : {1, 5, 10}) CHECK(check_coherence(kA2, kA2Triple, depth).status == CoherenceStatus::HoldsToDepth);
    CHECK(check_coherence(kA2, rel(2, {}), 6).status == CoherenceStatus::HoldsToDepth);
    CHECK_THROWS_AS(check_coherence(kA2, kA2Triple, 30, 50), BudgetExceeded);
  }

  TEST_CASE("sign signatures") {
    CHECK(same_b_class_bounded(kA2, {1, 2}, {2, 4}, 6));
    const Signature s0 = sign_signature(kA2, {1, 0}, 0);
    CHECK(s0.at({}) == SignVector{1, 0});
    CHECK(sign_signature(kA2, {1, 1}, 0).at({}) == SignVector{1, 1});
    CHECK_FALSE(same_b_class_bounded(kA2, {1, 0}, {-1, 0}, 0));
    CHECK_FALSE(same_b_class_bounded(kA2, {1, 0}, {1, 1}, 0));
    const ExchangeMatrix zero = ExchangeMatrix::zero(2);
    CHECK(same_b_class_bounded(zero, {1, -3}, {5, -1}, 4));
    CHECK_FALSE(same_b_class_bounded(zero, {1, -3}, {5, 0}, 4));
  }

  TEST_CASE("common cones") {
    for (size_t d : {0, 3, 8}) CHECK(in_common_cone_bounded(kA2, {{1, 0}, {0, 1}, {1, 1}}, d));
    CHECK_FALSE(in_common_cone_bounded(kA2, {{1, 0}, {-1, 0}}, 0));
    CHECK(in_common_cone_bounded(kA2, {{-2, 7}}, 6));
    CHECK(sign_coherent({{1, 0}, {2, 3}}));
    CHECK_FALSE(sign_coherent({{1, 0}, {-2, 3}}));
  }

  TEST_CASE("linear maps on relations") {
    CHECK(map_antipodal(kA2Triple) == rel(2, {{1, {-1, 0}}, {1, {0, -1}}, {-1, {-1, -1}}}));
    CHECK(map_rescale(kA2Triple, {2, 1}) == rel(2, {{1, {2, 0}}, {1, {0, 1}}, {-1, {2, 1}}}));
    CHECK(map_project(kA2Triple, {0}) == rel(1, {{1, {1}}, {1, {0}}, {-1, {1}}}));
    CHECK(map_reindex(kA2Triple, {1, 0}) == rel(2, {{1, {0, 1}}, {1, {1, 0}}, {-1, {1, 1}}}));
    CHECK_THROWS_AS(map_rescale(kA2Triple, {0, 1}), InvalidArgument);
    CHECK_THROWS_AS(map_project(kA2Triple, {}), InvalidArgument);
  }

  TEST_CASE("the maps preserve coherence verdicts") {
    const ExchangeMatrix b2 = M({{0, 1}, {-2, 0}});
    const LinearRelation r = rel(2, {{1, {1, 0}}, {2, {0, 1}}, {-1, {1, 2}}});
    const size_t d = 6;
    REQUIRE(check_coherence(b2, r, d).status == CoherenceStatus::HoldsToDepth);
    CHECK(check_coherence(negate(b2), map_antipodal(r), d).status == CoherenceStatus::HoldsToDepth);
    CHECK(check_coherence(reindex(b2, {1, 0}), map_reindex(r, {1, 0}), d).status == CoherenceStatus::HoldsToDepth);
    // Sigma^{-1} B Sigma with Sigma = diag(1,2) turns [[0,1],[-2,0]] into [[0,2],[-1,0]].
    CHECK(rescale_matrix(b2, {1, 2}) == M({{0, 2}, {-1, 0}}));
    CHECK(check_coherence(rescale_matrix(b2, {1, 2}), map_rescale(r, {1, 2}), d).status == CoherenceStatus::HoldsToDepth);
    CHECK_THROWS_AS(rescale_matrix(b2, {1, 3}), InvalidArgument);
  }

  TEST_CASE("transport along a mutation sequence") {
    const std::vector<size_t> ks{1, 0};
    std::vector<RelationTerm> moved;
    for (const auto& t : kA2Triple.terms()) moved.push_back({t.coeff, eta_seq(kA2, ks, t.vector)});
    const LinearRelation image(2, moved);
    CHECK(check_coherence(mutate_seq(kA2, ks), image, 6).status == CoherenceStatus::HoldsToDepth);
  }
}

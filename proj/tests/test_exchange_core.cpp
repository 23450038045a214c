#include <doctest.h>

#include <random>

#include "domfan/error.hpp"
#include "domfan/exchange_matrix.hpp"
#include "oracles.hpp"

using namespace domfan;

namespace {
ExchangeMatrix M(std::vector<IntVector> rows) { return ExchangeMatrix(std::move(rows)); }
const ExchangeMatrix kCyclic = M({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}});
}  // namespace

TEST_SUITE("exchange-core") {
  TEST_CASE("skew-symmetrizers") {
    CHECK(skew_symmetrizer({{0, 1}, {-1, 0}}) == IntVector{1, 1});
    CHECK(skew_symmetrizer({{0, 1}, {-2, 0}}) == IntVector{2, 1});
    CHECK_FALSE(skew_symmetrizer({{0, 1}, {2, 0}}));
    CHECK_FALSE(skew_symmetrizer({{0, 1}, {0, 0}}));
    CHECK_FALSE(skew_symmetrizer({{1, 0}, {0, 0}}));
    CHECK_THROWS_AS(M({{0, 1}, {2, 0}}), InvalidArgument);
    CHECK_THROWS_AS(M({{0, 1, 0}, {-1, 0}}), InvalidArgument);
    // Cycle condition: b12 b23 b31 = -b21 b32 b13 fails here.
    CHECK_FALSE(skew_symmetrizer({{0, 1, -1}, {-1, 0, 2}, {1, -1, 0}}));
  }

  TEST_CASE("mutation examples") {
    CHECK(mutate(M({{0, 1}, {-1, 0}}), 0) == M({{0, -1}, {1, 0}}));
    CHECK(mutate(kCyclic, 0) == M({{0, -1, 1}, {1, 0, 0}, {-1, 0, 0}}));
    CHECK_THROWS_AS(mutate(kCyclic, 3), IndexOutOfRange);
  }

  TEST_CASE("mutation agrees with the textbook rule and is an involution") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
      const size_t n = 2 + trial % 4;
      const auto rows = oracle::random_skew_symmetrizable(rng, n, 3);
      const ExchangeMatrix b(rows);
      for (size_t k = 0; k < n; ++k) {
        CHECK(mutate(b, k).rows() == oracle::mutate(rows, k));
        CHECK(mutate(mutate(b, k), k) == b);
      }
    }
  }

  TEST_CASE("mutation sequences apply the last entry first") {
    const ExchangeMatrix b = M({{0, 1}, {-1, 0}});
    CHECK(mutate_seq(b, std::vector<size_t>{}) == b);
    CHECK(mutate_seq(b, std::vector<size_t>{0, 0}) == b);
    CHECK(mutate_seq(b, std::vector<size_t>{1, 0}) == mutate(mutate(b, 0), 1));
    const std::vector<size_t> ks{2, 0, 1};
    CHECK(mutate_seq(kCyclic, ks) == mutate(mutate(mutate(kCyclic, 1), 0), 2));
  }

  TEST_CASE("extended mutation of coefficient rows") {
    const ExchangeMatrix b = M({{0, 1}, {-1, 0}});
    auto row = [&](RationalVector r) { return mutate(ExtendedExchangeMatrix(b, {r}), 0).coefficient_rows[0]; };
    CHECK(row({1, 0}) == RationalVector{-1, 1});
    CHECK(row({-1, 0}) == RationalVector{1, 0});
    CHECK(row({0, 0}) == RationalVector{0, 0});
    CHECK_THROWS(ExtendedExchangeMatrix(b, {{1, 2, 3}}));
  }

  TEST_CASE("dominance") {
    const ExchangeMatrix torus = M({{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}});
    const ExchangeMatrix annulus = M({{0, 1, -1}, {-1, 0, 2}, {1, -2, 0}});
    CHECK(dominates(torus, annulus));
    CHECK(dominates(annulus, kCyclic));
    CHECK(dominates(torus, kCyclic));
    CHECK_FALSE(dominates(annulus, torus));
    CHECK_FALSE(dominates(M({{0, 1}, {-1, 0}}), M({{0, -1}, {1, 0}})));
    CHECK(dominates(kCyclic, kCyclic));
    CHECK(dominates(kCyclic, ExchangeMatrix::zero(3)));
  }

  TEST_CASE("erasing edges and submatrices") {
    CHECK(erase_edges(kCyclic, {0, 1}, {2}) == M({{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}));
    CHECK(erase_edges(kCyclic, {0, 1, 2}, {}) == kCyclic);
    CHECK(dominates(kCyclic, erase_edges(kCyclic, {0}, {1, 2})));
    CHECK_THROWS_AS(erase_edges(kCyclic, {0}, {1}), InvalidArgument);
    CHECK(submatrix(kCyclic, {0, 1}).matrix == M({{0, 1}, {-1, 0}}));
    CHECK(project({3, -1, 2}, {0, 2}) == RationalVector{3, 2});
    for (size_t k : {0, 1}) CHECK(submatrix(mutate(kCyclic, k), {0, 1}).matrix == mutate(M({{0, 1}, {-1, 0}}), k));
  }

  TEST_CASE("symmetries") {
    CHECK(negate(M({{0, 1}, {-1, 0}})) == M({{0, -1}, {1, 0}}));
    CHECK(reindex(kCyclic, {0, 1, 2}) == kCyclic);
    CHECK(reindex(M({{0, 1}, {-2, 0}}), {1, 0}) == M({{0, -2}, {1, 0}}));
    CHECK(transpose(M({{0, 1}, {-2, 0}})) == M({{0, -2}, {1, 0}}));
    CHECK_THROWS_AS(reindex(kCyclic, {0, 0, 1}), InvalidArgument);
    CHECK(canonical_form(M({{0, -2}, {1, 0}})) == canonical_form(M({{0, 1}, {-2, 0}})));
  }

  TEST_CASE("cartan companions and roots") {
    CHECK(cartan(M({{0, 1}, {-1, 0}})).rows() == std::vector<IntVector>{{2, -1}, {-1, 2}});
    CHECK(cartan(M({{0, 1}, {-3, 0}})).rows() == std::vector<IntVector>{{2, -1}, {-3, 2}});
    CHECK(cartan(kCyclic) == cartan(negate(kCyclic)));
    CHECK(positive_roots(cartan(M({{0, 1}, {-1, 0}}))) == RootSet{{1, 0}, {0, 1}, {1, 1}});
    CHECK(positive_roots(cartan(M({{0, 1}, {-2, 0}}))).size() == 4);
    CHECK(positive_roots(cartan(M({{0, 1}, {-3, 0}}))).size() == 6);
    // A3, B3, C3, D4 counts.
    CHECK(positive_roots(cartan(M({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}))).size() == 6);
    CHECK(positive_roots(cartan(M({{0, 1, 0}, {-1, 0, 1}, {0, -2, 0}}))).size() == 9);
    CHECK(positive_roots(cartan(M({{0, 1, 0}, {-1, 0, 2}, {0, -1, 0}}))).size() == 9);
    CHECK(positive_roots(cartan(M({{0, 1, 1, 1}, {-1, 0, 0, 0}, {-1, 0, 0, 0}, {-1, 0, 0, 0}}))).size() == 12);
    CHECK_THROWS_AS(positive_roots(cartan(M({{0, 2}, {-2, 0}})), 1000), BudgetExceeded);
  }

  TEST_CASE("dominance of Cartan matrices shrinks the root system") {
    const ExchangeMatrix b3 = M({{0, 1, 0}, {-1, 0, 1}, {0, -2, 0}});
    const ExchangeMatrix a3 = M({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}});
    const ExchangeMatrix a2a1 = M({{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}});
    for (const auto& [big, small] : std::vector<std::pair<ExchangeMatrix, ExchangeMatrix>>{{b3, a3}, {a3, a2a1}, {b3, a2a1}}) {
      REQUIRE(dominates(cartan(big), cartan(small)));
      const RootSet rb = positive_roots(cartan(big)), rs = positive_roots(cartan(small));
      for (const auto& r : rs) CHECK(rb.count(r) == 1);
    }
  }

  TEST_CASE("acyclicity and finite type") {
    CHECK(is_acyclic(M({{0, 1}, {-1, 0}})));
    CHECK(is_finite_type(M({{0, 1}, {-1, 0}})));
    CHECK(is_acyclic(M({{0, 2}, {-2, 0}})));
    CHECK_FALSE(is_finite_type(M({{0, 2}, {-2, 0}})));
    CHECK_FALSE(is_acyclic(kCyclic));
    CHECK(is_finite_type(kCyclic));
    CHECK_FALSE(is_finite_type(M({{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}})));
    CHECK(is_finite_type(ExchangeMatrix::zero(3)));
    CHECK_FALSE(is_finite_type(M({{0, 1}, {-4, 0}})));
  }
}

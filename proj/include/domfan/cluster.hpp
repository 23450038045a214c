#pragma once

#include <map>
#include <optional>
#include <vector>

#include "domfan/exchange_matrix.hpp"
#include "domfan/fan.hpp"
#include "domfan/laurent.hpp"

namespace domfan {

/// Seed with principal-style coefficients: `coefficients[i]` is the row of
/// y_i in the extended exchange matrix.
struct Seed {
  ExchangeMatrix matrix;
  std::vector<IntVector> coefficients;
  std::vector<LaurentPoly> cluster;

  friend bool operator==(const Seed&, const Seed&) = default;
};

Seed initial_seed(const ExchangeMatrix& b);

/// Right-hand side of the exchange relation at k.
LaurentPoly exchange_binomial(const Seed& s, size_t k);

Seed mutate_seed(const Seed& s, size_t k);

/// One exchange relation v_k v'_k = binomial, recorded by catalog indices.
struct ExchangeRecord {
  std::vector<size_t> cluster;  // ordered cluster before mutation
  IntVector b_column;           // column k of the exchange matrix
  IntVector c_column;           // column k of the coefficient block
  size_t k;
  size_t new_variable;
};

inline constexpr size_t kDefaultSeedBudget = 50000;

/// All cluster variables and clusters of the principal-coefficient cluster
/// algebra, in breadth-first discovery order.
class ClusterCatalog {
 public:
  const ExchangeMatrix& matrix() const { return b_; }
  const std::vector<LaurentPoly>& variables() const { return variables_; }
  const std::vector<IntVector>& gvectors() const { return gvectors_; }
  /// Sorted variable indices of each cluster.
  const std::vector<std::vector<size_t>>& clusters() const { return clusters_; }
  const std::vector<ExchangeRecord>& exchanges() const { return exchanges_; }
  size_t seeds_explored() const { return seeds_explored_; }

  std::optional<size_t> find(const LaurentPoly& p) const;
  std::optional<size_t> find_gvector(const IntVector& g) const;

  friend ClusterCatalog enumerate(const ExchangeMatrix& b, size_t budget);

 private:
  explicit ClusterCatalog(ExchangeMatrix b) : b_(std::move(b)) {}

  ExchangeMatrix b_;
  std::vector<LaurentPoly> variables_;
  std::vector<IntVector> gvectors_;
  std::vector<std::vector<size_t>> clusters_;
  std::vector<ExchangeRecord> exchanges_;
  std::map<LaurentPoly, size_t> index_;
  std::map<IntVector, size_t> by_gvector_;
  size_t seeds_explored_ = 0;
};

/// Breadth-first search over seeds, identified by their unordered clusters.
/// Throws BudgetExceeded after `budget` distinct clusters, and Error if two
/// variables share a g-vector.
ClusterCatalog enumerate(const ExchangeMatrix& b, size_t budget = kDefaultSeedBudget);

/// One maximal cone per cluster, spanned by the g-vectors.
Fan gvector_fan(const ClusterCatalog& catalog);
Fan gvector_fan(const ExchangeMatrix& b, size_t budget = kDefaultSeedBudget);

/// Exponents of a cluster monomial, keyed by catalog variable index.
using ClusterMonomial = std::map<size_t, int64_t>;

/// The cluster monomial with g-vector `lambda`. Throws Error when lambda is
/// in no cluster cone or its coordinates there are not nonnegative integers.
ClusterMonomial cluster_monomial_for_gvector(const ClusterCatalog& catalog, const IntVector& lambda);
LaurentPoly evaluate(const ClusterCatalog& catalog, const ClusterMonomial& m);

IntVector g_vector(const ClusterCatalog& catalog, const LaurentPoly& v);

}  // namespace domfan

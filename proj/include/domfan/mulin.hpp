#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "domfan/exchange_matrix.hpp"
#include "domfan/numeric.hpp"

namespace domfan {

/// Mutation map eta^B_k (piecewise linear).
RationalVector eta(const ExchangeMatrix& b, size_t k, const RationalVector& v);

/// eta^{B_q}_{k_q} o ... o eta^{B_1}_{k_1} with B_1 = B and B_{i+1} = mu_{k_i}(B_i).
/// `ks` is written k_q, ..., k_1 (the last entry acts first).
RationalVector eta_seq(const ExchangeMatrix& b, std::span<const size_t> ks, const RationalVector& v);

struct RelationTerm {
  Rational coeff;
  RationalVector vector;
  friend bool operator==(const RelationTerm&, const RelationTerm&) = default;
};

/// A formal sum sum_i c_i v_i that evaluates to zero. Terms are kept as
/// given (no combining of like terms).
class LinearRelation {
 public:
  /// Throws InvalidArgument unless all vectors have length `dim` and the sum
  /// vanishes.
  LinearRelation(size_t dim, std::vector<RelationTerm> terms);

  size_t dim() const { return dim_; }
  const std::vector<RelationTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  friend bool operator==(const LinearRelation&, const LinearRelation&) = default;

 private:
  size_t dim_;
  std::vector<RelationTerm> terms_;
};

enum class CoherenceStatus { HoldsToDepth, Fails };
enum class FailingEquation { Linear, Min };

struct Counterexample {
  std::vector<size_t> sequence;  // k_q, ..., k_1 (0-based)
  FailingEquation equation;
};

struct CoherenceVerdict {
  CoherenceStatus status;
  size_t depth;   // the depth that was searched
  size_t nodes;   // sequences examined
  std::optional<Counterexample> counterexample;  // shortest, then lexicographic
  /// Shortest sequence on which the plain linear equation breaks, if any
  /// within depth. Can be longer than `counterexample`.
  std::optional<std::vector<size_t>> first_linear_failure;
};

inline constexpr size_t kDefaultCoherenceDepth = 8;
inline constexpr size_t kDefaultNodeBudget = 1000000;

/// Checks the linear and min equations on every index sequence of length at
/// most `depth`, skipping immediate repeats. Sequences are ordered by length,
/// then lexicographically in order of application. Throws BudgetExceeded when
/// more than `node_budget` sequences would be visited.
CoherenceVerdict check_coherence(const ExchangeMatrix& b, const LinearRelation& rel, size_t depth,
                                 size_t node_budget = kDefaultNodeBudget);

using SignVector = std::vector<int>;
using Signature = std::map<std::vector<size_t>, SignVector>;

SignVector sign_vector(const RationalVector& v);

/// Sign vectors of eta_k(v) for every pruned sequence k of length <= depth,
/// keyed by the sequence in k_q, ..., k_1 form.
Signature sign_signature(const ExchangeMatrix& b, const RationalVector& v, size_t depth,
                         size_t node_budget = kDefaultNodeBudget);
bool same_b_class_bounded(const ExchangeMatrix& b, const RationalVector& v, const RationalVector& w,
                          size_t depth, size_t node_budget = kDefaultNodeBudget);

/// True iff eta_k(vs) is sign-coherent for every pruned sequence of length
/// <= depth.
bool in_common_cone_bounded(const ExchangeMatrix& b, const std::vector<RationalVector>& vs,
                            size_t depth, size_t node_budget = kDefaultNodeBudget);

bool sign_coherent(const std::vector<RationalVector>& vs);

LinearRelation map_antipodal(const LinearRelation& rel);
/// v -> (v_{pi(1)}, ..., v_{pi(n)}).
LinearRelation map_reindex(const LinearRelation& rel, const std::vector<size_t>& perm);
/// v -> v Sigma for Sigma = diag(sigma), sigma positive.
LinearRelation map_rescale(const LinearRelation& rel, const RationalVector& sigma);
LinearRelation map_project(const LinearRelation& rel, const IndexSet& i_set);

/// Sigma^{-1} B Sigma; throws InvalidArgument if an entry is not an integer.
ExchangeMatrix rescale_matrix(const ExchangeMatrix& b, const RationalVector& sigma);

}  // namespace domfan

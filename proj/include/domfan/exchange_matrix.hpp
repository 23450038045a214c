#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "domfan/numeric.hpp"

namespace domfan {

/// Sorted, duplicate-free list of 0-based indices.
using IndexSet = std::vector<size_t>;

/// Returns the componentwise-minimal positive integer symmetrizer d with
/// d_i b_ij = -d_j b_ji, or nullopt when the square matrix has none.
std::optional<IntVector> skew_symmetrizer(const std::vector<IntVector>& rows);

/// An n x n skew-symmetrizable integer matrix. Immutable once built; the
/// constructor rejects anything that is not skew-symmetrizable.
///
/// Indices in the C++ API are 0-based. The JSON/CLI surfaces translate to the
/// 1-based convention.
class ExchangeMatrix {
 public:
  explicit ExchangeMatrix(std::vector<IntVector> rows);
  static ExchangeMatrix zero(size_t n);

  size_t rank() const { return n_; }
  int64_t operator()(size_t i, size_t j) const { return entries_[i * n_ + j]; }
  int64_t at(size_t i, size_t j) const;
  const IntVector& symmetrizer() const { return d_; }

  std::vector<IntVector> rows() const;
  IntVector column(size_t j) const;
  bool is_zero() const;
  std::string to_string() const;

  friend bool operator==(const ExchangeMatrix& a, const ExchangeMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }
  friend std::strong_ordering operator<=>(const ExchangeMatrix& a, const ExchangeMatrix& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.entries_ <=> b.entries_;
  }

 private:
  ExchangeMatrix(size_t n, IntVector entries, IntVector d)
      : n_(n), entries_(std::move(entries)), d_(std::move(d)) {}
  friend ExchangeMatrix mutate(const ExchangeMatrix&, size_t);

  size_t n_ = 0;
  IntVector entries_;
  IntVector d_;
};

/// B stacked over arbitrary rational coefficient rows.
struct ExtendedExchangeMatrix {
  ExtendedExchangeMatrix(ExchangeMatrix top, std::vector<RationalVector> rows);

  ExchangeMatrix top;
  std::vector<RationalVector> coefficient_rows;

  friend bool operator==(const ExtendedExchangeMatrix&, const ExtendedExchangeMatrix&) = default;
};

void check_index(const ExchangeMatrix& b, size_t k);

ExchangeMatrix mutate(const ExchangeMatrix& b, size_t k);
ExtendedExchangeMatrix mutate(const ExtendedExchangeMatrix& bt, size_t k);

/// Mutation rule applied to one non-top row of an extended matrix whose top
/// block is `top` (before mutation at k).
template <typename T>
void mutate_coefficient_row(const ExchangeMatrix& top, std::vector<T>& row, size_t k) {
  const T rk = row[k];
  for (size_t j = 0; j < top.rank(); ++j) {
    if (j == k) continue;
    const int64_t bkj = top(k, j);
    if (bkj == 0) continue;
    T prod = rk * T(static_cast<long>(bkj));
    if (prod > 0) {
      if (bkj > 0)
        row[j] += prod;
      else
        row[j] -= prod;
    }
  }
  row[k] = -rk;
}

/// mu_{k_q} o ... o mu_{k_1}; `ks` is written k_q, ..., k_1 so the last entry
/// is applied first.
ExchangeMatrix mutate_seq(const ExchangeMatrix& b, std::span<const size_t> ks);

/// Entrywise b_ij * b'_ij >= 0 and |b_ij| >= |b'_ij|.
bool dominates(const ExchangeMatrix& b, const ExchangeMatrix& bp);

/// Zeroes every entry linking I to J. I and J must partition the indices.
ExchangeMatrix erase_edges(const ExchangeMatrix& b, const IndexSet& i_set, const IndexSet& j_set);

struct Submatrix {
  ExchangeMatrix matrix;
  IndexSet labels;  // original indices of the retained rows/columns
};

Submatrix submatrix(const ExchangeMatrix& b, const IndexSet& i_set);
RationalVector project(const RationalVector& v, const IndexSet& i_set);

/// [b_{pi(i) pi(j)}].
ExchangeMatrix reindex(const ExchangeMatrix& b, const std::vector<size_t>& perm);
std::vector<size_t> validate_permutation(const std::vector<size_t>& perm, size_t n);
ExchangeMatrix negate(const ExchangeMatrix& b);
ExchangeMatrix transpose(const ExchangeMatrix& b);

/// Lexicographically minimal entry grid over all simultaneous row/column
/// permutations.
ExchangeMatrix canonical_form(const ExchangeMatrix& b);

bool is_acyclic(const ExchangeMatrix& b);

/// Generalized Cartan matrix: 2 on the diagonal, nonpositive elsewhere,
/// symmetrizable.
class CartanMatrix {
 public:
  explicit CartanMatrix(std::vector<IntVector> rows);
  size_t rank() const { return n_; }
  int64_t operator()(size_t i, size_t j) const { return entries_[i * n_ + j]; }
  std::vector<IntVector> rows() const;
  /// Positive definiteness of the symmetrized matrix.
  bool is_finite_type() const;

  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

 private:
  size_t n_;
  IntVector entries_;
  IntVector d_;
};

CartanMatrix cartan(const ExchangeMatrix& b);

/// |a_ij| >= |a'_ij| everywhere.
bool dominates(const CartanMatrix& a, const CartanMatrix& ap);

using RootSet = std::set<IntVector>;

/// Positive roots in simple-root coordinates, generated by closing the simple
/// roots under s_i(v) = v - (sum_j a_ij v_j) e_i.
RootSet positive_roots(const CartanMatrix& a, size_t budget = 100000);

struct FiniteTypeReport {
  bool finite;
  size_t explored;     // distinct matrices visited in the mutation class
  std::string reason;  // short human-readable justification
};

inline constexpr size_t kDefaultMutationClassBudget = 10000;

/// Decides finite type by searching the mutation class for an acyclic
/// representative. Throws Undecided when the budget runs out inconclusively.
FiniteTypeReport classify_finite_type(const ExchangeMatrix& b,
                                      size_t budget = kDefaultMutationClassBudget);
bool is_finite_type(const ExchangeMatrix& b, size_t budget = kDefaultMutationClassBudget);

}  // namespace domfan

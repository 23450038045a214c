#include "domfan/exchange_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "domfan/error.hpp"
#include "domfan/linalg.hpp"

namespace domfan {

namespace {

void require_square(const std::vector<IntVector>& rows) {
  if (rows.empty()) throw InvalidArgument("matrix must have rank at least 1");
  for (const auto& r : rows)
    if (r.size() != rows.size()) throw InvalidArgument("matrix is not square");
}

IntVector flatten(const std::vector<IntVector>& rows) {
  IntVector out;
  out.reserve(rows.size() * rows.size());
  for (const auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  return out;
}

bool check_partition(const IndexSet& i_set, const IndexSet& j_set, size_t n) {
  std::vector<int> seen(n, 0);
  for (size_t i : i_set) {
    if (i >= n) return false;
    ++seen[i];
  }
  for (size_t j : j_set) {
    if (j >= n) return false;
    ++seen[j];
  }
  return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

}  // namespace

std::optional<IntVector> skew_symmetrizer(const std::vector<IntVector>& rows) {
  const size_t n = rows.size();
  for (const auto& r : rows)
    if (r.size() != n) return std::nullopt;
  for (size_t i = 0; i < n; ++i) {
    if (rows[i][i] != 0) return std::nullopt;
    for (size_t j = 0; j < n; ++j) {
      int64_t p = rows[i][j], q = rows[j][i];
      if ((p == 0) != (q == 0)) return std::nullopt;
      if (p != 0 && sign(p) == sign(q)) return std::nullopt;
    }
  }

  // Propagate d over each connected component, starting from d = 1.
  std::vector<Rational> d(n, Rational(0));
  std::vector<size_t> stack;
  for (size_t root = 0; root < n; ++root) {
    if (d[root] != 0) continue;
    d[root] = 1;
    stack.push_back(root);
    std::vector<size_t> component{root};
    while (!stack.empty()) {
      size_t i = stack.back();
      stack.pop_back();
      for (size_t j = 0; j < n; ++j) {
        if (rows[i][j] == 0) continue;
        // d_i b_ij = -d_j b_ji
        Rational dj = -d[i] * Rational(static_cast<long>(rows[i][j])) /
                      Rational(static_cast<long>(rows[j][i]));
        if (d[j] == 0) {
          d[j] = dj;
          stack.push_back(j);
          component.push_back(j);
        } else if (d[j] != dj) {
          return std::nullopt;
        }
      }
    }
    // Scale the component to the smallest positive integer vector.
    Integer den = 1, num = 0;
    for (size_t i : component) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d[i].get_den_mpz_t());
    }
    for (size_t i : component) {
      Integer v = d[i].get_num() * (den / d[i].get_den());
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
    }
    for (size_t i : component) d[i] = Rational(d[i].get_num() * (den / d[i].get_den()) / num);
  }
  IntVector out(n);
  for (size_t i = 0; i < n; ++i) out[i] = to_int64(d[i].get_num());
  return out;
}

ExchangeMatrix::ExchangeMatrix(std::vector<IntVector> rows) {
  require_square(rows);
  auto d = skew_symmetrizer(rows);
  if (!d) throw InvalidArgument("matrix is not skew-symmetrizable");
  n_ = rows.size();
  entries_ = flatten(rows);
  d_ = std::move(*d);
}

ExchangeMatrix ExchangeMatrix::zero(size_t n) {
  return ExchangeMatrix(std::vector<IntVector>(n, IntVector(n, 0)));
}

int64_t ExchangeMatrix::at(size_t i, size_t j) const {
  if (i >= n_ || j >= n_) throw IndexOutOfRange("matrix index out of range");
  return (*this)(i, j);
}

std::vector<IntVector> ExchangeMatrix::rows() const {
  std::vector<IntVector> out(n_);
  for (size_t i = 0; i < n_; ++i)
    out[i].assign(entries_.begin() + i * n_, entries_.begin() + (i + 1) * n_);
  return out;
}

IntVector ExchangeMatrix::column(size_t j) const {
  if (j >= n_) throw IndexOutOfRange("column index out of range");
  IntVector out(n_);
  for (size_t i = 0; i < n_; ++i) out[i] = (*this)(i, j);
  return out;
}

bool ExchangeMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int64_t v) { return v == 0; });
}

std::string ExchangeMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < n_; ++i) {
    os << (i ? ",[" : "[");
    for (size_t j = 0; j < n_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

ExtendedExchangeMatrix::ExtendedExchangeMatrix(ExchangeMatrix t, std::vector<RationalVector> rows)
    : top(std::move(t)), coefficient_rows(std::move(rows)) {
  for (const auto& r : coefficient_rows)
    if (r.size() != top.rank()) throw InvalidArgument("coefficient row has wrong length");
}

void check_index(const ExchangeMatrix& b, size_t k) {
  if (k >= b.rank())
    throw IndexOutOfRange("index " + std::to_string(k + 1) + " out of range for rank " +
                          std::to_string(b.rank()));
}

ExchangeMatrix mutate(const ExchangeMatrix& b, size_t k) {
  check_index(b, k);
  const size_t n = b.rank();
  IntVector e(n * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      const int64_t bij = b(i, j);
      if (i == k || j == k) {
        e[i * n + j] = -bij;
        continue;
      }
      const int64_t prod = checked_mul(b(i, k), b(k, j));
      e[i * n + j] = prod > 0 ? checked_add(bij, sign(b(k, j)) * prod) : bij;
    }
  }
  // The symmetrizer is a mutation invariant.
  return ExchangeMatrix(n, std::move(e), b.symmetrizer());
}

ExtendedExchangeMatrix mutate(const ExtendedExchangeMatrix& bt, size_t k) {
  check_index(bt.top, k);
  std::vector<RationalVector> rows = bt.coefficient_rows;
  for (auto& r : rows) mutate_coefficient_row(bt.top, r, k);
  return ExtendedExchangeMatrix(mutate(bt.top, k), std::move(rows));
}

ExchangeMatrix mutate_seq(const ExchangeMatrix& b, std::span<const size_t> ks) {
  ExchangeMatrix cur = b;
  for (auto it = ks.rbegin(); it != ks.rend(); ++it) cur = mutate(cur, *it);
  return cur;
}

bool dominates(const ExchangeMatrix& b, const ExchangeMatrix& bp) {
  if (b.rank() != bp.rank()) throw InvalidArgument("dominance requires equal ranks");
  for (size_t i = 0; i < b.rank(); ++i)
    for (size_t j = 0; j < b.rank(); ++j) {
      const int64_t x = b(i, j), y = bp(i, j);
      if (sign(x) * sign(y) < 0) return false;
      if (std::abs(x) < std::abs(y)) return false;
    }
  return true;
}

ExchangeMatrix erase_edges(const ExchangeMatrix& b, const IndexSet& i_set, const IndexSet& j_set) {
  const size_t n = b.rank();
  if (!check_partition(i_set, j_set, n)) throw InvalidArgument("I and J must partition the indices");
  std::vector<bool> in_i(n, false);
  for (size_t i : i_set) in_i[i] = true;
  auto rows = b.rows();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (in_i[i] != in_i[j]) rows[i][j] = 0;
  return ExchangeMatrix(std::move(rows));
}

Submatrix submatrix(const ExchangeMatrix& b, const IndexSet& i_set) {
  if (i_set.empty()) throw InvalidArgument("index set must be nonempty");
  IndexSet labels = i_set;
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw InvalidArgument("index set has duplicates");
  for (size_t i : labels) check_index(b, i);
  std::vector<IntVector> rows(labels.size(), IntVector(labels.size()));
  for (size_t r = 0; r < labels.size(); ++r)
    for (size_t c = 0; c < labels.size(); ++c) rows[r][c] = b(labels[r], labels[c]);
  return {ExchangeMatrix(std::move(rows)), std::move(labels)};
}

RationalVector project(const RationalVector& v, const IndexSet& i_set) {
  if (i_set.empty()) throw InvalidArgument("index set must be nonempty");
  IndexSet labels = i_set;
  std::sort(labels.begin(), labels.end());
  RationalVector out;
  for (size_t i : labels) {
    if (i >= v.size()) throw IndexOutOfRange("projection index out of range");
    out.push_back(v[i]);
  }
  return out;
}

std::vector<size_t> validate_permutation(const std::vector<size_t>& perm, size_t n) {
  if (perm.size() != n) throw InvalidArgument("permutation has wrong length");
  std::vector<bool> seen(n, false);
  for (size_t p : perm) {
    if (p >= n || seen[p]) throw InvalidArgument("not a permutation");
    seen[p] = true;
  }
  return perm;
}

ExchangeMatrix reindex(const ExchangeMatrix& b, const std::vector<size_t>& perm) {
  validate_permutation(perm, b.rank());
  const size_t n = b.rank();
  std::vector<IntVector> rows(n, IntVector(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) rows[i][j] = b(perm[i], perm[j]);
  return ExchangeMatrix(std::move(rows));
}

ExchangeMatrix negate(const ExchangeMatrix& b) {
  auto rows = b.rows();
  for (auto& r : rows)
    for (auto& v : r) v = -v;
  return ExchangeMatrix(std::move(rows));
}

ExchangeMatrix transpose(const ExchangeMatrix& b) {
  const size_t n = b.rank();
  std::vector<IntVector> rows(n, IntVector(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) rows[i][j] = b(j, i);
  return ExchangeMatrix(std::move(rows));
}

ExchangeMatrix canonical_form(const ExchangeMatrix& b) {
  const size_t n = b.rank();
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  IntVector best, cur(n * n);
  do {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) cur[i * n + j] = b(perm[i], perm[j]);
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<IntVector> rows(n);
  for (size_t i = 0; i < n; ++i) rows[i].assign(best.begin() + i * n, best.begin() + (i + 1) * n);
  return ExchangeMatrix(std::move(rows));
}

bool is_acyclic(const ExchangeMatrix& b) {
  // Digraph i -> j whenever b_ij > 0; iterative three-colour DFS.
  const size_t n = b.rank();
  std::vector<int> colour(n, 0);
  for (size_t s = 0; s < n; ++s) {
    if (colour[s]) continue;
    std::vector<std::pair<size_t, size_t>> stack{{s, 0}};
    colour[s] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next == n) {
        colour[v] = 2;
        stack.pop_back();
        continue;
      }
      size_t w = next++;
      if (b(v, w) <= 0) continue;
      if (colour[w] == 1) return false;
      if (colour[w] == 0) {
        colour[w] = 1;
        stack.push_back({w, 0});
      }
    }
  }
  return true;
}

CartanMatrix::CartanMatrix(std::vector<IntVector> rows) {
  require_square(rows);
  n_ = rows.size();
  std::vector<IntVector> skew(n_, IntVector(n_, 0));
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j < n_; ++j) {
      if (i == j) {
        if (rows[i][j] != 2) throw InvalidArgument("Cartan diagonal must be 2");
        continue;
      }
      if (rows[i][j] > 0) throw InvalidArgument("Cartan off-diagonal entries must be <= 0");
      skew[i][j] = i < j ? rows[i][j] : -rows[i][j];
    }
  auto d = skew_symmetrizer(skew);
  if (!d) throw InvalidArgument("Cartan matrix is not symmetrizable");
  entries_ = flatten(rows);
  d_ = std::move(*d);
}

std::vector<IntVector> CartanMatrix::rows() const {
  std::vector<IntVector> out(n_);
  for (size_t i = 0; i < n_; ++i)
    out[i].assign(entries_.begin() + i * n_, entries_.begin() + (i + 1) * n_);
  return out;
}

bool CartanMatrix::is_finite_type() const {
  // D*A is symmetric; test its leading principal minors.
  for (size_t m = 1; m <= n_; ++m) {
    std::vector<std::vector<Integer>> s(m, std::vector<Integer>(m));
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j)
        s[i][j] = Integer(static_cast<long>(d_[i])) * Integer(static_cast<long>((*this)(i, j)));
    if (linalg::determinant(s) <= 0) return false;
  }
  return true;
}

CartanMatrix cartan(const ExchangeMatrix& b) {
  auto rows = b.rows();
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows.size(); ++j) rows[i][j] = i == j ? 2 : -std::abs(rows[i][j]);
  return CartanMatrix(std::move(rows));
}

bool dominates(const CartanMatrix& a, const CartanMatrix& ap) {
  if (a.rank() != ap.rank()) throw InvalidArgument("dominance requires equal ranks");
  for (size_t i = 0; i < a.rank(); ++i)
    for (size_t j = 0; j < a.rank(); ++j)
      if (std::abs(a(i, j)) < std::abs(ap(i, j))) return false;
  return true;
}

RootSet positive_roots(const CartanMatrix& a, size_t budget) {
  const size_t n = a.rank();
  RootSet roots;
  std::vector<IntVector> queue;
  for (size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    roots.insert(e);
    queue.push_back(e);
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    for (size_t i = 0; i < n; ++i) {
      IntVector w = queue[head];
      int64_t pairing = 0;
      for (size_t j = 0; j < n; ++j) pairing = checked_add(pairing, checked_mul(a(i, j), w[j]));
      w[i] = checked_add(w[i], -pairing);
      if (std::any_of(w.begin(), w.end(), [](int64_t x) { return x < 0; })) continue;
      if (roots.insert(w).second) {
        if (roots.size() > budget)
          throw BudgetExceeded("root generation did not close; Cartan matrix is not of finite type");
        queue.push_back(std::move(w));
      }
    }
  }
  return roots;
}

}  // namespace domfan

#include "domfan/mulin.hpp"

#include <algorithm>
#include <functional>

#include "domfan/error.hpp"

namespace domfan {

RationalVector eta(const ExchangeMatrix& b, size_t k, const RationalVector& v) {
  check_index(b, k);
  if (v.size() != b.rank()) throw InvalidArgument("vector length does not match rank");
  RationalVector out = v;
  const Rational& ak = v[k];
  for (size_t j = 0; j < v.size(); ++j) {
    if (j == k) continue;
    const int64_t bkj = b(k, j);
    if (ak >= 0 && bkj >= 0)
      out[j] = v[j] + ak * bkj;
    else if (ak <= 0 && bkj <= 0)
      out[j] = v[j] - ak * bkj;
  }
  out[k] = -ak;
  return out;
}

RationalVector eta_seq(const ExchangeMatrix& b, std::span<const size_t> ks, const RationalVector& v) {
  ExchangeMatrix cur = b;
  RationalVector out = v;
  for (auto it = ks.rbegin(); it != ks.rend(); ++it) {
    out = eta(cur, *it, out);
    cur = mutate(cur, *it);
  }
  return out;
}

LinearRelation::LinearRelation(size_t dim, std::vector<RelationTerm> terms)
    : dim_(dim), terms_(std::move(terms)) {
  RationalVector sum(dim_, Rational(0));
  for (const auto& t : terms_) {
    if (t.vector.size() != dim_) throw InvalidArgument("relation vector has wrong length");
    for (size_t i = 0; i < dim_; ++i) sum[i] += t.coeff * t.vector[i];
  }
  for (const auto& s : sum)
    if (s != 0) throw InvalidArgument("terms do not sum to zero");
}

namespace {

struct Node {
  std::vector<size_t> applied;  // k_1, k_2, ... in order of application
  ExchangeMatrix matrix;
  std::vector<RationalVector> images;
};

std::vector<size_t> written_order(const std::vector<size_t>& applied) {
  return {applied.rbegin(), applied.rend()};
}

// Breadth-first walk over pruned sequences. `visit` returns false to stop.
void walk(const ExchangeMatrix& b, const std::vector<RationalVector>& vs, size_t depth, size_t budget,
          const std::function<bool(const Node&)>& visit) {
  size_t nodes = 1;
  std::vector<Node> level{Node{{}, b, vs}};
  for (size_t d = 0;; ++d) {
    for (const auto& node : level)
      if (!visit(node)) return;
    if (d == depth) return;
    std::vector<Node> next;
    for (const auto& node : level) {
      for (size_t k = 0; k < b.rank(); ++k) {
        if (!node.applied.empty() && node.applied.back() == k) continue;
        if (++nodes > budget)
          throw BudgetExceeded("sequence search exceeded the node budget of " + std::to_string(budget));
        Node child{node.applied, mutate(node.matrix, k), {}};
        child.applied.push_back(k);
        child.images.reserve(node.images.size());
        for (const auto& v : node.images) child.images.push_back(eta(node.matrix, k, v));
        next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }
}

}  // namespace

CoherenceVerdict check_coherence(const ExchangeMatrix& b, const LinearRelation& rel, size_t depth,
                                 size_t node_budget) {
  if (rel.dim() != b.rank()) throw InvalidArgument("relation dimension does not match rank");
  std::vector<RationalVector> vs;
  for (const auto& t : rel.terms()) vs.push_back(t.vector);

  CoherenceVerdict verdict{CoherenceStatus::HoldsToDepth, depth, 0, std::nullopt, std::nullopt};
  const size_t n = b.rank();
  walk(b, vs, depth, node_budget, [&](const Node& node) {
    ++verdict.nodes;
    RationalVector lin(n, Rational(0)), mins(n, Rational(0));
    for (size_t t = 0; t < vs.size(); ++t) {
      const Rational& c = rel.terms()[t].coeff;
      for (size_t i = 0; i < n; ++i) {
        const Rational& x = node.images[t][i];
        lin[i] += c * x;
        if (x < 0) mins[i] += c * x;
      }
    }
    auto nonzero = [](const RationalVector& v) {
      return std::any_of(v.begin(), v.end(), [](const Rational& q) { return q != 0; });
    };
    bool lin_bad = nonzero(lin), min_bad = nonzero(mins);
    if ((lin_bad || min_bad) && !verdict.counterexample) {
      verdict.status = CoherenceStatus::Fails;
      verdict.counterexample =
          Counterexample{written_order(node.applied), lin_bad ? FailingEquation::Linear : FailingEquation::Min};
    }
    if (lin_bad && !verdict.first_linear_failure) verdict.first_linear_failure = written_order(node.applied);
    return !(verdict.counterexample && verdict.first_linear_failure);
  });
  return verdict;
}

SignVector sign_vector(const RationalVector& v) {
  SignVector s(v.size());
  for (size_t i = 0; i < v.size(); ++i) s[i] = sign(v[i]);
  return s;
}

Signature sign_signature(const ExchangeMatrix& b, const RationalVector& v, size_t depth,
                         size_t node_budget) {
  if (v.size() != b.rank()) throw InvalidArgument("vector length does not match rank");
  Signature sig;
  walk(b, {v}, depth, node_budget, [&](const Node& node) {
    sig.emplace(written_order(node.applied), sign_vector(node.images[0]));
    return true;
  });
  return sig;
}

bool same_b_class_bounded(const ExchangeMatrix& b, const RationalVector& v, const RationalVector& w,
                          size_t depth, size_t node_budget) {
  if (v.size() != b.rank() || w.size() != b.rank())
    throw InvalidArgument("vector length does not match rank");
  bool same = true;
  walk(b, {v, w}, depth, node_budget, [&](const Node& node) {
    same = sign_vector(node.images[0]) == sign_vector(node.images[1]);
    return same;
  });
  return same;
}

bool sign_coherent(const std::vector<RationalVector>& vs) {
  if (vs.empty()) return true;
  for (size_t i = 0; i < vs.front().size(); ++i) {
    bool pos = false, neg = false;
    for (const auto& v : vs) {
      pos |= v[i] > 0;
      neg |= v[i] < 0;
    }
    if (pos && neg) return false;
  }
  return true;
}

bool in_common_cone_bounded(const ExchangeMatrix& b, const std::vector<RationalVector>& vs,
                            size_t depth, size_t node_budget) {
  if (vs.empty()) throw InvalidArgument("need at least one vector");
  for (const auto& v : vs)
    if (v.size() != b.rank()) throw InvalidArgument("vector length does not match rank");
  bool ok = true;
  walk(b, vs, depth, node_budget, [&](const Node& node) {
    ok = sign_coherent(node.images);
    return ok;
  });
  return ok;
}

namespace {

LinearRelation map_vectors(const LinearRelation& rel, size_t dim,
                           const std::function<RationalVector(const RationalVector&)>& f) {
  std::vector<RelationTerm> terms;
  for (const auto& t : rel.terms()) terms.push_back({t.coeff, f(t.vector)});
  return LinearRelation(dim, std::move(terms));
}

}  // namespace

LinearRelation map_antipodal(const LinearRelation& rel) {
  return map_vectors(rel, rel.dim(), [](const RationalVector& v) {
    RationalVector out = v;
    for (auto& x : out) x = -x;
    return out;
  });
}

LinearRelation map_reindex(const LinearRelation& rel, const std::vector<size_t>& perm) {
  validate_permutation(perm, rel.dim());
  return map_vectors(rel, rel.dim(), [&](const RationalVector& v) {
    RationalVector out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[perm[i]];
    return out;
  });
}

LinearRelation map_rescale(const LinearRelation& rel, const RationalVector& sigma) {
  if (sigma.size() != rel.dim()) throw InvalidArgument("Sigma has wrong size");
  for (const auto& s : sigma)
    if (s <= 0) throw InvalidArgument("Sigma entries must be positive");
  return map_vectors(rel, rel.dim(), [&](const RationalVector& v) {
    RationalVector out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] * sigma[i];
    return out;
  });
}

LinearRelation map_project(const LinearRelation& rel, const IndexSet& i_set) {
  if (i_set.empty()) throw InvalidArgument("index set must be nonempty");
  for (size_t i : i_set)
    if (i >= rel.dim()) throw IndexOutOfRange("projection index out of range");
  IndexSet sorted = i_set;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidArgument("index set has duplicates");
  return map_vectors(rel, sorted.size(), [&](const RationalVector& v) { return project(v, sorted); });
}

ExchangeMatrix rescale_matrix(const ExchangeMatrix& b, const RationalVector& sigma) {
  const size_t n = b.rank();
  if (sigma.size() != n) throw InvalidArgument("Sigma has wrong size");
  for (const auto& s : sigma)
    if (s <= 0) throw InvalidArgument("Sigma entries must be positive");
  std::vector<IntVector> rows(n, IntVector(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Rational e = Rational(static_cast<long>(b(i, j))) * sigma[j] / sigma[i];
      if (e.get_den() != 1) throw InvalidArgument("Sigma^-1 B Sigma is not an integer matrix");
      rows[i][j] = to_int64(e.get_num());
    }
  return ExchangeMatrix(std::move(rows));
}

}  // namespace domfan

#include "domfan/cluster.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "domfan/error.hpp"
#include "domfan/linalg.hpp"

namespace domfan {

Seed initial_seed(const ExchangeMatrix& b) {
  const size_t n = b.rank();
  Seed s{b, std::vector<IntVector>(n, IntVector(n, 0)), {}};
  for (size_t i = 0; i < n; ++i) {
    s.coefficients[i][i] = 1;
    s.cluster.push_back(LaurentPoly::x(n, n, i));
  }
  return s;
}

LaurentPoly exchange_binomial(const Seed& s, size_t k) {
  check_index(s.matrix, k);
  const size_t n = s.matrix.rank();
  LaurentPoly plus = LaurentPoly::constant(n, n, 1), minus = LaurentPoly::constant(n, n, 1);
  IntVector yplus(n, 0), yminus(n, 0);
  for (size_t i = 0; i < n; ++i) {
    const int64_t bik = s.matrix(i, k);
    if (bik > 0) plus *= s.cluster[i].pow(bik);
    if (bik < 0) minus *= s.cluster[i].pow(-bik);
    const int64_t cik = s.coefficients[i][k];
    if (cik > 0) yplus[i] = cik;
    if (cik < 0) yminus[i] = -cik;
  }
  plus *= LaurentPoly::monomial(n, n, IntVector(n, 0), yplus);
  minus *= LaurentPoly::monomial(n, n, IntVector(n, 0), yminus);
  return plus + minus;
}

Seed mutate_seed(const Seed& s, size_t k) {
  check_index(s.matrix, k);
  Seed out{mutate(s.matrix, k), s.coefficients, s.cluster};
  for (auto& row : out.coefficients) mutate_coefficient_row(s.matrix, row, k);
  out.cluster[k] = div_exact(exchange_binomial(s, k), s.cluster[k]);
  return out;
}

std::optional<size_t> ClusterCatalog::find(const LaurentPoly& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<size_t> ClusterCatalog::find_gvector(const IntVector& g) const {
  auto it = by_gvector_.find(g);
  if (it == by_gvector_.end()) return std::nullopt;
  return it->second;
}

ClusterCatalog enumerate(const ExchangeMatrix& b, size_t budget) {
  ClusterCatalog cat(b);
  auto intern = [&](const LaurentPoly& p) {
    auto [it, inserted] = cat.index_.try_emplace(p, cat.variables_.size());
    if (inserted) {
      IntVector g = g_degree(p, b);
      if (!cat.by_gvector_.emplace(g, it->second).second)
        throw Error("two cluster variables share the g-vector of " + p.to_string());
      cat.variables_.push_back(p);
      cat.gvectors_.push_back(std::move(g));
    }
    return it->second;
  };

  struct Item {
    Seed seed;
    std::vector<size_t> ids;
  };
  std::set<std::vector<size_t>> seen;
  std::deque<Item> queue;

  Seed s0 = initial_seed(b);
  std::vector<size_t> ids0;
  for (const auto& v : s0.cluster) ids0.push_back(intern(v));
  auto key0 = ids0;
  std::sort(key0.begin(), key0.end());
  seen.insert(key0);
  cat.clusters_.push_back(key0);
  queue.push_back({std::move(s0), std::move(ids0)});

  while (!queue.empty()) {
    Item item = std::move(queue.front());
    queue.pop_front();
    ++cat.seeds_explored_;
    for (size_t k = 0; k < b.rank(); ++k) {
      Seed next = mutate_seed(item.seed, k);
      std::vector<size_t> ids = item.ids;
      ids[k] = intern(next.cluster[k]);
      IntVector ccol(b.rank());
      for (size_t i = 0; i < b.rank(); ++i) ccol[i] = item.seed.coefficients[i][k];
      cat.exchanges_.push_back({item.ids, item.seed.matrix.column(k), std::move(ccol), k, ids[k]});
      auto key = ids;
      std::sort(key.begin(), key.end());
      if (!seen.insert(key).second) continue;
      if (seen.size() > budget)
        throw BudgetExceeded("cluster enumeration exceeded the budget of " + std::to_string(budget) +
                             " clusters");
      cat.clusters_.push_back(key);
      queue.push_back({std::move(next), std::move(ids)});
    }
  }
  return cat;
}

Fan gvector_fan(const ClusterCatalog& catalog) {
  const size_t n = catalog.matrix().rank();
  std::vector<RationalCone> cones;
  for (const auto& cl : catalog.clusters()) {
    std::vector<IntVector> rays;
    for (size_t v : cl) rays.push_back(catalog.gvectors()[v]);
    cones.emplace_back(n, std::move(rays));
  }
  return Fan(n, std::move(cones));
}

Fan gvector_fan(const ExchangeMatrix& b, size_t budget) { return gvector_fan(enumerate(b, budget)); }

ClusterMonomial cluster_monomial_for_gvector(const ClusterCatalog& catalog, const IntVector& lambda) {
  const size_t n = catalog.matrix().rank();
  if (lambda.size() != n) throw InvalidArgument("g-vector has wrong length");
  ClusterMonomial m;
  if (std::all_of(lambda.begin(), lambda.end(), [](int64_t x) { return x == 0; })) return m;
  RationalVector target = to_rational(lambda);
  for (const auto& cl : catalog.clusters()) {
    std::vector<RationalVector> cols;
    for (size_t v : cl) cols.push_back(to_rational(catalog.gvectors()[v]));
    auto c = linalg::solve_in_span(cols, target);
    if (!c) continue;
    if (std::any_of(c->begin(), c->end(), [](const Rational& q) { return q < 0; })) continue;
    for (size_t i = 0; i < cl.size(); ++i) {
      if ((*c)[i].get_den() != 1)
        throw Error("g-vector has non-integer coordinates in its cluster cone");
      if ((*c)[i] != 0) m[cl[i]] = to_int64((*c)[i].get_num());
    }
    return m;
  }
  throw Error("g-vector lies in no cluster cone");
}

LaurentPoly evaluate(const ClusterCatalog& catalog, const ClusterMonomial& m) {
  const size_t n = catalog.matrix().rank();
  LaurentPoly out = LaurentPoly::constant(n, n, 1);
  for (const auto& [v, e] : m) out *= catalog.variables().at(v).pow(e);
  return out;
}

IntVector g_vector(const ClusterCatalog& catalog, const LaurentPoly& v) {
  auto idx = catalog.find(v);
  if (!idx) throw InvalidArgument("not a cluster variable of this catalog: " + v.to_string());
  return catalog.gvectors()[*idx];
}

}  // namespace domfan

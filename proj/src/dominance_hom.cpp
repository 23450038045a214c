#include "domfan/dominance_hom.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "domfan/error.hpp"
#include "domfan/fan2x2.hpp"
#include "domfan/linalg.hpp"
#include "domfan/theta2x2.hpp"

namespace domfan {

namespace {

void check_pair(const ExchangeMatrix& b, const ExchangeMatrix& bp) {
  if (b.rank() != bp.rank()) throw InvalidArgument("matrices have different ranks");
  if (!dominates(b, bp)) throw InvalidArgument("B does not dominate B'");
}

IntVector column_difference(const ExchangeMatrix& b, const ExchangeMatrix& bp, size_t k) {
  IntVector g(b.rank());
  for (size_t i = 0; i < b.rank(); ++i) g[i] = checked_add(b(i, k), -bp(i, k));
  return g;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](int64_t x) { return x == 0; });
}

using Cluster = std::vector<std::pair<LaurentPoly, IntVector>>;

// Clusters of all seeds within `depth` mutations, with g-vectors.
std::vector<Cluster> bounded_clusters(const ExchangeMatrix& b, size_t depth) {
  const size_t n = b.rank();
  std::vector<Cluster> out;
  std::set<std::vector<LaurentPoly>> seen;
  std::deque<std::pair<Seed, size_t>> queue;
  auto record = [&](const Seed& s) {
    std::vector<LaurentPoly> key = s.cluster;
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) return false;
    Cluster cl;
    for (const auto& v : s.cluster) cl.emplace_back(v, g_degree(v, b));
    out.push_back(std::move(cl));
    return true;
  };
  Seed s0 = initial_seed(b);
  record(s0);
  queue.emplace_back(std::move(s0), 0);
  while (!queue.empty()) {
    auto [s, d] = std::move(queue.front());
    queue.pop_front();
    if (d == depth) continue;
    for (size_t k = 0; k < n; ++k) {
      Seed next = mutate_seed(s, k);
      if (record(next)) queue.emplace_back(std::move(next), d + 1);
    }
  }
  return out;
}

std::optional<LaurentPoly> monomial_in(const std::vector<Cluster>& clusters, const IntVector& g, size_t n) {
  if (is_zero(g)) return LaurentPoly::constant(n, n, 1);
  for (const auto& cl : clusters) {
    std::vector<RationalVector> cols;
    for (const auto& [v, gv] : cl) cols.push_back(to_rational(gv));
    auto c = linalg::solve_in_span(cols, to_rational(g));
    if (!c) continue;
    bool ok = std::all_of(c->begin(), c->end(), [](const Rational& q) { return q >= 0 && q.get_den() == 1; });
    if (!ok) continue;
    LaurentPoly m = LaurentPoly::constant(n, n, 1);
    for (size_t i = 0; i < cl.size(); ++i)
      if ((*c)[i] != 0) m *= cl[i].first.pow(to_int64((*c)[i].get_num()));
    return m;
  }
  return std::nullopt;
}

void check_z(const NuMap& nu) {
  for (size_t k = 0; k < nu.z.size(); ++k)
    if (g_degree(nu.z[k], nu.b) != column_difference(nu.b, nu.bp, k))
      throw Error("z_" + std::to_string(k + 1) + " has the wrong g-vector");
}

std::optional<IntVector> try_g(const LaurentPoly& p, const ExchangeMatrix& b) {
  try {
    return g_degree(p, b);
  } catch (const Inhomogeneous&) {
    return std::nullopt;
  }
}

HomVerdict classify(const NuMap& nu, const std::vector<LaurentPoly>& sources,
                    const std::function<ImageStatus(const LaurentPoly&)>& status) {
  HomVerdict v{{}, true, true, injectivity_hypothesis(nu.b, nu.bp)};
  for (const auto& src : sources) {
    LaurentPoly img = apply_nu(nu, src);
    IntVector sg = g_degree(src, nu.bp);
    auto ig = try_g(img, nu.b);
    const bool preserved = ig && *ig == sg;
    const ImageStatus st = status(img);
    v.g_preserved &= preserved;
    v.all_cluster_variables &= st == ImageStatus::ClusterVariable;
    v.images.push_back({src, std::move(img), st, std::move(sg), std::move(ig), preserved});
  }
  return v;
}

}  // namespace

NuMap build_nu(const ExchangeMatrix& b, const ExchangeMatrix& bp, const ClusterCatalog& catalog_b) {
  check_pair(b, bp);
  if (!(catalog_b.matrix() == b)) throw InvalidArgument("catalog belongs to a different matrix");
  NuMap nu{b, bp, {}};
  for (size_t k = 0; k < b.rank(); ++k)
    nu.z.push_back(evaluate(catalog_b, cluster_monomial_for_gvector(catalog_b, column_difference(b, bp, k))));
  check_z(nu);
  return nu;
}

NuMap build_nu(const ExchangeMatrix& b, const ExchangeMatrix& bp, size_t depth) {
  check_pair(b, bp);
  const auto clusters = bounded_clusters(b, depth);
  NuMap nu{b, bp, {}};
  for (size_t k = 0; k < b.rank(); ++k) {
    auto m = monomial_in(clusters, column_difference(b, bp, k), b.rank());
    if (!m)
      throw Error("no cluster monomial within " + std::to_string(depth) + " mutations has the g-vector of z_" +
                  std::to_string(k + 1));
    nu.z.push_back(std::move(*m));
  }
  check_z(nu);
  return nu;
}

NuMap build_nu_rank2(int64_t a, int64_t b, int64_t c, int64_t d) {
  ExchangeMatrix bm({{0, b}, {a, 0}}), bpm({{0, d}, {c, 0}});
  if (!(a <= c && c <= 0 && 0 <= d && d <= b)) throw InvalidArgument("need a <= c <= 0 <= d <= b");
  NuMap nu{bm, bpm, {}};
  nu.z.push_back(rank2_cluster_variable(a, b, 0).pow(c - a));
  nu.z.push_back(LaurentPoly::x(2, 2, 0).pow(b - d));
  check_z(nu);
  return nu;
}

LaurentPoly apply_nu(const NuMap& nu, const LaurentPoly& p) {
  const size_t n = nu.b.rank();
  std::vector<LaurentPoly> xs, ys;
  for (size_t k = 0; k < n; ++k) {
    xs.push_back(LaurentPoly::x(n, n, k));
    ys.push_back(LaurentPoly::y(n, n, k) * nu.z[k]);
  }
  return substitute(p, xs, ys);
}

bool injectivity_hypothesis(const ExchangeMatrix& b, const ExchangeMatrix& bp) {
  size_t columns = 0;
  for (size_t k = 0; k < b.rank(); ++k) {
    bool hit = false;
    for (size_t i = 0; i < b.rank(); ++i) hit |= b(i, k) < bp(i, k) && bp(i, k) <= 0;
    columns += hit;
  }
  return columns <= 1;
}

std::string to_string(ImageStatus s) {
  switch (s) {
    case ImageStatus::ClusterVariable: return "cluster-variable";
    case ImageStatus::LimitTheta: return "limit-theta";
    case ImageStatus::Other: return "other";
  }
  return "?";
}

HomVerdict verify_hom(const ClusterCatalog& catalog_b, const ClusterCatalog& catalog_bp) {
  NuMap nu = build_nu(catalog_b.matrix(), catalog_bp.matrix(), catalog_b);
  return classify(nu, catalog_bp.variables(), [&](const LaurentPoly& img) {
    return catalog_b.find(img) ? ImageStatus::ClusterVariable : ImageStatus::Other;
  });
}

HomVerdict verify_hom(const ExchangeMatrix& b, const ExchangeMatrix& bp, size_t budget, size_t depth) {
  check_pair(b, bp);
  ClusterCatalog catalog_bp = enumerate(bp, budget);
  if (is_finite_type(b)) return verify_hom(enumerate(b, budget), catalog_bp);

  NuMap nu = build_nu(b, bp, depth);
  std::set<LaurentPoly> known;
  for (const auto& cl : bounded_clusters(b, depth))
    for (const auto& [v, g] : cl) known.insert(v);
  std::optional<LaurentPoly> limit;
  if (b.rank() == 2 && canonicalize_2x2(b).type == Rank2Type::Affine) {
    try {
      limit = limit_theta(b);
    } catch (const InvalidArgument&) {
      // affine matrix without a tabulated limiting theta function
    }
  }
  return classify(nu, catalog_bp.variables(), [&](const LaurentPoly& img) {
    if (known.count(img)) return ImageStatus::ClusterVariable;
    if (limit && img == *limit) return ImageStatus::LimitTheta;
    return ImageStatus::Other;
  });
}

bool verify_exchange_transport(const NuMap& nu, const ClusterCatalog& catalog_bp) {
  if (!(catalog_bp.matrix() == nu.bp)) throw InvalidArgument("catalog belongs to a different matrix");
  const size_t n = nu.b.rank();
  std::vector<LaurentPoly> img;
  for (const auto& v : catalog_bp.variables()) img.push_back(apply_nu(nu, v));
  std::vector<LaurentPoly> yimg;
  for (size_t i = 0; i < n; ++i) yimg.push_back(apply_nu(nu, LaurentPoly::y(n, n, i)));

  for (const auto& ex : catalog_bp.exchanges()) {
    LaurentPoly plus = LaurentPoly::constant(n, n, 1), minus = plus;
    for (size_t i = 0; i < n; ++i) {
      const int64_t bik = ex.b_column[i], cik = ex.c_column[i];
      const LaurentPoly& v = img[ex.cluster[i]];
      if (bik > 0) plus *= v.pow(bik);
      if (bik < 0) minus *= v.pow(-bik);
      if (cik > 0) plus *= yimg[i].pow(cik);
      if (cik < 0) minus *= yimg[i].pow(-cik);
    }
    if (!(img[ex.cluster[ex.k]] * img[ex.new_variable] == plus + minus)) return false;
  }
  return true;
}

bool verify_factorization(const ExchangeMatrix& b, const ExchangeMatrix& bm, const ExchangeMatrix& bpp,
                          size_t budget) {
  if (!is_acyclic(b)) throw InvalidArgument("factorization check needs an acyclic B");
  check_pair(b, bm);
  check_pair(bm, bpp);
  const ClusterCatalog cat_b = enumerate(b, budget), cat_m = enumerate(bm, budget);
  const NuMap outer = build_nu(b, bm, cat_b), inner = build_nu(bm, bpp, cat_m), direct = build_nu(b, bpp, cat_b);
  const size_t n = b.rank();
  for (size_t k = 0; k < n; ++k) {
    for (const auto& gen : {LaurentPoly::x(n, n, k), LaurentPoly::y(n, n, k)})
      if (!(apply_nu(outer, apply_nu(inner, gen)) == apply_nu(direct, gen))) return false;
  }
  return true;
}

std::vector<ExchangeMatrix> special_dominated(const ExchangeMatrix& b) {
  const size_t n = b.rank();
  std::set<ExchangeMatrix> out;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const int64_t v = b(i, j);
      if (v == 0) continue;
      for (int64_t w = 1; w < std::abs(v); ++w) {
        auto rows = b.rows();
        rows[i][j] = v > 0 ? w : -w;
        if (skew_symmetrizer(rows)) out.insert(ExchangeMatrix(std::move(rows)));
      }
      if (i < j && std::abs(v) == 1 && b(j, i) == -v) {
        auto rows = b.rows();
        rows[i][j] = rows[j][i] = 0;
        out.insert(ExchangeMatrix(std::move(rows)));
      }
    }
  return {out.begin(), out.end()};
}

std::vector<ExchangeMatrix> acyclic_finite_type(size_t rank) {
  if (rank == 0) throw InvalidArgument("rank must be positive");
  // |b_ij|, |b_ji| for each unordered pair
  static const std::vector<std::pair<int64_t, int64_t>> kMagnitudes = {{0, 0}, {1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}};
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < rank; ++i)
    for (size_t j = i + 1; j < rank; ++j) pairs.emplace_back(i, j);

  std::set<ExchangeMatrix> found;
  std::vector<size_t> choice(pairs.size(), 0);
  while (true) {
    std::vector<IntVector> rows(rank, IntVector(rank, 0));
    std::vector<size_t> edges;
    for (size_t p = 0; p < pairs.size(); ++p) {
      auto [i, j] = pairs[p];
      rows[i][j] = kMagnitudes[choice[p]].first;
      rows[j][i] = -kMagnitudes[choice[p]].second;
      if (choice[p] != 0) edges.push_back(p);
    }
    if (skew_symmetrizer(rows) && cartan(ExchangeMatrix(rows)).is_finite_type()) {
      // Finite-type diagrams are forests, so every orientation is acyclic.
      for (size_t mask = 0; mask < (size_t{1} << edges.size()); ++mask) {
        auto r = rows;
        for (size_t e = 0; e < edges.size(); ++e)
          if (mask >> e & 1) {
            auto [i, j] = pairs[edges[e]];
            r[i][j] = -r[i][j];
            r[j][i] = -r[j][i];
          }
        ExchangeMatrix m(std::move(r));
        if (is_acyclic(m)) found.insert(canonical_form(m));
      }
    }
    size_t p = 0;
    while (p < choice.size() && ++choice[p] == kMagnitudes.size()) choice[p++] = 0;
    if (p == choice.size()) break;
  }
  return {found.begin(), found.end()};
}

// ---- rank-2 identities ----

namespace {

struct LemmaDef {
  std::string name;
  std::string statement;
  std::function<bool(const LemmaParams&)> applies;
  std::function<LaurentPoly(const LemmaParams&)> primed;  // before nu
  std::function<LaurentPoly(const LemmaParams&)> target;
};

bool base_ok(const LemmaParams& p) {
  return p.a < 0 && p.b > 0 && p.a <= p.c && p.c <= 0 && 0 <= p.d && p.d <= p.b && ((p.c == 0) == (p.d == 0));
}

bool is(const LemmaParams& p, int64_t a, int64_t b, int64_t c, int64_t d) { return p == LemmaParams{a, b, c, d}; }

std::function<LaurentPoly(const LemmaParams&)> primed_var(int i) {
  return [i](const LemmaParams& p) { return rank2_cluster_variable(p.c, p.d, i); };
}
std::function<LaurentPoly(const LemmaParams&)> var(int i) {
  return [i](const LemmaParams& p) { return rank2_cluster_variable(p.a, p.b, i); };
}
std::function<LaurentPoly(const LemmaParams&)> limit() {
  return [](const LemmaParams& p) { return x_infinity(p.a, p.b); };
}
std::function<LaurentPoly(const LemmaParams&)> primed_theta(int64_t m1, int64_t m2) {
  return [=](const LemmaParams& p) { return theta({p.c, p.d, {m1, m2}}); };
}
std::function<LaurentPoly(const LemmaParams&)> theta_of(int64_t m1, int64_t m2) {
  return [=](const LemmaParams& p) { return theta({p.a, p.b, {m1, m2}}); };
}

LaurentPoly mono(int64_t x1, int64_t y1, int64_t y2, const LaurentPoly& x0, int64_t x0_exp, int64_t c) {
  return LaurentPoly::monomial(2, 2, {x1, 0}, {y1, y2}, c) * x0.pow(x0_exp);
}

const std::vector<LemmaDef>& lemmas() {
  static const std::vector<LemmaDef> defs = {
      {"x0-fixed", "nu(x'_0) = x_0 when a <= c <= 0 <= d <= b", base_ok, primed_var(0), var(0)},
      {"x-1-fixed", "nu(x'_-1) = x_-1 when a <= c <= 0 <= d <= b", base_ok, primed_var(-1), var(-1)},
      {"x3-fixed-same-a", "nu(x'_3) = x_3 when c = a", [](const LemmaParams& p) { return base_ok(p) && p.c == p.a; },
       primed_var(3), var(3)},
      {"x-2-fixed-same-b", "nu(x'_-2) = x_-2 when d = b",
       [](const LemmaParams& p) { return base_ok(p) && p.d == p.b; }, primed_var(-2), var(-2)},
      {"x-2-to-x-3", "nu(x'_-2) = x_-3 for B = [[0,d+1],[-1,0]], B' = [[0,d],[-1,0]], d >= 1",
       [](const LemmaParams& p) { return base_ok(p) && p.a == -1 && p.c == -1 && p.d >= 1 && p.b == p.d + 1; },
       primed_var(-2), var(-3)},
      {"x3-to-limit", "nu(x'_3) = x_inf(-2,2) for B = [[0,2],[-2,0]], B' = [[0,2],[-1,0]]",
       [](const LemmaParams& p) { return is(p, -2, 2, -1, 2); }, primed_var(3), limit()},
      {"x3-to-x4", "nu(x'_3) = x_4 for B = [[0,1],[c-1,0]], B' = [[0,1],[c,0]], c <= -1",
       [](const LemmaParams& p) { return base_ok(p) && p.b == 1 && p.d == 1 && p.c <= -1 && p.a == p.c - 1; },
       primed_var(3), var(4)},
      {"x-2-to-limit", "nu(x'_-2) = x_inf(-2,2) for B = [[0,2],[-2,0]], B' = [[0,1],[-2,0]]",
       [](const LemmaParams& p) { return is(p, -2, 2, -2, 1); }, primed_var(-2), limit()},
      {"x4-to-x5", "nu(x'_4) = x_5 for B = [[0,4],[-1,0]], B' = [[0,3],[-1,0]]",
       [](const LemmaParams& p) { return is(p, -1, 4, -1, 3); }, primed_var(4), var(5)},
      {"x-3-to-limit", "nu(x'_-3) = x_inf(-1,4) for B = [[0,4],[-1,0]], B' = [[0,3],[-1,0]]",
       [](const LemmaParams& p) { return is(p, -1, 4, -1, 3); }, primed_var(-3), limit()},
      {"x-3-to-x-4", "nu(x'_-3) = x_-4 for B = [[0,1],[-4,0]], B' = [[0,1],[-3,0]]",
       [](const LemmaParams& p) { return is(p, -4, 1, -3, 1); }, primed_var(-3), var(-4)},
      {"x4-to-limit", "nu(x'_4) = x_inf(-4,1) for B = [[0,1],[-4,0]], B' = [[0,1],[-3,0]]",
       [](const LemmaParams& p) { return is(p, -4, 1, -3, 1); }, primed_var(4), limit()},
      {"theta(-1,1)", "nu(theta'(-1,1)) = theta(-1,1) when c <= -1, d >= 1",
       [](const LemmaParams& p) { return base_ok(p) && p.c <= -1 && p.d >= 1; }, primed_theta(-1, 1),
       theta_of(-1, 1)},
      {"theta(-2,1)", "nu(theta'(-2,1)) = theta(-2,1) when c <= -1, d >= 2",
       [](const LemmaParams& p) { return base_ok(p) && p.c <= -1 && p.d >= 2; }, primed_theta(-2, 1),
       theta_of(-2, 1)},
      {"theta(-1,2)", "nu(theta'(-1,2)) = theta(-1,2) when c <= -2, d >= 1",
       [](const LemmaParams& p) { return base_ok(p) && p.c <= -2 && p.d >= 1; }, primed_theta(-1, 2),
       theta_of(-1, 2)},
      {"theta(-3,1)", "nu(theta'(-3,1)) = theta(-3,1) when c <= -1, d >= 3",
       [](const LemmaParams& p) { return base_ok(p) && p.c <= -1 && p.d >= 3; }, primed_theta(-3, 1),
       theta_of(-3, 1)},
      {"theta(-3,2)",
       "nu(theta'(-3,2)) = theta(-3,2), plus 3 y1 y2 x0^(-2-a) x1^(b-3) when a <= -2; c = -1, d >= 3",
       [](const LemmaParams& p) { return base_ok(p) && p.c == -1 && p.d >= 3; }, primed_theta(-3, 2),
       [](const LemmaParams& p) {
         LaurentPoly t = theta({p.a, p.b, {-3, 2}});
         if (p.a <= -2) t += mono(p.b - 3, 1, 1, rank2_cluster_variable(p.a, p.b, 0), -2 - p.a, 3);
         return t;
       }},
      {"theta(-1,3)", "nu(theta'(-1,3)) = theta(-1,3) when c <= -3, d >= 1",
       [](const LemmaParams& p) { return base_ok(p) && p.c <= -3 && p.d >= 1; }, primed_theta(-1, 3),
       theta_of(-1, 3)},
      {"theta(-2,3)",
       "nu(theta'(-2,3)) = theta(-2,3), plus 3 y1 y2 x0^(-3-a) x1^(b-2) when b >= 2; c = -3, d = 1",
       [](const LemmaParams& p) { return base_ok(p) && p.c == -3 && p.d == 1; }, primed_theta(-2, 3),
       [](const LemmaParams& p) {
         LaurentPoly t = theta({p.a, p.b, {-2, 3}});
         if (p.b >= 2) t += mono(p.b - 2, 1, 1, rank2_cluster_variable(p.a, p.b, 0), -3 - p.a, 3);
         return t;
       }},
  };
  return defs;
}

const LemmaDef& lemma(const std::string& name) {
  for (const auto& d : lemmas())
    if (d.name == name) return d;
  throw InvalidArgument("unknown lemma: " + name);
}

}  // namespace

bool LemmaReport::all_hold() const {
  return std::all_of(cases.begin(), cases.end(), [](const LemmaCase& c) { return c.holds; });
}

std::vector<std::string> lemma_names() {
  std::vector<std::string> out;
  for (const auto& d : lemmas()) out.push_back(d.name);
  return out;
}

std::string lemma_statement(const std::string& name) { return lemma(name).statement; }

bool lemma_applies(const std::string& name, const LemmaParams& p) { return lemma(name).applies(p); }

LemmaCase check_lemma(const std::string& name, const LemmaParams& p) {
  const LemmaDef& d = lemma(name);
  if (!d.applies(p))
    throw InvalidArgument("parameters (a,b,c,d) = (" + std::to_string(p.a) + "," + std::to_string(p.b) + "," +
                          std::to_string(p.c) + "," + std::to_string(p.d) + ") are outside the hypotheses of " +
                          name);
  LaurentPoly lhs = apply_nu(build_nu_rank2(p.a, p.b, p.c, p.d), d.primed(p));
  LaurentPoly rhs = d.target(p);
  return {name, p, lhs == rhs, lhs.to_string(), rhs.to_string()};
}

LemmaPlan default_lemma_plan() {
  LemmaPlan plan = {
      {"x0-fixed", {{-1, 1, -1, 1}, {-2, 3, -1, 2}, {-3, 1, 0, 0}, {-2, 2, -2, 1}}},
      {"x-1-fixed", {{-1, 1, -1, 1}, {-2, 3, -1, 2}, {-3, 1, 0, 0}, {-2, 2, -2, 1}}},
      {"x3-fixed-same-a", {{-1, 1, -1, 1}, {-2, 2, -2, 1}, {-3, 3, -3, 2}, {-1, 4, -1, 3}}},
      {"x-2-fixed-same-b", {{-2, 1, -1, 1}, {-3, 2, -1, 2}, {-4, 1, -3, 1}, {-2, 2, -2, 2}}},
      {"x-2-to-x-3", {{-1, 2, -1, 1}, {-1, 3, -1, 2}, {-1, 4, -1, 3}}},
      {"x3-to-limit", {{-2, 2, -1, 2}}},
      {"x3-to-x4", {{-2, 1, -1, 1}, {-3, 1, -2, 1}, {-4, 1, -3, 1}}},
      {"x-2-to-limit", {{-2, 2, -2, 1}}},
      {"x4-to-x5", {{-1, 4, -1, 3}}},
      {"x-3-to-limit", {{-1, 4, -1, 3}}},
      {"x-3-to-x-4", {{-4, 1, -3, 1}}},
      {"x4-to-limit", {{-4, 1, -3, 1}}},
      {"theta(-1,1)", {{-1, 1, -1, 1}, {-2, 2, -1, 1}, {-3, 4, -2, 3}, {-5, 5, -1, 1}}},
      {"theta(-2,1)", {{-1, 2, -1, 2}, {-2, 3, -1, 2}, {-3, 3, -3, 3}}},
      {"theta(-1,2)", {{-2, 1, -2, 1}, {-3, 2, -2, 1}, {-4, 3, -3, 2}}},
      {"theta(-3,1)", {{-1, 3, -1, 3}, {-2, 4, -1, 3}, {-3, 5, -2, 4}}},
      {"theta(-3,2)", {{-1, 3, -1, 3}, {-2, 3, -1, 3}, {-3, 4, -1, 3}, {-1, 5, -1, 4}}},
      {"theta(-1,3)", {{-3, 1, -3, 1}, {-4, 2, -3, 1}, {-5, 3, -4, 2}}},
      {"theta(-2,3)", {{-3, 1, -3, 1}, {-4, 1, -3, 1}, {-3, 2, -3, 1}, {-5, 3, -3, 1}}},
  };
  return plan;
}

LemmaReport lemma_suite(const LemmaPlan& plan) {
  for (const auto& entry : plan) lemma(entry.first);  // reject unknown names
  LemmaReport rep;
  for (const auto& name : lemma_names()) {
    auto it = plan.find(name);
    if (it == plan.end()) continue;
    for (const auto& p : it->second) rep.cases.push_back(check_lemma(name, p));
  }
  return rep;
}

}  // namespace domfan

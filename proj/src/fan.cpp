#include "domfan/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "domfan/error.hpp"
#include "domfan/linalg.hpp"

namespace domfan {

namespace {

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Integer(static_cast<long>(a[i])) * static_cast<long>(b[i]);
  return s;
}

Rational dot(const IntVector& a, const RationalVector& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += b[i] * static_cast<long>(a[i]);
  return s;
}

std::vector<RationalVector> as_rational(const std::vector<IntVector>& vs) {
  std::vector<RationalVector> out;
  for (const auto& v : vs) out.push_back(to_rational(v));
  return out;
}

}  // namespace

IntVector hyperplane_normal(const std::vector<IntVector>& vectors, size_t ambient) {
  auto basis = linalg::null_space(as_rational(vectors), ambient);
  if (basis.size() != 1) throw InvalidArgument("vectors do not span a hyperplane");
  IntVector n = primitive_direction(basis.front());
  for (int64_t x : n) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : n) y = -y;
    break;
  }
  return n;
}

RationalCone::RationalCone(size_t ambient, std::vector<IntVector> rays) : ambient_(ambient) {
  if (rays.empty()) throw InvalidArgument("cone needs at least one ray");
  for (auto& r : rays) {
    if (r.size() != ambient) throw InvalidArgument("ray has wrong dimension");
    if (std::all_of(r.begin(), r.end(), [](int64_t x) { return x == 0; }))
      throw InvalidArgument("zero ray");
    r = primitive(std::move(r));
  }
  std::sort(rays.begin(), rays.end());
  if (linalg::rank(as_rational(rays)) != rays.size())
    throw InvalidArgument("cone rays are not linearly independent");
  rays_ = std::move(rays);
  if (full_dimensional()) {
    for (size_t i = 0; i < rays_.size(); ++i) {
      std::vector<IntVector> others;
      for (size_t j = 0; j < rays_.size(); ++j)
        if (j != i) others.push_back(rays_[j]);
      IntVector nrm = hyperplane_normal(others, ambient_);
      if (dot(nrm, rays_[i]) < 0)
        for (auto& x : nrm) x = -x;
      inward_normals_.push_back(std::move(nrm));
    }
  }
}

bool RationalCone::contains(const RationalVector& v) const {
  if (v.size() != ambient_) throw InvalidArgument("vector has wrong dimension");
  if (full_dimensional()) {
    for (const auto& nrm : inward_normals_)
      if (dot(nrm, v) < 0) return false;
    return true;
  }
  auto coeffs = linalg::solve_in_span(as_rational(rays_), v);
  if (!coeffs) return false;
  return std::all_of(coeffs->begin(), coeffs->end(), [](const Rational& c) { return c >= 0; });
}

bool RationalCone::contains_in_interior(const RationalVector& v) const {
  if (!full_dimensional()) throw InvalidArgument("interior test needs a full-dimensional cone");
  for (const auto& nrm : inward_normals_)
    if (dot(nrm, v) <= 0) return false;
  return true;
}

bool cone_contains(const RationalCone& c, const RationalVector& v) { return c.contains(v); }

bool cone_subset(const RationalCone& c, const RationalCone& cp) {
  if (c.ambient() != cp.ambient()) throw InvalidArgument("cones in different ambient spaces");
  return std::all_of(c.rays().begin(), c.rays().end(),
                     [&](const IntVector& r) { return cp.contains(to_rational(r)); });
}

Fan::Fan(size_t rank, std::vector<RationalCone> cones) : rank_(rank), cones_(std::move(cones)) {
  for (const auto& c : cones_)
    if (c.ambient() != rank_) throw InvalidArgument("cone ambient dimension differs from fan rank");
  std::sort(cones_.begin(), cones_.end());
}

std::vector<IntVector> Fan::rays() const {
  std::set<IntVector> rs;
  for (const auto& c : cones_) rs.insert(c.rays().begin(), c.rays().end());
  return {rs.begin(), rs.end()};
}

bool operator==(const Fan& a, const Fan& b) { return a.rank_ == b.rank_ && a.cones_ == b.cones_; }

RefinementResult fan_refines(const Fan& f, const Fan& fp) {
  if (f.rank() != fp.rank()) throw InvalidArgument("fans in different ambient spaces");
  for (size_t i = 0; i < f.cones().size(); ++i) {
    const auto& c = f.cones()[i];
    bool covered = std::any_of(fp.cones().begin(), fp.cones().end(),
                               [&](const RationalCone& cp) { return cone_subset(c, cp); });
    if (!covered) return {false, i};
  }
  return {true, std::nullopt};
}

namespace {

std::vector<IntVector> facet_of(const RationalCone& c, size_t skip) {
  std::vector<IntVector> out;
  for (size_t j = 0; j < c.rays().size(); ++j)
    if (j != skip) out.push_back(c.rays()[j]);
  return out;
}

}  // namespace

std::vector<Wall> walls(const Fan& f) {
  std::map<std::vector<IntVector>, std::vector<size_t>> owners;
  for (size_t i = 0; i < f.cones().size(); ++i) {
    const auto& c = f.cones()[i];
    if (!c.full_dimensional()) throw InvalidArgument("walls need full-dimensional simplicial cones");
    for (size_t j = 0; j < c.rays().size(); ++j) owners[facet_of(c, j)].push_back(i);
  }
  std::vector<Wall> out;
  for (const auto& [facet, cs] : owners) {
    if (cs.size() == 1) continue;
    if (cs.size() != 2) throw InvalidArgument("facet shared by more than two maximal cones");
    out.push_back({facet, hyperplane_normal(facet, f.rank()), cs[0], cs[1]});
  }
  return out;
}

Fan coarsening_by_roots(const Fan& f, const RootSet& keep) {
  const size_t m = f.cones().size();
  const size_t n = f.rank();
  std::vector<size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& w : walls(f))
    if (!keep.count(w.normal)) parent[find(w.cone_a)] = find(w.cone_b);

  std::map<size_t, std::vector<size_t>> groups;
  for (size_t i = 0; i < m; ++i) groups[find(i)].push_back(i);

  std::vector<RationalCone> result;
  for (const auto& [root, members] : groups) {
    if (members.size() == 1) {
      result.push_back(f.cones()[members.front()]);
      continue;
    }
    std::set<IntVector> ray_set;
    for (size_t i : members) ray_set.insert(f.cones()[i].rays().begin(), f.cones()[i].rays().end());
    std::vector<IntVector> rays(ray_set.begin(), ray_set.end());

    // Look for n of the rays whose cone contains every ray of the group.
    std::optional<RationalCone> hull;
    std::vector<bool> pick(rays.size(), false);
    std::fill(pick.end() - static_cast<long>(n), pick.end(), true);
    do {
      std::vector<IntVector> chosen;
      for (size_t i = 0; i < rays.size(); ++i)
        if (pick[i]) chosen.push_back(rays[i]);
      if (linalg::rank(as_rational(chosen)) != n) continue;
      RationalCone cand(n, chosen);
      if (std::all_of(rays.begin(), rays.end(),
                      [&](const IntVector& r) { return cand.contains(to_rational(r)); })) {
        hull = std::move(cand);
        break;
      }
    } while (std::next_permutation(pick.begin(), pick.end()));
    if (!hull) throw InvalidArgument("coarsening merges cones into a non-simplicial or non-convex region");

    // Every facet of a member is either interior to the group or on the hull boundary.
    std::map<std::vector<IntVector>, int> facet_count;
    for (size_t i : members)
      for (size_t j = 0; j < n; ++j) ++facet_count[facet_of(f.cones()[i], j)];
    std::vector<IntVector> hull_normals;
    for (size_t j = 0; j < n; ++j) hull_normals.push_back(hyperplane_normal(facet_of(*hull, j), n));
    for (const auto& [facet, count] : facet_count) {
      if (count == 2) continue;
      bool on_boundary = std::any_of(hull_normals.begin(), hull_normals.end(), [&](const IntVector& nrm) {
        return std::all_of(facet.begin(), facet.end(), [&](const IntVector& r) { return dot(nrm, r) == 0; });
      });
      if (!on_boundary) throw InvalidArgument("coarsening merges cones into a non-convex region");
    }
    result.push_back(std::move(*hull));
  }
  return Fan(n, std::move(result));
}

CoverageReport sample_coverage(const Fan& f, size_t samples, uint64_t seed, int64_t range) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int64_t> dist(-range, range);
  CoverageReport rep{0, 0, 0};
  while (rep.samples < samples) {
    RationalVector p(f.rank());
    bool zero = true;
    for (auto& x : p) {
      int64_t v = dist(gen);
      zero &= v == 0;
      x = Rational(static_cast<long>(v));
    }
    if (zero) continue;
    ++rep.samples;
    size_t in = 0, interior = 0;
    for (const auto& c : f.cones()) {
      if (c.contains(p)) ++in;
      if (c.full_dimensional() && c.contains_in_interior(p)) ++interior;
    }
    if (in == 0) ++rep.uncovered;
    if (interior > 1) ++rep.multiply_interior;
  }
  return rep;
}

}  // namespace domfan

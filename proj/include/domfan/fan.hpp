#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "domfan/exchange_matrix.hpp"
#include "domfan/numeric.hpp"

namespace domfan {

/// Simplicial cone spanned by linearly independent primitive integer rays.
/// Rays keep their direction; only their length is normalized. Rays are
/// stored sorted so equal cones compare equal.
class RationalCone {
 public:
  RationalCone(size_t ambient, std::vector<IntVector> rays);

  size_t ambient() const { return ambient_; }
  size_t dim() const { return rays_.size(); }
  const std::vector<IntVector>& rays() const { return rays_; }
  bool full_dimensional() const { return rays_.size() == ambient_; }

  bool contains(const RationalVector& v) const;
  /// Full-dimensional cones only: every facet inequality is strict.
  bool contains_in_interior(const RationalVector& v) const;

  friend bool operator==(const RationalCone& a, const RationalCone& b) { return a.rays_ == b.rays_; }
  friend bool operator<(const RationalCone& a, const RationalCone& b) { return a.rays_ < b.rays_; }

 private:
  size_t ambient_;
  std::vector<IntVector> rays_;
  std::vector<IntVector> inward_normals_;  // facet opposite ray i, for full-dimensional cones
};

bool cone_contains(const RationalCone& c, const RationalVector& v);
bool cone_subset(const RationalCone& c, const RationalCone& cp);

class Fan {
 public:
  Fan(size_t rank, std::vector<RationalCone> cones);
  size_t rank() const { return rank_; }
  const std::vector<RationalCone>& cones() const { return cones_; }
  /// Distinct rays of all maximal cones, sorted.
  std::vector<IntVector> rays() const;

  /// Same set of maximal cones.
  friend bool operator==(const Fan& a, const Fan& b);

 private:
  size_t rank_;
  std::vector<RationalCone> cones_;
};

struct RefinementResult {
  bool refines;
  std::optional<size_t> uncovered;  // index of a cone of F lying in no cone of F'
};

/// Every maximal cone of f lies in some maximal cone of fp.
RefinementResult fan_refines(const Fan& f, const Fan& fp);

struct Wall {
  std::vector<IntVector> facet;
  IntVector normal;  // primitive, first nonzero entry positive
  size_t cone_a, cone_b;
};

/// Shared facets between pairs of full-dimensional maximal cones.
std::vector<Wall> walls(const Fan& f);

/// Primitive integer normal of the hyperplane through n-1 independent
/// vectors, with first nonzero entry positive.
IntVector hyperplane_normal(const std::vector<IntVector>& vectors, size_t ambient);

/// Merges maximal cones across every wall whose normal is not in `keep`.
/// Each merged region must again be a simplicial cone; otherwise throws
/// InvalidArgument.
Fan coarsening_by_roots(const Fan& f, const RootSet& keep);

struct CoverageReport {
  size_t samples;
  size_t uncovered;           // points in no cone
  size_t multiply_interior;   // points interior to two or more cones
};

/// Samples integer points in [-range, range]^n with a fixed-seed generator.
CoverageReport sample_coverage(const Fan& f, size_t samples, uint64_t seed = 1, int64_t range = 1000);

}  // namespace domfan

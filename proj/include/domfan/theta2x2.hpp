#pragma once

#include <array>
#include <optional>
#include <string>

#include "domfan/exchange_matrix.hpp"
#include "domfan/laurent.hpp"

namespace domfan {

// Rank-2 conventions in this header: B = [[0,b],[a,0]] with a < 0 < b, and
// polynomials live in the ring of x1, x2, y1, y2.

struct ThetaRequest {
  int64_t a;
  int64_t b;
  std::array<int64_t, 2> m;
};

enum class ThetaRegion {
  FirstColumn,  // -b <= m1 <= 0, m2 >= 0
  SecondRow,    // m1 < -b, 0 <= m2 < -a
  Special,      // a = -3, b = 1, m = (-2, 3)
};
std::string to_string(ThetaRegion r);

/// Which closed form covers the request, if any. Earlier regions win.
std::optional<ThetaRegion> theta_region(const ThetaRequest& req);

/// Theta function of g-vector m. Throws InvalidArgument unless a < 0 < b and
/// RegionNotCovered outside the three closed forms.
LaurentPoly theta(const ThetaRequest& req);

/// Cluster variable x_i for i in [-4, 5], where x_i, x_{i+1} is a cluster and
/// x_1, x_2 are initial. Needs a <= 0 <= b, and a < 0 < b for i = -4 and 5.
LaurentPoly rank2_cluster_variable(int64_t a, int64_t b, int i);

/// Theta function of the limiting ray for (a, b) in {(-2,2), (-1,4), (-4,1)}.
LaurentPoly x_infinity(int64_t a, int64_t b);

/// Limiting-ray theta function of an affine 2x2 matrix in either orientation.
LaurentPoly limit_theta(const ExchangeMatrix& b);

}  // namespace domfan

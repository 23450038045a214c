#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "domfan/exchange_matrix.hpp"
#include "domfan/quadratic.hpp"

namespace domfan {

enum class Rank2Type { Zero, Finite, Affine, Wild };
std::string to_string(Rank2Type t);

/// B = [[0,a],[b,0]] brought to a >= 0 >= b. `antipode` records that the
/// input was -[[0,a],[b,0]]; its fan is the negative of the canonical one.
struct Rank2Params {
  int64_t a;
  int64_t b;
  bool antipode;
  Rank2Type type;
};

Rank2Params canonicalize_2x2(const ExchangeMatrix& b);

/// P_0 = P_1 = 1; P_m = -ab P_{m-1} - P_{m-2} (m even), P_{m-1} - P_{m-2} (m odd).
Integer p_m(size_t m, int64_t a, int64_t b);

using LimitRay = std::array<QuadraticNumber, 2>;
using IntegerRay = std::array<Integer, 2>;

struct Rank2Rays {
  Rank2Params params;
  std::vector<IntegerRay> rays;   // primitive, in the orientation of the input matrix
  std::optional<LimitRay> v_inf;  // only when ab <= -4
  std::optional<LimitRay> w_inf;
};

inline constexpr size_t kDefaultKmax = 32;

/// Rays of the mutation fan: the complete finite list in finite type, and
/// +-e_1, +-e_2, v_0..v_kmax, w_0..w_kmax plus limit rays when ab <= -4.
Rank2Rays rays_2x2(const ExchangeMatrix& b, size_t kmax = kDefaultKmax);

struct SlopeSet {
  Rank2Type type;
  std::string transform;  // "identity" or "antipode"
  std::set<Rational> rational_slopes;
  std::vector<Rational> s;  // s_0..s_kmax when ab <= -4
  std::vector<Rational> t;  // t_0..t_kmax when ab <= -4
  std::optional<QuadraticNumber> s_inf, t_inf;
};

/// Relevant slopes (0 and infinity excluded). Slopes are unchanged by the
/// antipode, so they are those of the canonical form.
SlopeSet slopes_2x2(const ExchangeMatrix& b, size_t kmax = kDefaultKmax);

QuadraticNumber s_infinity(int64_t a, int64_t b);
QuadraticNumber t_infinity(int64_t a, int64_t b);

struct Rank2Verdict {
  bool refines;
  int branch;  // 1: no dominance, 2: neither wild, 3: one wild, 4: both wild
  std::string reason;
};

/// Decides whether F_B refines F_B' for 2x2 matrices.
Rank2Verdict refines_2x2(const ExchangeMatrix& b, const ExchangeMatrix& bp);

/// Scattering-fan refinement for 2x2 matrices, conditional on every rational
/// ray of the wild limit cone being its own cone. Equals dominance.
bool scatfan_refines_2x2(const ExchangeMatrix& b, const ExchangeMatrix& bp);

}  // namespace domfan

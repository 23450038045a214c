#pragma once

#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "domfan/cluster.hpp"
#include "domfan/dominance_hom.hpp"
#include "domfan/exchange_matrix.hpp"
#include "domfan/fan.hpp"
#include "domfan/fan2x2.hpp"
#include "domfan/mulin.hpp"
#include "domfan/quadratic.hpp"

namespace domfan::io {

using json = nlohmann::ordered_json;

// All indices in JSON are 1-based. Rationals are strings "p" or "p/q".

/// {"rank": n, "entries": [[...], ...]}; a bare array of rows is also accepted.
json to_json(const ExchangeMatrix& b);
ExchangeMatrix matrix_from_json(const json& j);

/// {"matrix": <matrix>, "terms": [{"coeff": "p/q", "vector": ["p/q", ...]}, ...]}
json to_json(const ExchangeMatrix& b, const LinearRelation& rel);
std::pair<ExchangeMatrix, LinearRelation> relation_from_json(const json& j);

json to_json(const CoherenceVerdict& v);

/// {"rank": n, "cones": [[[ray], ...], ...]}
json to_json(const Fan& f);
Fan fan_from_json(const json& j);

json to_json(const QuadraticNumber& q);
json to_json(const SlopeSet& s);
json to_json(const Rank2Rays& r);
json to_json(const Rank2Verdict& v);

/// {"variables": [{"poly": "...", "g": [...]}, ...], "clusterCount": m, "clusters": [[ids], ...]}
json to_json(const ClusterCatalog& c);

json to_json(const HomVerdict& v);
json to_json(const LemmaReport& r);

/// {"lemma name": [[a,b,c,d], ...] or [{"a":..,"b":..,"c":..,"d":..}, ...], ...}
LemmaPlan lemma_plan_from_json(const json& j);

json roots_to_json(const CartanMatrix& a, const RootSet& roots);

json read_json_file(const std::string& path);

/// Unit-disk diagram of a rank-2 fan: maximal cones shaded, rays labeled by
/// their primitive vectors.
std::string fan_svg(const Fan& f);
/// Same for the explicit 2x2 rays; limit rays (if any) are dashed.
std::string rays_svg(const Rank2Rays& r);

}  // namespace domfan::io

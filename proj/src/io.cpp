#include "domfan/io.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "domfan/error.hpp"

namespace domfan::io {

namespace {

json one_based(const std::vector<size_t>& v) {
  json out = json::array();
  for (size_t x : v) out.push_back(x + 1);
  return out;
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<int64_t>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidArgument("expected a rational as an integer or a \"p/q\" string, got " + j.dump());
}

json to_json(const IntegerRay& r) { return json::array({to_string(r[0]), to_string(r[1])}); }

int64_t int_from_json(const json& j) {
  if (!j.is_number_integer()) throw InvalidArgument("expected an integer, got " + j.dump());
  return j.get<int64_t>();
}

}  // namespace

json to_json(const ExchangeMatrix& b) { return json{{"rank", b.rank()}, {"entries", b.rows()}}; }

ExchangeMatrix matrix_from_json(const json& j) {
  const json* entries = &j;
  if (j.is_object()) {
    if (!j.contains("entries")) throw InvalidArgument("matrix JSON needs an \"entries\" field");
    entries = &j.at("entries");
  }
  if (!entries->is_array()) throw InvalidArgument("matrix entries must be an array of rows");
  std::vector<IntVector> rows;
  for (const auto& row : *entries) {
    if (!row.is_array()) throw InvalidArgument("matrix rows must be arrays");
    IntVector r;
    for (const auto& x : row) r.push_back(int_from_json(x));
    rows.push_back(std::move(r));
  }
  if (j.is_object() && j.contains("rank") && int_from_json(j.at("rank")) != static_cast<int64_t>(rows.size()))
    throw InvalidArgument("\"rank\" disagrees with the number of rows");
  return ExchangeMatrix(std::move(rows));
}

json to_json(const ExchangeMatrix& b, const LinearRelation& rel) {
  json terms = json::array();
  for (const auto& t : rel.terms()) {
    json v = json::array();
    for (const auto& x : t.vector) v.push_back(to_string(x));
    terms.push_back({{"coeff", to_string(t.coeff)}, {"vector", v}});
  }
  return json{{"matrix", to_json(b)}, {"terms", terms}};
}

std::pair<ExchangeMatrix, LinearRelation> relation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("matrix") || !j.contains("terms"))
    throw InvalidArgument("relation JSON needs \"matrix\" and \"terms\"");
  ExchangeMatrix b = matrix_from_json(j.at("matrix"));
  std::vector<RelationTerm> terms;
  for (const auto& t : j.at("terms")) {
    RelationTerm term{rational_from_json(t.at("coeff")), {}};
    for (const auto& x : t.at("vector")) term.vector.push_back(rational_from_json(x));
    terms.push_back(std::move(term));
  }
  return {b, LinearRelation(b.rank(), std::move(terms))};
}

json to_json(const CoherenceVerdict& v) {
  json out{{"status", v.status == CoherenceStatus::HoldsToDepth ? "holds-to-depth" : "fails"},
           {"depth", v.depth},
           {"nodes", v.nodes}};
  if (v.counterexample)
    out["counterexample"] = {{"sequence", one_based(v.counterexample->sequence)},
                             {"equation", v.counterexample->equation == FailingEquation::Linear ? "linear" : "min"}};
  else
    out["counterexample"] = nullptr;
  out["firstLinearFailure"] = v.first_linear_failure ? one_based(*v.first_linear_failure) : json(nullptr);
  return out;
}

json to_json(const Fan& f) {
  json cones = json::array();
  for (const auto& c : f.cones()) cones.push_back(c.rays());
  return json{{"rank", f.rank()}, {"cones", cones}};
}

Fan fan_from_json(const json& j) {
  const size_t rank = static_cast<size_t>(int_from_json(j.at("rank")));
  std::vector<RationalCone> cones;
  for (const auto& c : j.at("cones")) {
    std::vector<IntVector> rays;
    for (const auto& r : c) {
      IntVector v;
      for (const auto& x : r) v.push_back(int_from_json(x));
      rays.push_back(std::move(v));
    }
    cones.emplace_back(rank, std::move(rays));
  }
  return Fan(rank, std::move(cones));
}

json to_json(const QuadraticNumber& q) {
  return json{{"p", to_string(q.p())},
              {"q", to_string(q.q())},
              {"d", to_string(q.d())},
              {"text", q.to_string()},
              {"approx", q.to_double()}};
}

json to_json(const SlopeSet& s) {
  json out{{"classification", to_string(s.type)}, {"transform", s.transform}};
  json rs = json::array();
  for (const auto& q : s.rational_slopes) rs.push_back(to_string(q));
  out["rationalSlopes"] = rs;
  json sk = json::array(), tk = json::array();
  for (const auto& q : s.s) sk.push_back(to_string(q));
  for (const auto& q : s.t) tk.push_back(to_string(q));
  out["s"] = sk;
  out["t"] = tk;
  if (s.s_inf)
    out["limitSlopes"] = {{"sInf", to_json(*s.s_inf)}, {"tInf", to_json(*s.t_inf)}};
  else
    out["limitSlopes"] = nullptr;
  return out;
}

json to_json(const Rank2Rays& r) {
  json rays = json::array();
  for (const auto& x : r.rays) rays.push_back(to_json(x));
  json out{{"classification", to_string(r.params.type)}, {"rays", rays}};
  if (r.v_inf) {
    out["vInf"] = {to_json((*r.v_inf)[0]), to_json((*r.v_inf)[1])};
    out["wInf"] = {to_json((*r.w_inf)[0]), to_json((*r.w_inf)[1])};
  }
  return out;
}

json to_json(const Rank2Verdict& v) {
  return json{{"refines", v.refines}, {"branch", v.branch}, {"reason", v.reason}};
}

json to_json(const ClusterCatalog& c) {
  json vars = json::array();
  for (size_t i = 0; i < c.variables().size(); ++i)
    vars.push_back({{"poly", c.variables()[i].to_string()}, {"g", c.gvectors()[i]}});
  json clusters = json::array();
  for (const auto& cl : c.clusters()) clusters.push_back(one_based(cl));
  return json{{"matrix", to_json(c.matrix())},
              {"variables", vars},
              {"clusterCount", c.clusters().size()},
              {"clusters", clusters}};
}

json to_json(const HomVerdict& v) {
  json map = json::array();
  for (const auto& im : v.images)
    map.push_back({{"source", im.source.to_string()},
                   {"image", im.image.to_string()},
                   {"status", to_string(im.status)},
                   {"sourceG", im.source_g},
                   {"imageG", im.image_g ? json(*im.image_g) : json(nullptr)},
                   {"gPreserved", im.g_preserved}});
  return json{{"variableMap", map},
              {"gPreserved", v.g_preserved},
              {"allClusterVariables", v.all_cluster_variables},
              {"injectivityCriterion", v.injectivity_criterion ? "satisfied" : "not-applicable"}};
}

json to_json(const LemmaReport& r) {
  json cases = json::array();
  for (const auto& c : r.cases)
    cases.push_back({{"lemma", c.lemma},
                     {"params", {{"a", c.params.a}, {"b", c.params.b}, {"c", c.params.c}, {"d", c.params.d}}},
                     {"holds", c.holds},
                     {"lhs", c.lhs},
                     {"rhs", c.rhs}});
  return json{{"allHold", r.all_hold()}, {"cases", cases}};
}

LemmaPlan lemma_plan_from_json(const json& j) {
  if (!j.is_object()) throw InvalidArgument("lemma parameters must be an object keyed by lemma name");
  LemmaPlan plan;
  for (const auto& [name, list] : j.items()) {
    if (!list.is_array()) throw InvalidArgument("parameters for " + name + " must be an array");
    for (const auto& t : list) {
      LemmaParams p{};
      if (t.is_array()) {
        if (t.size() != 4) throw InvalidArgument("parameter tuples are [a, b, c, d]");
        p = {int_from_json(t[0]), int_from_json(t[1]), int_from_json(t[2]), int_from_json(t[3])};
      } else if (t.is_object()) {
        p = {int_from_json(t.at("a")), int_from_json(t.at("b")), int_from_json(t.at("c")), int_from_json(t.at("d"))};
      } else {
        throw InvalidArgument("parameter tuples are [a, b, c, d] or {\"a\":..,\"b\":..,\"c\":..,\"d\":..}");
      }
      plan[name].push_back(p);
    }
  }
  return plan;
}

json roots_to_json(const CartanMatrix& a, const RootSet& roots) {
  json rs = json::array();
  for (const auto& r : roots) rs.push_back(r);
  return json{{"cartan", a.rows()}, {"finiteType", a.is_finite_type()}, {"count", roots.size()}, {"roots", rs}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

namespace {

constexpr double kSize = 400, kCenter = 200, kRadius = 160;

struct Dir {
  double x, y;
  std::string label;
  bool dashed;
};

double angle(const Dir& d) { return std::atan2(d.y, d.x); }

std::string num(double v) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(2);
  s << v;
  return s.str();
}

std::string px(double theta, double r) { return num(kCenter + r * std::cos(theta)); }
std::string py(double theta, double r) { return num(kCenter - r * std::sin(theta)); }
std::string point(double theta, double r) { return px(theta, r) + "," + py(theta, r); }

// Sector from angle t0 counterclockwise to t1 (screen y points down).
std::string sector(double t0, double t1, const char* fill) {
  std::ostringstream s;
  double sweep = t1 - t0;
  while (sweep < 0) sweep += 2 * std::numbers::pi;
  s << "<path d=\"M " << kCenter << "," << kCenter << " L " << point(t0, kRadius) << " A " << kRadius << " "
    << kRadius << " 0 " << (sweep > std::numbers::pi ? 1 : 0) << " 0 " << point(t1, kRadius)
    << " Z\" fill=\"" << fill << "\" stroke=\"none\"/>\n";
  return s.str();
}

std::string render(const std::vector<Dir>& dirs, const std::string& sectors) {
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize << "\" viewBox=\"0 0 "
    << kSize << " " << kSize << "\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s << sectors;
  s << "<circle cx=\"" << kCenter << "\" cy=\"" << kCenter << "\" r=\"" << kRadius
    << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  for (const auto& d : dirs) {
    const double t = angle(d);
    s << "<line x1=\"" << kCenter << "\" y1=\"" << kCenter << "\" x2=\"" << px(t, kRadius) << "\" y2=\""
      << py(t, kRadius) << "\" stroke=\"black\" stroke-width=\"1\""
      << (d.dashed ? " stroke-dasharray=\"4 3\"" : "") << "/>\n";
    s << "<text x=\"" << px(t, kRadius + 18) << "\" y=\"" << py(t, kRadius + 18)
      << "\" font-size=\"9\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << d.label << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

std::string label(const IntVector& r) { return "(" + std::to_string(r[0]) + "," + std::to_string(r[1]) + ")"; }

}  // namespace

std::string fan_svg(const Fan& f) {
  if (f.rank() != 2) throw InvalidArgument("SVG output is only available for rank-2 fans");
  std::vector<Dir> dirs;
  for (const auto& r : f.rays())
    dirs.push_back({static_cast<double>(r[0]), static_cast<double>(r[1]), label(r), false});
  std::string sectors;
  const char* fills[] = {"#dde8f5", "#f5e6d3"};
  size_t i = 0;
  for (const auto& c : f.cones()) {
    if (c.rays().size() != 2) continue;
    double t0 = std::atan2(static_cast<double>(c.rays()[0][1]), static_cast<double>(c.rays()[0][0]));
    double t1 = std::atan2(static_cast<double>(c.rays()[1][1]), static_cast<double>(c.rays()[1][0]));
    double sweep = t1 - t0;
    while (sweep < 0) sweep += 2 * std::numbers::pi;
    if (sweep > std::numbers::pi) std::swap(t0, t1);
    sectors += sector(t0, t1, fills[i++ % 2]);
  }
  return render(dirs, sectors);
}

std::string rays_svg(const Rank2Rays& r) {
  std::vector<Dir> dirs;
  for (const auto& v : r.rays)
    dirs.push_back({v[0].get_d(), v[1].get_d(), "(" + to_string(v[0]) + "," + to_string(v[1]) + ")", false});
  std::string sectors;
  if (r.v_inf) {
    Dir v{(*r.v_inf)[0].to_double(), (*r.v_inf)[1].to_double(), "v_inf", true};
    Dir w{(*r.w_inf)[0].to_double(), (*r.w_inf)[1].to_double(), "w_inf", true};
    double t0 = angle(v), t1 = angle(w);
    double sweep = t1 - t0;
    while (sweep < 0) sweep += 2 * std::numbers::pi;
    if (sweep > std::numbers::pi) std::swap(t0, t1);
    if (std::abs(t1 - t0) > 1e-12) sectors += sector(t0, t1, "#cccccc");
    dirs.push_back(v);
    if (std::abs(angle(v) - angle(w)) > 1e-12) dirs.push_back(w);
  }
  return render(dirs, sectors);
}

}  // namespace domfan::io

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "domfan/cluster.hpp"
#include "domfan/dominance_hom.hpp"
#include "domfan/error.hpp"
#include "domfan/exchange_matrix.hpp"
#include "domfan/fan.hpp"
#include "domfan/fan2x2.hpp"
#include "domfan/io.hpp"
#include "domfan/mulin.hpp"
#include "domfan/theta2x2.hpp"

using namespace domfan;
using io::json;

namespace {

constexpr int kTrue = 0, kFalse = 1, kError = 2;

// Explicit flag, then DOMFAN_BUDGET, then the library default.
size_t budget_or(std::optional<size_t> flag, size_t fallback) {
  if (flag) return *flag;
  if (const char* env = std::getenv("DOMFAN_BUDGET")) {
    try {
      size_t pos = 0;
      const unsigned long long v = std::stoull(env, &pos);
      if (pos == std::string(env).size() && v > 0) return static_cast<size_t>(v);
    } catch (const std::exception&) {
    }
    throw InvalidArgument("DOMFAN_BUDGET must be a positive integer");
  }
  return fallback;
}

ExchangeMatrix load_matrix(const std::string& path) { return io::matrix_from_json(io::read_json_file(path)); }

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
}

std::vector<size_t> parse_sequence(const std::string& text, size_t n) {
  std::vector<size_t> ks;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    size_t pos = 0;
    long long k = 0;
    try {
      k = std::stoll(item, &pos);
    } catch (const std::exception&) {
      throw InvalidArgument("bad mutation index '" + item + "'");
    }
    if (pos != item.size() || k < 1 || static_cast<size_t>(k) > n)
      throw IndexOutOfRange("mutation index " + item + " is outside 1.." + std::to_string(n));
    ks.push_back(static_cast<size_t>(k - 1));
  }
  if (ks.empty()) throw InvalidArgument("empty mutation sequence");
  return ks;
}

json refinement_by_gvector_fans(const ExchangeMatrix& a, const ExchangeMatrix& b, size_t budget) {
  if (!is_finite_type(a) || !is_finite_type(b))
    throw Undecided("refinement beyond rank 2 is only decided when both matrices are of finite type");
  const Fan fa = gvector_fan(transpose(a), budget), fb = gvector_fan(transpose(b), budget);
  const RefinementResult r = fan_refines(fa, fb);
  json out{{"refines", r.refines}, {"method", "g-vector fans of the transposes"}};
  out["uncoveredCone"] = r.uncovered ? json(fa.cones()[*r.uncovered].rays()) : json(nullptr);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dominance, mutation fans and cluster homomorphisms for exchange matrices"};
  app.require_subcommand(1);
  int code = kTrue;

  std::optional<size_t> budget;
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", budget, "search budget (default from DOMFAN_BUDGET or built in)");
  };

  // mutate
  std::string m_path, m_seq;
  auto* mut = app.add_subcommand("mutate", "mutate a matrix along k_q,...,k_1 (last index acts first)");
  mut->add_option("matrix", m_path)->required();
  mut->add_option("--k", m_seq, "1-based index or comma-separated sequence")->required();
  mut->callback([&] {
    ExchangeMatrix b = load_matrix(m_path);
    const auto ks = parse_sequence(m_seq, b.rank());
    emit(io::to_json(mutate_seq(b, ks)));
  });

  // dominates
  std::string d_a, d_b;
  auto* dom = app.add_subcommand("dominates", "does the first matrix dominate the second");
  dom->add_option("B", d_a)->required();
  dom->add_option("Bp", d_b)->required();
  dom->callback([&] {
    const bool r = dominates(load_matrix(d_a), load_matrix(d_b));
    emit(json{{"dominates", r}});
    code = r ? kTrue : kFalse;
  });

  // coherence
  std::string c_path;
  size_t c_depth = kDefaultCoherenceDepth;
  auto* coh = app.add_subcommand("coherence", "bounded check that a linear relation is B-coherent");
  coh->add_option("relation", c_path)->required();
  coh->add_option("--depth", c_depth, "maximal mutation sequence length");
  add_budget(coh);
  coh->callback([&] {
    auto [b, rel] = io::relation_from_json(io::read_json_file(c_path));
    const CoherenceVerdict v = check_coherence(b, rel, c_depth, budget_or(budget, kDefaultNodeBudget));
    emit(io::to_json(v));
    code = v.status == CoherenceStatus::HoldsToDepth ? kTrue : kFalse;
  });

  // fan2x2
  std::string f_path, f_svg;
  size_t f_kmax = kDefaultKmax;
  auto* f2 = app.add_subcommand("fan2x2", "relevant slopes of the mutation fan of a 2x2 matrix");
  f2->add_option("matrix", f_path)->required();
  f2->add_option("--kmax", f_kmax, "last index k of s_k, t_k");
  f2->add_option("--svg", f_svg, "write a ray diagram");
  f2->callback([&] {
    ExchangeMatrix b = load_matrix(f_path);
    emit(io::to_json(slopes_2x2(b, f_kmax)));
    if (!f_svg.empty()) write_file(f_svg, io::rays_svg(rays_2x2(b, f_kmax)));
  });

  // refines
  std::string r_a, r_b, r_mode = "mutation";
  auto* ref = app.add_subcommand("refines", "does the fan of the first matrix refine that of the second");
  ref->add_option("B", r_a)->required();
  ref->add_option("Bp", r_b)->required();
  ref->add_option("--mode", r_mode, "mutation or scattering")->check(CLI::IsMember({"mutation", "scattering"}));
  add_budget(ref);
  ref->callback([&] {
    ExchangeMatrix a = load_matrix(r_a), b = load_matrix(r_b);
    if (a.rank() != b.rank()) throw InvalidArgument("matrices have different ranks");
    json out;
    if (a.rank() == 2 && r_mode == "mutation") {
      out = io::to_json(refines_2x2(a, b));
    } else if (a.rank() == 2) {
      const bool r = scatfan_refines_2x2(a, b);
      out = json{{"refines", r},
                 {"reason", r ? "B dominates B'" : "B does not dominate B'"},
                 {"conditionalOn", "every rational ray of a wild limit cone is its own cone"}};
    } else {
      out = refinement_by_gvector_fans(a, b, budget_or(budget, kDefaultSeedBudget));
    }
    emit(out);
    code = out["refines"].get<bool>() ? kTrue : kFalse;
  });

  // enumerate
  std::string e_path;
  auto* en = app.add_subcommand("enumerate", "cluster variables and clusters with principal coefficients");
  en->add_option("matrix", e_path)->required();
  add_budget(en);
  en->callback([&] { emit(io::to_json(enumerate(load_matrix(e_path), budget_or(budget, kDefaultSeedBudget)))); });

  // gfan
  std::string g_path, g_svg;
  bool g_mutation = false;
  auto* gf = app.add_subcommand("gfan", "g-vector fan of a finite-type matrix");
  gf->add_option("matrix", g_path)->required();
  gf->add_flag("--mutation-fan", g_mutation, "emit the mutation fan (g-vector fan of the transpose)");
  gf->add_option("--svg", g_svg, "write a diagram (rank 2 only)");
  add_budget(gf);
  gf->callback([&] {
    ExchangeMatrix b = load_matrix(g_path);
    const Fan f = gvector_fan(g_mutation ? transpose(b) : b, budget_or(budget, kDefaultSeedBudget));
    emit(io::to_json(f));
    if (!g_svg.empty()) write_file(g_svg, io::fan_svg(f));
  });

  // nu-check
  std::string n_b, n_bp;
  auto* nu = app.add_subcommand("nu-check", "map the cluster variables of B' into A(B) through nu_z");
  nu->add_option("B", n_b)->required();
  nu->add_option("Bp", n_bp)->required();
  add_budget(nu);
  nu->callback([&] {
    const HomVerdict v = verify_hom(load_matrix(n_b), load_matrix(n_bp), budget_or(budget, kDefaultSeedBudget));
    emit(io::to_json(v));
    bool ok = v.g_preserved;
    for (const auto& im : v.images) ok &= im.status != ImageStatus::Other;
    code = ok ? kTrue : kFalse;
  });

  // lemma-suite
  std::string l_params;
  auto* ls = app.add_subcommand("lemma-suite", "rank-2 nu_z identities at concrete parameters");
  ls->add_option("--params", l_params, "JSON object {lemma: [[a,b,c,d], ...]}; built-in plan if omitted");
  ls->callback([&] {
    const LemmaPlan plan = l_params.empty() ? default_lemma_plan() : io::lemma_plan_from_json(io::read_json_file(l_params));
    const LemmaReport rep = lemma_suite(plan);
    emit(io::to_json(rep));
    code = rep.all_hold() ? kTrue : kFalse;
  });

  // theta
  int64_t t_a = 0, t_b = 0;
  std::vector<int64_t> t_m;
  auto* th = app.add_subcommand("theta", "closed-form theta function for B = [[0,b],[a,0]], a < 0 < b");
  th->add_option("--a", t_a)->required();
  th->add_option("--b", t_b)->required();
  th->add_option("--m", t_m, "M1,M2")->required()->delimiter(',')->expected(2);
  th->callback([&] { std::cout << theta({t_a, t_b, {t_m.at(0), t_m.at(1)}}).to_string() << "\n"; });

  // roots
  std::string o_path;
  auto* rt = app.add_subcommand("roots", "positive roots of the Cartan companion");
  rt->add_option("matrix", o_path)->required();
  add_budget(rt);
  rt->callback([&] {
    const CartanMatrix a = cartan(load_matrix(o_path));
    emit(io::roots_to_json(a, positive_roots(a, budget_or(budget, 100000))));
  });

  // coarsen
  std::string k_b, k_bp, k_svg;
  auto* co = app.add_subcommand("coarsen", "merge cones of F_B across walls whose normals are not roots of B'");
  co->add_option("B", k_b)->required();
  co->add_option("Bp", k_bp)->required();
  co->add_option("--svg", k_svg, "write a diagram of the coarsened fan (rank 2 only)");
  add_budget(co);
  co->callback([&] {
    ExchangeMatrix b = load_matrix(k_b), bp = load_matrix(k_bp);
    if (!dominates(b, bp)) throw InvalidArgument("B does not dominate B'");
    const size_t bud = budget_or(budget, kDefaultSeedBudget);
    const Fan coarse = coarsening_by_roots(gvector_fan(transpose(b), bud), positive_roots(cartan(bp)));
    const bool equal = coarse == gvector_fan(transpose(bp), bud);
    emit(json{{"fan", io::to_json(coarse)}, {"equalsMutationFanOfBp", equal}});
    if (!k_svg.empty()) write_file(k_svg, io::fan_svg(coarse));
    code = equal ? kTrue : kFalse;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kTrue : kError;
  } catch (const Error& e) {
    std::cerr << "domfan: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "domfan: " << e.what() << "\n";
    return kError;
  }
  return code;
}

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "domfan/cluster.hpp"
#include "domfan/exchange_matrix.hpp"
#include "domfan/laurent.hpp"

namespace domfan {

/// nu_z for B dominating B': x'_k -> x_k, y'_k -> y_k z_k, where z_k is the
/// cluster monomial of A(B) with g-vector col_k(B) - col_k(B'). Primed
/// polynomials use the same variable names as unprimed ones.
struct NuMap {
  ExchangeMatrix b;
  ExchangeMatrix bp;
  std::vector<LaurentPoly> z;
};

inline constexpr size_t kDefaultSeedDepth = 8;

/// z_k looked up in a catalog of B.
NuMap build_nu(const ExchangeMatrix& b, const ExchangeMatrix& bp, const ClusterCatalog& catalog_b);

/// z_k found among the clusters within `depth` mutations of the initial seed.
/// Works outside finite type; throws Error when some z_k is not found.
NuMap build_nu(const ExchangeMatrix& b, const ExchangeMatrix& bp, size_t depth = kDefaultSeedDepth);

/// B = [[0,b],[a,0]], B' = [[0,d],[c,0]] with a <= c <= 0 <= d <= b:
/// z_1 = x_0^{c-a}, z_2 = x_1^{b-d}.
NuMap build_nu_rank2(int64_t a, int64_t b, int64_t c, int64_t d);

LaurentPoly apply_nu(const NuMap& nu, const LaurentPoly& p);

/// At most one column k has some i with b_ik < b'_ik <= 0.
bool injectivity_hypothesis(const ExchangeMatrix& b, const ExchangeMatrix& bp);

enum class ImageStatus { ClusterVariable, LimitTheta, Other };
std::string to_string(ImageStatus s);

struct VariableImage {
  LaurentPoly source;
  LaurentPoly image;
  ImageStatus status;
  IntVector source_g;
  std::optional<IntVector> image_g;  // empty when the image is inhomogeneous
  bool g_preserved;
};

struct HomVerdict {
  std::vector<VariableImage> images;  // in catalog order of B'
  bool g_preserved;
  bool all_cluster_variables;
  bool injectivity_criterion;
};

/// Maps every cluster variable of B' through nu_z and classifies the images:
/// catalog variables of B first, then the limiting-ray theta function for
/// affine 2x2 B, otherwise "other". Outside finite type the cluster variables
/// of B are those within `depth` mutations.
HomVerdict verify_hom(const ExchangeMatrix& b, const ExchangeMatrix& bp, size_t budget = kDefaultSeedBudget,
                      size_t depth = 2 * kDefaultSeedDepth);

/// Same, reusing catalogs of finite-type B and B'.
HomVerdict verify_hom(const ClusterCatalog& catalog_b, const ClusterCatalog& catalog_bp);

/// Every exchange relation of B' holds after applying nu to both sides.
bool verify_exchange_transport(const NuMap& nu, const ClusterCatalog& catalog_bp);

/// nu^{Bm,B} o nu^{Bpp,Bm} = nu^{Bpp,B} on all x''_k and y''_k.
bool verify_factorization(const ExchangeMatrix& b, const ExchangeMatrix& bm, const ExchangeMatrix& bpp,
                          size_t budget = kDefaultSeedBudget);

/// Matrices dominated by B that differ from it in exactly one entry, or by
/// zeroing a pair b_ij = -b_ji = +-1.
std::vector<ExchangeMatrix> special_dominated(const ExchangeMatrix& b);

/// Acyclic finite-type exchange matrices of the given rank, one per
/// canonical form, sorted.
std::vector<ExchangeMatrix> acyclic_finite_type(size_t rank);

// Rank-2 identities with B = [[0,b],[a,0]] and B' = [[0,d],[c,0]].

struct LemmaParams {
  int64_t a, b, c, d;
  friend bool operator==(const LemmaParams&, const LemmaParams&) = default;
};

struct LemmaCase {
  std::string lemma;
  LemmaParams params;
  bool holds;
  std::string lhs;
  std::string rhs;
};

struct LemmaReport {
  std::vector<LemmaCase> cases;
  bool all_hold() const;
};

std::vector<std::string> lemma_names();
std::string lemma_statement(const std::string& name);
bool lemma_applies(const std::string& name, const LemmaParams& p);

/// Throws InvalidArgument for an unknown lemma or parameters outside its
/// hypotheses.
LemmaCase check_lemma(const std::string& name, const LemmaParams& p);

using LemmaPlan = std::map<std::string, std::vector<LemmaParams>>;
LemmaPlan default_lemma_plan();
LemmaReport lemma_suite(const LemmaPlan& plan);

}  // namespace domfan

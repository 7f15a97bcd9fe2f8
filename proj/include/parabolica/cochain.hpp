#pragma once

#include <chrono>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "parabolica/chevalley.hpp"
#include "parabolica/linalg/matrix.hpp"
#include "parabolica/nilpotent.hpp"
#include "parabolica/weights.hpp"

namespace parabolica {

/// Cochains on g_- with values in V in degrees 0, 1, 2.
///
/// Index scheme (nV = dim V, Y_a the generators of g_-):
///   degree 0: v
///   degree 1: a * nV + v            <-> Y_a^* (x) v
///   degree 2: p * nV + v            <-> Y_b^* ^ Y_c^* (x) v, p = pairs()[...] with b < c
/// A cochain f of degree 2 has coordinate f(Y_b, Y_c) at (b, c).
/// Grading label of a basis cochain: sum of the degrees of its dual
/// generators plus the tag of v (V_0 has tag 0).
struct CochainComplex {
  ModuleModel module;
  NilpotentModel nilpotent;
  std::vector<int> tags;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<int> label0, label1, label2;
  Matrix d0;  // C0 -> C1
  Matrix d1;  // C1 -> C2

  std::size_t dim_v() const { return module.dim(); }
  std::size_t dim1() const { return label1.size(); }
  std::size_t dim2() const { return label2.size(); }
  int top_tag() const;
  /// Module basis indices with tag i, in module order.
  std::vector<std::size_t> tag_block(int i) const;
  static std::vector<std::size_t> label_block(const std::vector<int>& labels, int i);
};

CochainComplex build_complex(const ModuleModel& mm, const NilpotentModel& nm);

struct HodgeData {
  Matrix dstar1;       // C1 -> C0
  Matrix dstar2;       // C2 -> C1
  Matrix laplacian;    // on C1
  Matrix deltastar1;   // C1 -> C0
  Matrix deltastar2;   // C2 -> C1
  Matrix ker_laplacian;  // columns in C1
  std::size_t rank_d0 = 0, rank_d1 = 0, rank_dstar1 = 0, rank_dstar2 = 0;
};

/// Codifferential from the explicit wedge formula, through the pairing of g_-^* with p_+.
HodgeData build_partial_star(const CochainComplex& cc);
/// Laplacian, its kernel, the Hodge rank identities and delta^*. Throws
/// VerificationError when the decomposition fails.
HodgeData hodge(const CochainComplex& cc);

std::size_t h0_dim(const CochainComplex& cc);
std::size_t h1_dim(const CochainComplex& cc);

/// dim ker(Laplacian) in each grading label of C1.
std::map<int, std::size_t> h1_label_profile(const CochainComplex& cc, const HodgeData& hd);
/// The single label carried by ker(Laplacian). Throws on mixed labels.
int h1_location_check(const CochainComplex& cc, const HodgeData& hd);
/// True iff every kernel vector of the Laplacian lives on degree-1 dual generators.
bool h1_supported_in_degree_one(const CochainComplex& cc, const HodgeData& hd);

/// phi_i : V_i -> U_{-i}(g_-)^* (x) V_0, v |-> (u |-> -u^T v).
/// Rows: PBW monomial index * dim V_0 + position in V_0. Columns: V_i in module order.
Matrix phi_matrix(const CochainComplex& cc, int i, Enveloping& env);

/// The natural projection U_{-r}^* (x) V_0 -> Cartan component of S^r g_{-1,j}^* (x) V_0.
struct NaturalProjection {
  Matrix restriction;  // U_{-r}^* (x) V_0 -> S^r g_{-1,j}^* (x) V_0, by symmetrisation
  Matrix projector;    // idempotent onto the Cartan component of S^r g_{-1,j}^* (x) V_0
  Matrix matrix;       // projector * restriction
  /// Levi generator actions on source and target, same order.
  std::vector<Matrix> source_action, target_action;
  IntWeight cartan_weight;  // Levi highest weight of the Cartan component
  BigInt cartan_dim;
};

NaturalProjection natural_projection(const CochainComplex& cc, int r, std::size_t node, Enveloping& env);

/// One named check with expected and observed values.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
  std::string detail;
  double seconds = 0;
};

std::vector<CheckResult> verify_phi_ranks(const CochainComplex& cc, const std::map<std::size_t, int>& orders,
                                          Enveloping& env);
CheckResult splitting_symbol_check(const CochainComplex& cc, const HodgeData& hd, int j);
CheckResult exactness_check(const CochainComplex& cc, int r);

/// Everything the verifier checks for one (grading, V) pair.
struct CaseReport {
  std::string name;
  IntWeight v_weight;
  BigInt dim_v;
  std::size_t h0 = 0, h1 = 0;
  std::map<int, std::size_t> h1_profile;
  CohomologyReport kostant;
  GradingDecomposition grading;
  std::vector<CheckResult> checks;
  bool pass() const;
};

struct CaseOptions {
  bool splitting = true;
  bool phi = true;
  std::size_t size_cap = default_size_cap();
};

CaseReport verify_case(const StructureConstants& sc, const ParabolicGrading& g, const IntWeight& v_weight,
                       const CaseOptions& options = {});

}  // namespace parabolica

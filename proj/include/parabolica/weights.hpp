#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "parabolica/parabolic_grading.hpp"
#include "parabolica/root_system.hpp"

namespace parabolica {

enum class Scope { Ambient, Levi };

/// Dominant integral weight labelling an irreducible module, either of g or of
/// the Levi semisimple part (coordinates on uncrossed nodes only).
struct IrrepLabel {
  Scope scope = Scope::Ambient;
  IntWeight weight;
  bool operator==(const IrrepLabel&) const = default;
};

/// weight -> multiplicity
using WeightTable = std::map<IntWeight, long>;
/// highest weight -> multiplicity
using Decomposition = std::map<IntWeight, long>;

/// Product formula. Throws InputError unless lambda is dominant.
BigInt weyl_dim(const RootDatum& d, const IntWeight& lambda);

/// Freudenthal recursion on dominant weights, memoized by dominant
/// representative, then spread over Weyl orbits.
WeightTable freudenthal_multiplicities(const RootDatum& d, const IntWeight& lambda);
/// Multiplicities of the dominant weights only.
WeightTable dominant_multiplicities(const RootDatum& d, const IntWeight& lambda);

/// Klimyk: push b + nu + rho into the dominant chamber for every weight nu of a.
Decomposition tensor_decompose(const RootDatum& d, const IntWeight& a, const IntWeight& b);
/// Label form; throws InputError on scope mismatch.
Decomposition tensor_decompose(const RootDatum& d, const IrrepLabel& a, const IrrepLabel& b);

IrrepLabel cartan_product_label(const IrrepLabel& a, const IrrepLabel& b);

/// Simple-root coordinates of top - w (integral when w lies below top).
std::vector<long> root_depth(const RootDatum& d, const IntWeight& top, const IntWeight& w);

/// Node -> order r_j. Missing crossed nodes default to 1.
using Orders = std::map<std::size_t, int>;

/// Highest weight of the prolongation module with H^0 = E and H^1 built from
/// the given orders. e_levi is the highest weight of E (Levi scope).
IntWeight construct_V(const ParabolicGrading& g, const IntWeight& e_levi, const Orders& orders);

struct H0Entry {
  IntWeight levi_weight;
  BigInt dim;
};

struct H1Entry {
  std::size_t node = 0;
  IntWeight levi_weight;
  BigInt dim;
  int grading_degree = 0;
  /// g_0 highest weight in full coordinates, inside g_-^* (x) V.
  IntWeight full_weight;
};

struct CohomologyReport {
  H0Entry h0;
  std::vector<H1Entry> h1;
};

H0Entry kostant_h0(const ParabolicGrading& g, const IntWeight& v_weight);
std::vector<H1Entry> kostant_h1(const ParabolicGrading& g, const IntWeight& v_weight);
CohomologyReport kostant_cohomology(const ParabolicGrading& g, const IntWeight& v_weight);

struct GradingDecomposition {
  std::vector<long> dims;  // dim V_0, ..., dim V_N
  int N = 0;
  /// Eigenvalue of the grading element on V_0.
  Rational bottom;
};

GradingDecomposition grading_decomposition(const ParabolicGrading& g, const IntWeight& v_weight);
GradingDecomposition grading_decomposition(const ParabolicGrading& g, const WeightTable& table);

struct SolutionBound {
  IntWeight v_weight;
  BigInt bound;
  int N = 0;
};

SolutionBound solution_space_bound(const ParabolicGrading& g, const IntWeight& e_levi, const Orders& orders);

/// Closed form for contact gradings of C_{n+1} with E = S^t(g_{-1}^*).
BigInt contact_bound_closed_form(int n, int r, int t);

/// Apply Levi reflections until the weight is dominant on uncrossed nodes.
IntWeight levi_dominant(const ParabolicGrading& g, IntWeight x);

/// Decomposition of a g_0-character (full weights) into g_0-irreducibles,
/// keyed by full highest weight.
Decomposition g0_decompose(const ParabolicGrading& g, WeightTable character);

/// Full g_0-character of g_-^* (x) V.
WeightTable cochain1_character(const ParabolicGrading& g, const WeightTable& v_table);

}  // namespace parabolica

#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "parabolica/linalg/sparse_matrix.hpp"
#include "parabolica/parabolic_grading.hpp"
#include "parabolica/root_system.hpp"

namespace parabolica {

/// Chevalley basis of g with integer structure constants.
///
/// Basis order: h_1..h_n (simple coroots), then x_b for the positive roots b
/// in root order, then x_{-b} in the same order.
///
/// Sign convention: root vectors are built along chains
///   y_b = [e_i, y_{b - a_i}],  z_b = [f_i, z_{b - a_i}]
/// with i the smallest node such that b - a_i is a root, then rescaled so that
/// [x_b, x_{-b}] = h_b and x_{-b} = -w(x_b) for the Chevalley involution w.
class StructureConstants {
 public:
  using Term = std::pair<std::size_t, std::int64_t>;

  StructureConstants() = default;
  /// Builds the table from the adjoint module and checks Jacobi on all triples.
  static StructureConstants build(const RootDatum& d);

  const RootDatum& datum() const { return datum_; }
  std::size_t rank() const { return datum_.rank(); }
  std::size_t dim() const { return weights_.size(); }
  std::size_t num_positive() const { return datum_.num_positive_roots(); }

  std::size_t h_index(std::size_t i) const { return i; }
  std::size_t pos_index(std::size_t k) const { return rank() + k; }
  std::size_t neg_index(std::size_t k) const { return rank() + num_positive() + k; }
  /// Basis index of x_r for a (positive or negative) root r.
  std::size_t root_vector_index(const Root& r) const;

  /// Root-lattice weight of a basis element (zero for the Cartan part).
  const Root& weight(std::size_t a) const { return weights_[a]; }
  bool is_cartan(std::size_t a) const { return a < rank(); }

  /// [a, b] as a sparse integer combination, sorted by index.
  const std::vector<Term>& bracket(std::size_t a, std::size_t b) const { return table_[a * dim() + b]; }

  /// Chain decomposition of positive root k: (node i, parent root index) or
  /// (node i, npos) for simple roots.
  const std::vector<std::pair<std::size_t, std::size_t>>& chains() const { return chains_; }
  /// x_b = y_b / scale[k], x_{-b} = -(-1)^{ht b} z_b / scale[k]
  const std::vector<Rational>& chain_scale() const { return scale_; }

  /// Coefficients of the coroot h_b in the simple coroots.
  Vector coroot(std::size_t k) const;

  /// Exhaustive Jacobi check; throws VerificationError on failure.
  void check_jacobi() const;

 private:
  RootDatum datum_;
  std::vector<Root> weights_;
  std::vector<std::vector<Term>> table_;
  std::vector<std::pair<std::size_t, std::size_t>> chains_;
  std::vector<Rational> scale_;
};

/// Configured dimension cap: PARABOLICA_SIZE_CAP if set, else 400.
std::size_t default_size_cap();

/// Explicit irreducible highest-weight module.
struct ModuleModel {
  IntWeight label;
  /// Weight of each basis vector (fundamental coordinates).
  std::vector<IntWeight> weights;
  /// Action of every basis element of g, indexed like StructureConstants.
  std::vector<SparseMatrix> action;

  std::size_t dim() const { return weights.size(); }
  const SparseMatrix& rho(std::size_t a) const { return action[a]; }
  /// Grading-element eigenvalue of each basis vector, shifted so the minimum is 0.
  std::vector<int> grading_tags(const ParabolicGrading& g) const;
  /// [rho(a), rho(b)] = rho([a, b]) for every basis pair; throws VerificationError.
  void check_brackets(const StructureConstants& sc) const;
};

/// Lowering operators applied level by level to a highest-weight vector;
/// linear dependence is detected through the raising operators, which is the
/// quotient by the radical of the contravariant form. Throws SizeCapError.
ModuleModel highest_weight_module(const StructureConstants& sc, const IntWeight& lambda,
                                  std::size_t size_cap = default_size_cap());

namespace detail {

/// Basis weights plus e_i and f_i matrices of L(lambda), built from the
/// Cartan matrix alone.
struct RawModule {
  std::vector<IntWeight> weights;
  std::vector<SparseMatrix> e;
  std::vector<SparseMatrix> f;
};

RawModule build_raw_module(const RootDatum& d, const IntWeight& lambda);

}  // namespace detail

}  // namespace parabolica

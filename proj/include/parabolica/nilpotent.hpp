#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "parabolica/chevalley.hpp"
#include "parabolica/parabolic_grading.hpp"

namespace parabolica {

/// Sparse linear combination of generator indices.
using Combination = std::vector<std::pair<std::size_t, Rational>>;

/// The negative part g_- with its grading, bracket and the invariant-form
/// pairing with p_+.
///
/// Generators Y_a = x_{-b_a} for the positive roots b_a of positive
/// sigma-height, ordered by degree (degree-1 generators first), then by root
/// order. The dual generator of Y_a is Z_a = ((b_a, b_a) / 2) x_{b_a}, so that
/// B(Z_a, Y_b) = delta_ab for the invariant form with B(h, h') matching the
/// root inner product.
class NilpotentModel {
 public:
  NilpotentModel() = default;
  static NilpotentModel build(const StructureConstants& sc, const ParabolicGrading& g);

  std::size_t dim() const { return roots_.size(); }
  /// Degree t of generator a, meaning Y_a lies in g_{-t}.
  int degree(std::size_t a) const { return degrees_[a]; }
  int depth() const { return depth_; }
  /// Index of the positive root b_a in the datum.
  std::size_t root(std::size_t a) const { return roots_[a]; }
  /// Basis index of Y_a / Z_a among the StructureConstants basis.
  std::size_t lower_index(std::size_t a) const { return lower_[a]; }
  std::size_t upper_index(std::size_t a) const { return upper_[a]; }
  /// Z_a = pairing_scale(a) * x_{b_a}
  const Rational& pairing_scale(std::size_t a) const { return scale_[a]; }

  /// [Y_a, Y_b] in the Y basis.
  const Combination& bracket(std::size_t a, std::size_t b) const { return bracket_[a * dim() + b]; }
  /// [Z_a, Z_b] in the Z basis.
  const Combination& upper_bracket(std::size_t a, std::size_t b) const { return upper_bracket_[a * dim() + b]; }

  /// Generators spanning the degree -1 component attached to crossed node j.
  std::vector<std::size_t> component(std::size_t node) const;
  /// Generators of degree t.
  std::vector<std::size_t> of_degree(int t) const;

  /// Pairing matrix B(Z_a, Y_b) restricted to degree t (identity by construction).
  Matrix pairing_matrix(int t) const;

  /// Lambda^2 g_{-1} -> g_{-2} has full rank (only meaningful for contact gradings).
  bool heisenberg_nondegenerate() const;

  const ParabolicGrading& grading() const { return grading_; }

  /// Levi root pair: basis indices of x_g and x_{-g}, and (g, g) / 2.
  struct LeviRoot {
    std::size_t raising = 0;
    std::size_t lowering = 0;
    Rational half_norm;
  };
  /// Basis indices of h_i for the uncrossed nodes.
  const std::vector<std::size_t>& levi_cartan() const { return levi_cartan_; }
  const std::vector<LeviRoot>& levi_roots() const { return levi_roots_; }
  /// Basis indices of all elements of the Levi semisimple part
  /// (Cartan first, then raising, then lowering).
  std::vector<std::size_t> levi_elements() const;
  /// ad(a) on g_- in the Y basis, for a in the degree-0 part; column b is [a, Y_b].
  const Matrix& ad(std::size_t basis_index) const;

 private:
  ParabolicGrading grading_;
  std::vector<std::size_t> roots_;
  std::vector<int> degrees_;
  std::vector<std::size_t> lower_, upper_;
  std::vector<Rational> scale_;
  std::vector<Combination> bracket_, upper_bracket_;
  int depth_ = 0;
  std::vector<std::size_t> levi_cartan_;
  std::vector<LeviRoot> levi_roots_;
  std::map<std::size_t, Matrix> ad_;
};

/// Word over the generators; a PBW monomial is a nondecreasing word.
using Word = std::vector<std::size_t>;
/// Element of U(g_-) in the PBW basis.
using UElement = std::map<Word, Rational>;

struct PBWBasis {
  int degree = 0;
  std::vector<Word> monomials;
};

/// Monomials of weighted degree i, longest first, then lexicographic.
PBWBasis pbw_basis(const NilpotentModel& nm, int i);

/// Straightening and the anti-automorphisms of U(g_-). Memoizes reductions,
/// so one instance must not be shared between threads.
class Enveloping {
 public:
  explicit Enveloping(const NilpotentModel& nm) : nm_(&nm) {}

  /// Any word rewritten in PBW order.
  const UElement& normal_order(const Word& w);
  UElement normal_order(const UElement& x);
  /// (X_1 ... X_p)^T = (-1)^p X_p ... X_1, in PBW order.
  UElement transpose(const Word& w);
  UElement transpose(const UElement& x);
  /// Average over all orderings of the factors, in PBW order.
  UElement symmetrise(const Word& multiset);
  UElement multiply(const UElement& a, const UElement& b);

 private:
  const NilpotentModel* nm_;
  std::map<Word, UElement> memo_;
};

int word_degree(const NilpotentModel& nm, const Word& w);

/// u . v where the rightmost factor of u acts first.
Vector u_action(const ModuleModel& mm, const NilpotentModel& nm, const Word& monomial, const Vector& v);
Vector u_action(const ModuleModel& mm, const NilpotentModel& nm, const UElement& u, const Vector& v);

}  // namespace parabolica

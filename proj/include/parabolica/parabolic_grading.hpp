#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "parabolica/root_system.hpp"

namespace parabolica {

/// Irreducible Levi-summand of the degree -1 part attached to a crossed node.
struct LeviIrrepComponent {
  std::size_t node = 0;      // crossed node, 0-based
  IntWeight levi_weight;     // coordinates on the uncrossed nodes
  BigInt dim;
};

/// |k|-grading of g from a set of crossed nodes (0-based in this API).
class ParabolicGrading {
 public:
  ParabolicGrading() = default;
  /// Throws InputError on an empty or out-of-range node set.
  static ParabolicGrading build(const RootDatum& d, std::vector<std::size_t> sigma);

  const RootDatum& datum() const { return datum_; }
  const std::vector<std::size_t>& sigma() const { return sigma_; }
  bool crossed(std::size_t node) const { return crossed_[node]; }
  /// Uncrossed nodes in increasing order; the Levi semisimple subdiagram.
  const std::vector<std::size_t>& levi_nodes() const { return levi_nodes_; }
  const RootDatum& levi_datum() const { return levi_; }
  /// Position of a crossed node inside sigma().
  std::size_t sigma_position(std::size_t node) const;

  int depth() const { return depth_; }
  /// dim g_i for -depth <= i <= depth, zero outside.
  std::size_t dim(int i) const;
  std::size_t center_dim() const { return sigma_.size(); }
  /// Depth 2 with one-dimensional g_{-2}.
  bool is_contact() const { return depth_ == 2 && dim(-2) == 1; }

  /// Sum of the coordinates at crossed nodes. Throws InputError for non-roots.
  int sigma_height(const Root& r) const;
  /// Coweight coordinates of the grading element: a_i(e) = 1 on crossed nodes.
  const std::vector<int>& grading_element() const { return element_; }
  /// Eigenvalue of the grading element on a weight space.
  Rational eigenvalue(const Weight& x) const;
  Rational eigenvalue(const IntWeight& x) const;

  IntWeight restrict_to_levi(const IntWeight& x) const;
  /// Levi coordinates extended by zero on crossed nodes.
  IntWeight extend_from_levi(const IntWeight& levi) const;

  std::vector<LeviIrrepComponent> g_minus1_decomposition() const;

  BigInt dim_U_minus(int i) const;
  BigInt weighted_jet_fiber_dim(int r, const BigInt& dim_e) const;

 private:
  RootDatum datum_;
  RootDatum levi_;
  std::vector<std::size_t> sigma_;
  std::vector<bool> crossed_;
  std::vector<std::size_t> levi_nodes_;
  std::vector<int> element_;
  int depth_ = 0;
  std::map<int, std::size_t> dims_;
  Vector element_weight_;  // e paired with fundamental weights
};

}  // namespace parabolica

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "parabolica/linalg/matrix.hpp"

namespace parabolica {

/// Simple Lie algebra type, e.g. {'C', 3}. Node numbering is Bourbaki.
struct LieType {
  char family = 'A';
  int rank = 1;

  /// Accepts "C3", "c3", "E8" ...; throws InputError.
  static LieType parse(const std::string& text);
  /// Throws InputError when the rank is not admissible for the family.
  void validate() const;
  std::string name() const;
  bool operator==(const LieType&) const = default;
};

/// Simple-root coordinates of a root.
using Root = std::vector<int>;
/// Fundamental-weight coordinates.
using Weight = Vector;
/// Integral weight in fundamental-weight coordinates.
using IntWeight = std::vector<long>;

Weight to_weight(const IntWeight& w);
/// Throws InputError when some coordinate is not an integer.
IntWeight to_int_weight(const Weight& w);

/// Root data of a (possibly reducible, possibly empty) Dynkin diagram of
/// finite type. Built from the symmetric form on simple roots; short roots of
/// a simple factor have squared length 2.
///
/// Cartan convention: A(i,j) = 2 (a_i, a_j) / (a_i, a_i), so that the pairing
/// of a weight x with the coroot of a_i is its i-th fundamental coordinate and
/// the simple root a_j has fundamental coordinates given by column j of A.
class RootDatum {
 public:
  RootDatum() = default;

  static RootDatum build(const LieType& t);
  /// From the Gram matrix of the simple roots.
  static RootDatum from_form(const Matrix& simple_form);

  /// Subdiagram on the given nodes, keeping root lengths.
  RootDatum restrict(const std::vector<std::size_t>& nodes) const;

  const std::optional<LieType>& lie_type() const { return type_; }
  std::size_t rank() const { return cartan_.size(); }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  int cartan(std::size_t i, std::size_t j) const { return cartan_[i][j]; }
  /// (a_i, a_i) / 2, making diag(d) * A symmetric.
  const Vector& symmetrizer() const { return symmetrizer_; }
  const Matrix& simple_form() const { return form_; }
  const Matrix& inverse_cartan() const { return inverse_cartan_; }

  /// Positive roots sorted by height, then coordinates in descending lex order.
  const std::vector<Root>& positive_roots() const { return positive_; }
  std::size_t num_positive_roots() const { return positive_.size(); }
  std::size_t dimension() const { return rank() + 2 * positive_.size(); }
  /// Index into positive_roots(), if any.
  std::optional<std::size_t> positive_root_index(const Root& r) const;
  /// Index of the simple root a_i in positive_roots().
  std::size_t simple_root_index(std::size_t i) const { return simple_index_[i]; }
  bool is_root(const Root& r) const;

  const Weight& rho() const { return rho_; }
  Weight fundamental_weight(std::size_t i) const;

  /// Fundamental coordinates of a root-lattice element.
  Weight root_to_weight(const Root& r) const;
  IntWeight root_to_int_weight(const Root& r) const;
  /// Simple-root coordinates of an arbitrary weight.
  Vector weight_to_root_coords(const Weight& x) const;
  /// <r, a_i^vee> = sum_j r_j A(i, j)
  int coroot_pairing(const Root& r, std::size_t i) const;

  Rational inner_product(const Weight& x, const Weight& y) const;
  Rational root_norm2(const Root& r) const;
  Rational root_inner(const Root& a, const Root& b) const;

  /// s_i(x) = x - x_i a_i. Throws InputError when i is out of range.
  Weight simple_reflection(std::size_t i, const Weight& x) const;
  IntWeight simple_reflection(std::size_t i, const IntWeight& x) const;
  Root reflect_root(std::size_t i, const Root& r) const;

  bool is_dominant(const Weight& x) const;
  bool is_dominant(const IntWeight& x) const;
  /// Dominant element of the Weyl orbit, and the number of reflections used
  /// (its parity is the sign of the Weyl element).
  IntWeight to_dominant(IntWeight x, std::size_t* reflections = nullptr) const;

  /// Highest weight of the dual representation, -w0(x). Throws InputError
  /// unless x is dominant.
  Weight dual_weight(const Weight& x) const;
  IntWeight dual_weight(const IntWeight& x) const;

 private:
  void finish();

  std::optional<LieType> type_;
  std::vector<std::vector<int>> cartan_;
  Vector symmetrizer_;
  Matrix form_;
  Matrix inverse_cartan_;
  Matrix weight_form_;  // (w_i, w_j)
  std::vector<Root> positive_;
  std::map<Root, std::size_t> root_index_;
  std::vector<std::size_t> simple_index_;
  Weight rho_;
};

/// Number of positive roots of a simple type.
std::size_t classical_positive_root_count(const LieType& t);

}  // namespace parabolica

#include "parabolica/parabolic_grading.hpp"

#include <algorithm>

#include "parabolica/errors.hpp"
#include "parabolica/weights.hpp"

namespace parabolica {

ParabolicGrading ParabolicGrading::build(const RootDatum& d, std::vector<std::size_t> sigma) {
  if (sigma.empty()) throw InputError("grading: crossed node set is empty");
  std::sort(sigma.begin(), sigma.end());
  if (std::adjacent_find(sigma.begin(), sigma.end()) != sigma.end())
    throw InputError("grading: repeated crossed node");
  if (sigma.back() >= d.rank()) throw InputError("grading: crossed node out of range");

  ParabolicGrading g;
  g.datum_ = d;
  g.sigma_ = sigma;
  g.crossed_.assign(d.rank(), false);
  g.element_.assign(d.rank(), 0);
  for (auto s : sigma) {
    g.crossed_[s] = true;
    g.element_[s] = 1;
  }
  for (std::size_t i = 0; i < d.rank(); ++i)
    if (!g.crossed_[i]) g.levi_nodes_.push_back(i);
  g.levi_ = d.restrict(g.levi_nodes_);

  // e(w_k) = sum over crossed i of (A^-1)_{ik}
  g.element_weight_.assign(d.rank(), Rational(0));
  for (std::size_t k = 0; k < d.rank(); ++k)
    for (auto i : sigma) g.element_weight_[k] += d.inverse_cartan()(i, k);

  g.dims_[0] = d.rank();
  for (const Root& r : d.positive_roots()) {
    const int h = g.sigma_height(r);
    g.depth_ = std::max(g.depth_, h);
    g.dims_[h] += h == 0 ? 2 : 1;
    if (h > 0) g.dims_[-h] += 1;
  }
  return g;
}

std::size_t ParabolicGrading::sigma_position(std::size_t node) const {
  auto it = std::find(sigma_.begin(), sigma_.end(), node);
  if (it == sigma_.end()) throw InputError("node is not crossed");
  return static_cast<std::size_t>(it - sigma_.begin());
}

std::size_t ParabolicGrading::dim(int i) const {
  auto it = dims_.find(i);
  return it == dims_.end() ? 0 : it->second;
}

int ParabolicGrading::sigma_height(const Root& r) const {
  if (!datum_.is_root(r)) throw InputError("sigma_height: not a root");
  int h = 0;
  for (auto s : sigma_) h += r[s];
  return h;
}

Rational ParabolicGrading::eigenvalue(const Weight& x) const {
  Rational s;
  for (std::size_t k = 0; k < x.size(); ++k) s += element_weight_[k] * x[k];
  return s;
}

Rational ParabolicGrading::eigenvalue(const IntWeight& x) const {
  Rational s;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k] != 0) s += element_weight_[k] * x[k];
  return s;
}

IntWeight ParabolicGrading::restrict_to_levi(const IntWeight& x) const {
  IntWeight out(levi_nodes_.size());
  for (std::size_t k = 0; k < levi_nodes_.size(); ++k) out[k] = x[levi_nodes_[k]];
  return out;
}

IntWeight ParabolicGrading::extend_from_levi(const IntWeight& levi) const {
  if (levi.size() != levi_nodes_.size()) throw InputError("Levi weight has wrong length");
  IntWeight out(datum_.rank(), 0);
  for (std::size_t k = 0; k < levi_nodes_.size(); ++k) out[levi_nodes_[k]] = levi[k];
  return out;
}

std::vector<LeviIrrepComponent> ParabolicGrading::g_minus1_decomposition() const {
  std::vector<LeviIrrepComponent> out;
  for (auto j : sigma_) {
    LeviIrrepComponent c;
    c.node = j;
    c.levi_weight.resize(levi_nodes_.size());
    for (std::size_t k = 0; k < levi_nodes_.size(); ++k) c.levi_weight[k] = -datum_.cartan(levi_nodes_[k], j);
    c.dim = weyl_dim(levi_, c.levi_weight);
    std::size_t count = 0;
    for (const Root& r : datum_.positive_roots())
      if (r[j] == 1 && sigma_height(r) == 1) ++count;
    if (c.dim != count) throw VerificationError("g_minus1_decomposition", "component dimension mismatch");
    out.push_back(std::move(c));
  }
  return out;
}

BigInt ParabolicGrading::dim_U_minus(int i) const {
  if (i < 0) return 0;
  // coefficients of prod_j (1 - q^j)^(-dim g_{-j}) up to q^i
  std::vector<BigInt> c(static_cast<std::size_t>(i) + 1);
  c[0] = 1;
  for (int j = 1; j <= depth_; ++j)
    for (std::size_t f = 0; f < dim(-j); ++f)
      for (int n = j; n <= i; ++n) c[n] += c[n - j];
  return c[i];
}

BigInt ParabolicGrading::weighted_jet_fiber_dim(int r, const BigInt& dim_e) const {
  BigInt s = 0;
  for (int i = 0; i <= r; ++i) s += dim_U_minus(i);
  return dim_e * s;
}

}  // namespace parabolica

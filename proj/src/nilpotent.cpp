#include "parabolica/nilpotent.hpp"

#include <algorithm>
#include <functional>

#include "parabolica/errors.hpp"

namespace parabolica {

NilpotentModel NilpotentModel::build(const StructureConstants& sc, const ParabolicGrading& g) {
  const RootDatum& d = sc.datum();
  if (!(d.cartan() == g.datum().cartan())) throw InputError("nilpotent_model: grading and constants disagree");
  NilpotentModel nm;
  nm.grading_ = g;
  std::vector<std::pair<int, std::size_t>> order;
  for (std::size_t k = 0; k < d.num_positive_roots(); ++k) {
    const int h = g.sigma_height(d.positive_roots()[k]);
    if (h > 0) order.emplace_back(h, k);
  }
  std::sort(order.begin(), order.end());
  std::vector<std::size_t> generator_of(sc.dim(), static_cast<std::size_t>(-1));
  for (const auto& [h, k] : order) {
    generator_of[sc.neg_index(k)] = nm.roots_.size();
    nm.roots_.push_back(k);
    nm.degrees_.push_back(h);
    nm.lower_.push_back(sc.neg_index(k));
    nm.upper_.push_back(sc.pos_index(k));
    nm.scale_.push_back(d.root_norm2(d.positive_roots()[k]) / 2);
    nm.depth_ = std::max(nm.depth_, h);
  }
  const std::size_t n = nm.roots_.size();
  std::vector<std::size_t> upper_of(sc.dim(), static_cast<std::size_t>(-1));
  for (std::size_t a = 0; a < n; ++a) upper_of[nm.upper_[a]] = a;
  nm.bracket_.assign(n * n, {});
  nm.upper_bracket_.assign(n * n, {});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (const auto& [t, c] : sc.bracket(nm.lower_[a], nm.lower_[b])) {
        const std::size_t y = generator_of[t];
        if (y == static_cast<std::size_t>(-1)) throw VerificationError("nilpotent_model", "bracket leaves g_-");
        nm.bracket_[a * n + b].emplace_back(y, Rational(static_cast<long>(c)));
      }
      for (const auto& [t, c] : sc.bracket(nm.upper_[a], nm.upper_[b])) {
        const std::size_t z = upper_of[t];
        if (z == static_cast<std::size_t>(-1)) throw VerificationError("nilpotent_model", "bracket leaves p_+");
        nm.upper_bracket_[a * n + b].emplace_back(z, nm.scale_[a] * nm.scale_[b] * static_cast<long>(c) / nm.scale_[z]);
      }
      std::sort(nm.bracket_[a * n + b].begin(), nm.bracket_[a * n + b].end());
      std::sort(nm.upper_bracket_[a * n + b].begin(), nm.upper_bracket_[a * n + b].end());
      for (const auto& [y, c] : nm.bracket_[a * n + b])
        if (nm.degrees_[y] != nm.degrees_[a] + nm.degrees_[b])
          throw VerificationError("nilpotent_model", "bracket does not respect the grading");
    }

  // Degree-zero part acting on g_-.
  std::vector<std::size_t> degree_zero;
  for (std::size_t i = 0; i < d.rank(); ++i) {
    degree_zero.push_back(sc.h_index(i));
    if (!g.crossed(i)) nm.levi_cartan_.push_back(sc.h_index(i));
  }
  for (std::size_t k = 0; k < d.num_positive_roots(); ++k) {
    const Root& gamma = d.positive_roots()[k];
    if (g.sigma_height(gamma) != 0) continue;
    degree_zero.push_back(sc.pos_index(k));
    degree_zero.push_back(sc.neg_index(k));
    nm.levi_roots_.push_back({sc.pos_index(k), sc.neg_index(k), d.root_norm2(gamma) / 2});
  }
  for (auto a : degree_zero) {
    Matrix m(n, n);
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& [t, c] : sc.bracket(a, nm.lower_[b])) {
        const std::size_t y = generator_of[t];
        if (y == static_cast<std::size_t>(-1) || nm.degrees_[y] != nm.degrees_[b])
          throw VerificationError("nilpotent_model", "degree-zero action leaves the graded piece");
        m(y, b) = static_cast<long>(c);
      }
    nm.ad_.emplace(a, std::move(m));
  }
  return nm;
}

std::vector<std::size_t> NilpotentModel::levi_elements() const {
  std::vector<std::size_t> out = levi_cartan_;
  for (const auto& r : levi_roots_) out.push_back(r.raising);
  for (const auto& r : levi_roots_) out.push_back(r.lowering);
  return out;
}

const Matrix& NilpotentModel::ad(std::size_t basis_index) const {
  auto it = ad_.find(basis_index);
  if (it == ad_.end()) throw InputError("ad: element is not in the degree-zero part");
  return it->second;
}

std::vector<std::size_t> NilpotentModel::component(std::size_t node) const {
  const RootDatum& d = grading_.datum();
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < dim(); ++a)
    if (degrees_[a] == 1 && d.positive_roots()[roots_[a]][node] == 1) out.push_back(a);
  return out;
}

std::vector<std::size_t> NilpotentModel::of_degree(int t) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < dim(); ++a)
    if (degrees_[a] == t) out.push_back(a);
  return out;
}

Matrix NilpotentModel::pairing_matrix(int t) const {
  // B(x_b, x_{-c}) = delta_bc * 2 / (b, b) in the normalization of the root form.
  const RootDatum& d = grading_.datum();
  const auto idx = of_degree(t);
  Matrix m(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j)
      if (roots_[idx[i]] == roots_[idx[j]])
        m(i, j) = scale_[idx[i]] * 2 / d.root_norm2(d.positive_roots()[roots_[idx[i]]]);
  return m;
}

bool NilpotentModel::heisenberg_nondegenerate() const {
  const auto one = of_degree(1), two = of_degree(2);
  if (two.size() != 1) return false;
  Matrix m(one.size(), one.size());
  for (std::size_t i = 0; i < one.size(); ++i)
    for (std::size_t j = 0; j < one.size(); ++j)
      for (const auto& [y, c] : bracket(one[i], one[j]))
        if (y == two[0]) m(i, j) = c;
  return rank(m) == one.size();
}

int word_degree(const NilpotentModel& nm, const Word& w) {
  int s = 0;
  for (auto a : w) s += nm.degree(a);
  return s;
}

PBWBasis pbw_basis(const NilpotentModel& nm, int i) {
  PBWBasis out;
  out.degree = i;
  if (i < 0) return out;
  Word current;
  std::function<void(std::size_t, int)> extend = [&](std::size_t from, int left) {
    if (left == 0) {
      out.monomials.push_back(current);
      return;
    }
    for (std::size_t a = from; a < nm.dim(); ++a) {
      if (nm.degree(a) > left) continue;
      current.push_back(a);
      extend(a, left - nm.degree(a));
      current.pop_back();
    }
  };
  extend(0, i);
  std::stable_sort(out.monomials.begin(), out.monomials.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  return out;
}

namespace {

void accumulate(UElement& into, const UElement& from, const Rational& s) {
  for (const auto& [w, c] : from) {
    Rational& slot = into[w];
    slot += s * c;
    if (sgn(slot) == 0) into.erase(w);
  }
}

}  // namespace

const UElement& Enveloping::normal_order(const Word& w) {
  if (auto it = memo_.find(w); it != memo_.end()) return it->second;
  UElement result;
  std::size_t k = 0;
  while (k + 1 < w.size() && w[k] <= w[k + 1]) ++k;
  if (k + 1 >= w.size()) {
    result[w] = 1;
  } else {
    // Y_b Y_a = Y_a Y_b + [Y_b, Y_a]
    Word swapped = w;
    std::swap(swapped[k], swapped[k + 1]);
    accumulate(result, normal_order(swapped), 1);
    for (const auto& [c, coef] : nm_->bracket(w[k], w[k + 1])) {
      Word shorter(w.begin(), w.begin() + static_cast<long>(k));
      shorter.push_back(c);
      shorter.insert(shorter.end(), w.begin() + static_cast<long>(k) + 2, w.end());
      accumulate(result, normal_order(shorter), coef);
    }
  }
  return memo_.emplace(w, std::move(result)).first->second;
}

UElement Enveloping::normal_order(const UElement& x) {
  UElement out;
  for (const auto& [w, c] : x) accumulate(out, normal_order(w), c);
  return out;
}

UElement Enveloping::transpose(const Word& w) {
  Word rev(w.rbegin(), w.rend());
  UElement out;
  accumulate(out, normal_order(rev), w.size() % 2 == 0 ? 1 : -1);
  return out;
}

UElement Enveloping::transpose(const UElement& x) {
  UElement out;
  for (const auto& [w, c] : x) accumulate(out, transpose(w), c);
  return out;
}

UElement Enveloping::symmetrise(const Word& multiset) {
  Word w = multiset;
  std::sort(w.begin(), w.end());
  UElement sum;
  long count = 0;
  do {
    accumulate(sum, normal_order(w), 1);
    ++count;
  } while (std::next_permutation(w.begin(), w.end()));
  for (auto& [word, c] : sum) c /= count;
  return sum;
}

UElement Enveloping::multiply(const UElement& a, const UElement& b) {
  UElement out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      accumulate(out, normal_order(w), ca * cb);
    }
  return out;
}

Vector u_action(const ModuleModel& mm, const NilpotentModel& nm, const Word& monomial, const Vector& v) {
  Vector out = v;
  for (auto it = monomial.rbegin(); it != monomial.rend(); ++it) out = mm.rho(nm.lower_index(*it)).apply(out);
  return out;
}

Vector u_action(const ModuleModel& mm, const NilpotentModel& nm, const UElement& u, const Vector& v) {
  Vector out(v.size());
  for (const auto& [w, c] : u) {
    const Vector part = u_action(mm, nm, w, v);
    for (std::size_t i = 0; i < out.size(); ++i)
      if (sgn(part[i]) != 0) out[i] += c * part[i];
  }
  return out;
}

}  // namespace parabolica

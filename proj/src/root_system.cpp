#include "parabolica/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "parabolica/errors.hpp"

namespace parabolica {

LieType LieType::parse(const std::string& text) {
  if (text.size() < 2) throw InputError("lie type: expected e.g. \"C3\", got \"" + text + "\"");
  LieType t;
  t.family = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  const std::string digits = text.substr(1);
  if (!std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }) ||
      digits.size() > 3)
    throw InputError("lie type: bad rank in \"" + text + "\"");
  t.rank = std::stoi(digits);
  t.validate();
  return t;
}

void LieType::validate() const {
  bool ok = false;
  switch (family) {
    case 'A': ok = rank >= 1; break;
    case 'B':
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 3; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: throw InputError(std::string("lie type: unknown family '") + family + "'");
  }
  if (!ok) throw InputError("lie type: rank " + std::to_string(rank) + " not admissible for family " + family);
}

std::string LieType::name() const { return std::string(1, family) + std::to_string(rank); }

std::size_t classical_positive_root_count(const LieType& t) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
  }
  return 0;
}

Weight to_weight(const IntWeight& w) {
  Weight out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[i];
  return out;
}

IntWeight to_int_weight(const Weight& w) {
  IntWeight out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!is_integer(w[i]) || !w[i].get_num().fits_slong_p()) throw InputError("weight is not integral");
    out[i] = w[i].get_num().get_si();
  }
  return out;
}

namespace {

// Squared lengths of simple roots and the Dynkin edges (1-based, Bourbaki).
struct Diagram {
  std::vector<int> lengths;
  std::vector<std::pair<int, int>> edges;
};

Diagram diagram_of(const LieType& t) {
  const int n = t.rank;
  Diagram d;
  d.lengths.assign(n, 2);
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) d.edges.emplace_back(i, i + 1);
  };
  switch (t.family) {
    case 'A': chain(1, n); break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) d.lengths[i] = 4;
      chain(1, n);
      break;
    case 'C':
      d.lengths[n - 1] = 4;
      chain(1, n);
      break;
    case 'D':
      chain(1, n - 1);
      d.edges.emplace_back(n - 2, n);
      break;
    case 'E':
      d.edges = {{1, 3}, {3, 4}, {4, 5}, {2, 4}};
      for (int i = 5; i < n; ++i) d.edges.emplace_back(i, i + 1);
      break;
    case 'F':
      d.lengths = {4, 4, 2, 2};
      chain(1, 4);
      break;
    case 'G':
      d.lengths = {2, 6};
      chain(1, 2);
      break;
  }
  return d;
}

bool height_then_desc_lex(const Root& a, const Root& b) {
  int ha = 0, hb = 0;
  for (int x : a) ha += x;
  for (int x : b) hb += x;
  if (ha != hb) return ha < hb;
  return a > b;
}

}  // namespace

RootDatum RootDatum::build(const LieType& t) {
  t.validate();
  const Diagram dia = diagram_of(t);
  const std::size_t n = static_cast<std::size_t>(t.rank);
  Matrix form(n, n);
  for (std::size_t i = 0; i < n; ++i) form(i, i) = dia.lengths[i];
  for (auto [a, b] : dia.edges) {
    const Rational v = Rational(-std::max(dia.lengths[a - 1], dia.lengths[b - 1]), 2);
    form(a - 1, b - 1) = v;
    form(b - 1, a - 1) = v;
  }
  RootDatum d = from_form(form);
  d.type_ = t;
  if (d.num_positive_roots() != classical_positive_root_count(t))
    throw VerificationError("root_count", t.name() + " closure gave " + std::to_string(d.num_positive_roots()));
  return d;
}

RootDatum RootDatum::from_form(const Matrix& simple_form) {
  const std::size_t n = simple_form.rows();
  if (simple_form.cols() != n) throw InputError("simple form must be square");
  RootDatum d;
  d.form_ = simple_form;
  d.symmetrizer_.resize(n);
  d.cartan_.assign(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(simple_form(i, i)) <= 0) throw InputError("simple roots must have positive length");
    d.symmetrizer_[i] = simple_form(i, i) / 2;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational a = 2 * simple_form(i, j) / simple_form(i, i);
      if (!is_integer(a)) throw InputError("simple form does not give an integral Cartan matrix");
      d.cartan_[i][j] = static_cast<int>(a.get_num().get_si());
      if (i != j && d.cartan_[i][j] > 0) throw InputError("Cartan matrix has a positive off-diagonal entry");
    }
  d.finish();
  return d;
}

void RootDatum::finish() {
  const std::size_t n = rank();
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = cartan_[i][j];
  try {
    inverse_cartan_ = inverse(a);
  } catch (const std::domain_error&) {
    throw InputError("Cartan matrix is not of finite type");
  }
  // (w_i, w_j) = d_i (A^-1)_{ij}
  weight_form_ = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) weight_form_(i, j) = symmetrizer_[i] * inverse_cartan_(i, j);

  // Closure: beta + a_i is a root iff q > 0 where q = p - <beta, a_i^vee>
  // and p is the length of the a_i-string below beta.
  std::set<Root> found;
  std::vector<Root> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    Root r(n, 0);
    r[i] = 1;
    found.insert(r);
    frontier.push_back(r);
  }
  const std::size_t limit = 1000;
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& beta : frontier) {
      for (std::size_t i = 0; i < n; ++i) {
        int p = 0;
        Root down = beta;
        while (true) {
          --down[i];
          if (!found.count(down)) break;
          ++p;
        }
        const int q = p - coroot_pairing(beta, i);
        if (q <= 0) continue;
        Root up = beta;
        ++up[i];
        if (found.insert(up).second) next.push_back(up);
      }
    }
    if (found.size() > limit) throw InputError("Cartan matrix is not of finite type");
    frontier = std::move(next);
  }
  positive_.assign(found.begin(), found.end());
  std::sort(positive_.begin(), positive_.end(), height_then_desc_lex);
  root_index_.clear();
  for (std::size_t k = 0; k < positive_.size(); ++k) root_index_[positive_[k]] = k;
  simple_index_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    Root r(n, 0);
    r[i] = 1;
    simple_index_[i] = root_index_.at(r);
  }
  rho_.assign(n, Rational(1));
}

RootDatum RootDatum::restrict(const std::vector<std::size_t>& nodes) const {
  for (auto i : nodes)
    if (i >= rank()) throw InputError("restrict: node out of range");
  return from_form(form_.block(nodes, nodes));
}

std::optional<std::size_t> RootDatum::positive_root_index(const Root& r) const {
  auto it = root_index_.find(r);
  if (it == root_index_.end()) return std::nullopt;
  return it->second;
}

bool RootDatum::is_root(const Root& r) const {
  if (r.size() != rank()) return false;
  if (root_index_.count(r)) return true;
  Root neg(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
  return root_index_.count(neg) > 0;
}

Weight RootDatum::fundamental_weight(std::size_t i) const {
  if (i >= rank()) throw InputError("fundamental_weight: node out of range");
  Weight w(rank());
  w[i] = 1;
  return w;
}

int RootDatum::coroot_pairing(const Root& r, std::size_t i) const {
  int s = 0;
  for (std::size_t j = 0; j < r.size(); ++j) s += r[j] * cartan_[i][j];
  return s;
}

IntWeight RootDatum::root_to_int_weight(const Root& r) const {
  IntWeight w(rank());
  for (std::size_t i = 0; i < rank(); ++i) w[i] = coroot_pairing(r, i);
  return w;
}

Weight RootDatum::root_to_weight(const Root& r) const { return to_weight(root_to_int_weight(r)); }

Vector RootDatum::weight_to_root_coords(const Weight& x) const { return inverse_cartan_ * x; }

Rational RootDatum::inner_product(const Weight& x, const Weight& y) const {
  if (x.size() != rank() || y.size() != rank()) throw InputError("inner_product: length mismatch");
  Rational s;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j)
      if (sgn(y[j]) != 0) s += x[i] * weight_form_(i, j) * y[j];
  }
  return s;
}

Rational RootDatum::root_inner(const Root& a, const Root& b) const {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (a[i] != 0 && b[j] != 0) s += a[i] * b[j] * form_(i, j);
  return s;
}

Rational RootDatum::root_norm2(const Root& r) const { return root_inner(r, r); }

Weight RootDatum::simple_reflection(std::size_t i, const Weight& x) const {
  if (i >= rank()) throw InputError("simple_reflection: node out of range");
  if (x.size() != rank()) throw InputError("simple_reflection: length mismatch");
  Weight y = x;
  const Rational c = x[i];
  for (std::size_t k = 0; k < rank(); ++k) y[k] -= c * cartan_[k][i];
  return y;
}

IntWeight RootDatum::simple_reflection(std::size_t i, const IntWeight& x) const {
  if (i >= rank()) throw InputError("simple_reflection: node out of range");
  IntWeight y = x;
  const long c = x[i];
  for (std::size_t k = 0; k < rank(); ++k) y[k] -= c * cartan_[k][i];
  return y;
}

Root RootDatum::reflect_root(std::size_t i, const Root& r) const {
  Root out = r;
  out[i] -= coroot_pairing(r, i);
  return out;
}

bool RootDatum::is_dominant(const Weight& x) const {
  return std::all_of(x.begin(), x.end(), [](const Rational& q) { return sgn(q) >= 0; });
}

bool RootDatum::is_dominant(const IntWeight& x) const {
  return std::all_of(x.begin(), x.end(), [](long v) { return v >= 0; });
}

IntWeight RootDatum::to_dominant(IntWeight x, std::size_t* reflections) const {
  std::size_t count = 0;
  while (true) {
    std::size_t i = 0;
    while (i < x.size() && x[i] >= 0) ++i;
    if (i == x.size()) break;
    x = simple_reflection(i, x);
    ++count;
  }
  if (reflections) *reflections = count;
  return x;
}

Weight RootDatum::dual_weight(const Weight& x) const {
  if (x.size() != rank() || !is_dominant(x)) throw InputError("dual_weight: weight is not dominant");
  Weight y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = -x[i];
  while (true) {
    std::size_t i = 0;
    while (i < y.size() && sgn(y[i]) >= 0) ++i;
    if (i == y.size()) return y;
    y = simple_reflection(i, y);
  }
}

IntWeight RootDatum::dual_weight(const IntWeight& x) const {
  if (x.size() != rank() || !is_dominant(x)) throw InputError("dual_weight: weight is not dominant");
  IntWeight y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = -x[i];
  return to_dominant(std::move(y));
}

}  // namespace parabolica

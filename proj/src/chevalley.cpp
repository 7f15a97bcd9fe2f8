#include "parabolica/chevalley.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

#include "parabolica/errors.hpp"
#include "parabolica/weights.hpp"

namespace parabolica {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

IntWeight minus(IntWeight a, const IntWeight& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

IntWeight plus(IntWeight a, const IntWeight& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

int root_height(const Root& r) {
  int h = 0;
  for (int x : r) h += x;
  return h;
}

// Chain for each positive root: smallest node i with b - a_i a positive root.
std::vector<std::pair<std::size_t, std::size_t>> root_chains(const RootDatum& d) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const Root& b : d.positive_roots()) {
    if (root_height(b) == 1) {
      std::size_t i = 0;
      while (b[i] == 0) ++i;
      out.emplace_back(i, npos);
      continue;
    }
    bool found = false;
    for (std::size_t i = 0; i < d.rank() && !found; ++i) {
      Root parent = b;
      --parent[i];
      if (auto k = d.positive_root_index(parent)) {
        out.emplace_back(i, *k);
        found = true;
      }
    }
    if (!found) throw VerificationError("root_chains", "root with no parent");
  }
  return out;
}

SparseMatrix diagonal(const std::vector<IntWeight>& weights, const Vector& coeffs) {
  SparseMatrix m(weights.size(), weights.size());
  for (std::size_t v = 0; v < weights.size(); ++v) {
    Rational x;
    for (std::size_t i = 0; i < coeffs.size(); ++i) x += coeffs[i] * weights[v][i];
    if (sgn(x) != 0) m.set_column(v, {{v, x}});
  }
  return m;
}

Rational sign_of_height(const Root& r) { return root_height(r) % 2 == 0 ? 1 : -1; }

// Chain root vectors y_b, z_b inside a module, in root order.
void chain_vectors(const RootDatum& d, const std::vector<std::pair<std::size_t, std::size_t>>& chains,
                   const detail::RawModule& raw, std::vector<SparseMatrix>& y, std::vector<SparseMatrix>& z) {
  y.clear();
  z.clear();
  for (std::size_t k = 0; k < d.num_positive_roots(); ++k) {
    const auto [i, parent] = chains[k];
    if (parent == npos) {
      y.push_back(raw.e[i]);
      z.push_back(raw.f[i]);
    } else {
      y.push_back(commutator(raw.e[i], y[parent]));
      z.push_back(commutator(raw.f[i], z[parent]));
    }
  }
}

std::vector<SparseMatrix> assemble_action(const StructureConstants& sc, const detail::RawModule& raw) {
  const RootDatum& d = sc.datum();
  std::vector<SparseMatrix> y, z;
  chain_vectors(d, sc.chains(), raw, y, z);
  std::vector<SparseMatrix> action(sc.dim());
  for (std::size_t i = 0; i < d.rank(); ++i) {
    Vector unit(d.rank());
    unit[i] = 1;
    action[sc.h_index(i)] = diagonal(raw.weights, unit);
  }
  for (std::size_t k = 0; k < d.num_positive_roots(); ++k) {
    const Rational& c = sc.chain_scale()[k];
    action[sc.pos_index(k)] = y[k].scaled(1 / c);
    action[sc.neg_index(k)] = z[k].scaled(-sign_of_height(d.positive_roots()[k]) / c);
  }
  return action;
}

SparseMatrix combination(const std::vector<SparseMatrix>& mats, const std::vector<StructureConstants::Term>& terms,
                         std::size_t n) {
  SparseMatrix out(n, n);
  for (const auto& [t, c] : terms) out = out + mats[t].scaled(Rational(static_cast<long>(c)));
  return out;
}

bool sqrt_rational(const Rational& q, Rational& out) {
  if (sgn(q) <= 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return false;
  BigInt a, b;
  mpz_sqrt(a.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(b.get_mpz_t(), q.get_den_mpz_t());
  out = Rational(a, b);
  out.canonicalize();
  return true;
}

}  // namespace

namespace detail {

RawModule build_raw_module(const RootDatum& d, const IntWeight& lambda) {
  const std::size_t n = d.rank();
  if (lambda.size() != n || !d.is_dominant(lambda)) throw InputError("highest weight must be dominant");
  std::vector<IntWeight> alpha(n);
  for (std::size_t i = 0; i < n; ++i) {
    Root a(n, 0);
    a[i] = 1;
    alpha[i] = d.root_to_int_weight(a);
  }
  using Column = std::vector<SparseMatrix::Entry>;
  std::vector<IntWeight> weights{lambda};
  std::vector<std::size_t> pos_in_space{0};
  std::vector<std::vector<Column>> ecol(n, std::vector<Column>(1)), fcol(n, std::vector<Column>(1));
  std::map<IntWeight, std::vector<std::size_t>> space;
  space[lambda] = {0};
  std::vector<std::size_t> previous{0};

  while (!previous.empty()) {
    std::map<IntWeight, std::vector<std::pair<std::size_t, std::size_t>>> candidates;
    for (auto b : previous)
      for (std::size_t i = 0; i < n; ++i) candidates[minus(weights[b], alpha[i])].emplace_back(i, b);
    std::vector<std::size_t> level;
    for (const auto& [nu, list] : candidates) {
      // A vector below the top is zero in the irreducible quotient iff every
      // e_j kills it, so candidates are compared through their e_j images.
      std::vector<std::size_t> offset(n, npos);
      std::vector<const std::vector<std::size_t>*> target(n, nullptr);
      std::size_t rows = 0;
      for (std::size_t j = 0; j < n; ++j) {
        auto it = space.find(plus(nu, alpha[j]));
        if (it == space.end()) continue;
        offset[j] = rows;
        target[j] = &it->second;
        rows += it->second.size();
      }
      Matrix images(rows, list.size());
      for (std::size_t c = 0; c < list.size(); ++c) {
        const auto [i, b] = list[c];
        for (std::size_t j = 0; j < n; ++j) {
          if (offset[j] == npos) continue;
          // e_j f_i b = f_i e_j b + [i == j] <wt b, a_i^vee> b
          std::map<std::size_t, Rational> acc;
          for (const auto& [x, cx] : ecol[j][b])
            for (const auto& [y, cy] : fcol[i][x]) acc[y] += cx * cy;
          if (i == j && weights[b][i] != 0) acc[b] += weights[b][i];
          for (const auto& [y, v] : acc)
            if (sgn(v) != 0) images(offset[j] + pos_in_space[y], c) = v;
        }
      }
      const Echelon ech = row_reduce(images);
      std::vector<std::size_t> fresh;
      for (std::size_t k = 0; k < ech.pivots.size(); ++k) {
        const std::size_t g = weights.size();
        weights.push_back(nu);
        pos_in_space.push_back(k);
        space[nu].push_back(g);
        level.push_back(g);
        fresh.push_back(g);
        for (std::size_t j = 0; j < n; ++j) {
          Column col;
          if (offset[j] != npos)
            for (std::size_t p = 0; p < target[j]->size(); ++p) {
              const Rational& v = images(offset[j] + p, ech.pivots[k]);
              if (sgn(v) != 0) col.emplace_back((*target[j])[p], v);
            }
          ecol[j].push_back(std::move(col));
          fcol[j].emplace_back();
        }
      }
      for (std::size_t c = 0; c < list.size(); ++c) {
        const auto [i, b] = list[c];
        Column col;
        for (std::size_t k = 0; k < fresh.size(); ++k)
          if (sgn(ech.reduced(k, c)) != 0) col.emplace_back(fresh[k], ech.reduced(k, c));
        fcol[i][b] = std::move(col);
      }
    }
    previous = std::move(level);
  }

  RawModule raw;
  raw.weights = weights;
  const std::size_t dim = weights.size();
  for (std::size_t i = 0; i < n; ++i) {
    SparseMatrix e(dim, dim), f(dim, dim);
    for (std::size_t b = 0; b < dim; ++b) {
      e.set_column(b, ecol[i][b]);
      f.set_column(b, fcol[i][b]);
    }
    raw.e.push_back(std::move(e));
    raw.f.push_back(std::move(f));
  }
  return raw;
}

}  // namespace detail

std::size_t StructureConstants::root_vector_index(const Root& r) const {
  if (auto k = datum_.positive_root_index(r)) return pos_index(*k);
  Root negated = r;
  for (auto& x : negated) x = -x;
  if (auto k = datum_.positive_root_index(negated)) return neg_index(*k);
  throw InputError("root_vector_index: not a root");
}

Vector StructureConstants::coroot(std::size_t k) const {
  const Root& b = datum_.positive_roots()[k];
  const Rational nb = datum_.root_norm2(b);
  Vector c(rank());
  for (std::size_t i = 0; i < rank(); ++i) c[i] = b[i] * datum_.simple_form()(i, i) / nb;
  return c;
}

StructureConstants StructureConstants::build(const RootDatum& d) {
  if (d.rank() == 0) throw InputError("structure constants need a nonzero rank");
  const Root& theta = d.positive_roots().back();
  for (int x : theta)
    if (x <= 0) throw InputError("structure constants need a simple root datum");

  StructureConstants sc;
  sc.datum_ = d;
  sc.chains_ = root_chains(d);
  const std::size_t n = d.rank(), np = d.num_positive_roots();
  sc.weights_.assign(n, Root(n, 0));
  for (const Root& b : d.positive_roots()) sc.weights_.push_back(b);
  for (const Root& b : d.positive_roots()) {
    Root neg = b;
    for (auto& x : neg) x = -x;
    sc.weights_.push_back(neg);
  }
  const std::size_t dim = sc.weights_.size();

  // Normalize on the adjoint module.
  const detail::RawModule adj = detail::build_raw_module(d, d.root_to_int_weight(theta));
  if (adj.weights.size() != dim) throw VerificationError("adjoint_module", "wrong dimension");
  std::vector<SparseMatrix> y, z;
  chain_vectors(d, sc.chains_, adj, y, z);
  sc.scale_.resize(np);
  for (std::size_t k = 0; k < np; ++k) {
    const SparseMatrix hb = diagonal(adj.weights, sc.coroot(k));
    const SparseMatrix p = commutator(y[k], z[k]);
    std::size_t r = 0;
    while (r < dim && sgn(hb.at(r, r)) == 0) ++r;
    if (r == dim) throw VerificationError("chevalley_constants", "coroot acts by zero");
    const Rational kappa = p.at(r, r) / hb.at(r, r);
    if (!(p == hb.scaled(kappa))) throw VerificationError("chevalley_constants", "[y, z] not proportional to coroot");
    if (!sqrt_rational(-sign_of_height(d.positive_roots()[k]) * kappa, sc.scale_[k]))
      throw VerificationError("chevalley_constants", "normalization is not a rational square");
  }
  const std::vector<SparseMatrix> x = assemble_action(sc, adj);

  sc.table_.assign(dim * dim, {});
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = a + 1; b < dim; ++b) {
      const SparseMatrix m = commutator(x[a], x[b]);
      Root w = sc.weights_[a];
      for (std::size_t i = 0; i < n; ++i) w[i] += sc.weights_[b][i];
      std::vector<Term> terms;
      if (m.is_zero()) {
        // nothing
      } else if (std::all_of(w.begin(), w.end(), [](int v) { return v == 0; })) {
        // [x_b, x_{-b}] = h_b
        const bool forward = a >= n && a < n + np;
        const std::size_t k = forward ? a - n : b - n;
        const Vector c = sc.coroot(k);
        for (std::size_t i = 0; i < n; ++i) {
          if (sgn(c[i]) == 0) continue;
          if (!is_integer(c[i])) throw VerificationError("chevalley_constants", "non-integral coroot");
          terms.emplace_back(i, (forward ? 1 : -1) * c[i].get_num().get_si());
        }
      } else {
        if (!d.is_root(w)) throw VerificationError("chevalley_constants", "bracket outside the root spaces");
        const std::size_t t = sc.root_vector_index(w);
        std::size_t c0 = 0;
        while (c0 < dim && x[t].column(c0).empty()) ++c0;
        if (c0 == dim) throw VerificationError("chevalley_constants", "zero root vector");
        const auto& [r0, v0] = x[t].column(c0).front();
        const Rational ratio = m.at(r0, c0) / v0;
        if (!is_integer(ratio)) throw VerificationError("chevalley_constants", "non-integral structure constant");
        terms.emplace_back(t, ratio.get_num().get_si());
      }
      if (!(combination(x, terms, dim) == m))
        throw VerificationError("chevalley_constants", "bracket not in the span of the basis");
      std::vector<Term> negated = terms;
      for (auto& tm : negated) tm.second = -tm.second;
      sc.table_[a * dim + b] = std::move(terms);
      sc.table_[b * dim + a] = std::move(negated);
    }
  }
  sc.check_jacobi();
  return sc;
}

void StructureConstants::check_jacobi() const {
  const std::size_t n = dim();
  std::vector<std::int64_t> acc(n);
  auto add_nested = [&](std::size_t a, std::size_t b, std::size_t c) {
    for (const auto& [t, k] : bracket(b, c))
      for (const auto& [s, l] : bracket(a, t)) acc[s] += k * l;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        std::fill(acc.begin(), acc.end(), 0);
        add_nested(a, b, c);
        add_nested(b, c, a);
        add_nested(c, a, b);
        for (auto v : acc)
          if (v != 0)
            throw VerificationError("jacobi", "fails on (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                                                  std::to_string(c) + ")");
      }
}

std::size_t default_size_cap() {
  if (const char* env = std::getenv("PARABOLICA_SIZE_CAP")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 400;
}

std::vector<int> ModuleModel::grading_tags(const ParabolicGrading& g) const {
  std::vector<Rational> ev(weights.size());
  Rational low;
  for (std::size_t v = 0; v < weights.size(); ++v) {
    ev[v] = g.eigenvalue(weights[v]);
    if (v == 0 || ev[v] < low) low = ev[v];
  }
  std::vector<int> tags(weights.size());
  for (std::size_t v = 0; v < weights.size(); ++v) {
    const Rational t = ev[v] - low;
    if (!is_integer(t)) throw VerificationError("grading_tags", "non-integral eigenvalue gap");
    tags[v] = static_cast<int>(t.get_num().get_si());
  }
  return tags;
}

void ModuleModel::check_brackets(const StructureConstants& sc) const {
  for (std::size_t a = 0; a < sc.dim(); ++a)
    for (std::size_t b = a + 1; b < sc.dim(); ++b)
      if (!(commutator(action[a], action[b]) == combination(action, sc.bracket(a, b), dim())))
        throw VerificationError("module_brackets",
                                "fails on basis pair (" + std::to_string(a) + ", " + std::to_string(b) + ")");
}

ModuleModel highest_weight_module(const StructureConstants& sc, const IntWeight& lambda, std::size_t size_cap) {
  const BigInt expected = weyl_dim(sc.datum(), lambda);
  if (expected > size_cap)
    throw SizeCapError("module dimension " + expected.get_str() + " exceeds size cap " + std::to_string(size_cap));
  const detail::RawModule raw = detail::build_raw_module(sc.datum(), lambda);
  if (raw.weights.size() != expected.get_ui())
    throw VerificationError("highest_weight_module", "dimension " + std::to_string(raw.weights.size()) +
                                                         " differs from Weyl dimension " + expected.get_str());
  ModuleModel mm;
  mm.label = lambda;
  mm.weights = raw.weights;
  mm.action = assemble_action(sc, raw);
  mm.check_brackets(sc);
  return mm;
}

}  // namespace parabolica

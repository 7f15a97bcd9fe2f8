#include "parabolica/weights.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "parabolica/errors.hpp"

namespace parabolica {

namespace {

IntWeight add(IntWeight a, const IntWeight& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

IntWeight sub(IntWeight a, const IntWeight& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

IntWeight neg(IntWeight a) {
  for (auto& x : a) x = -x;
  return a;
}

// (x, beta) for x in fundamental coordinates and beta in simple-root coordinates.
Rational pair_with_root(const RootDatum& d, const IntWeight& x, const Root& beta) {
  Rational s;
  for (std::size_t j = 0; j < beta.size(); ++j)
    if (beta[j] != 0 && x[j] != 0) s += d.symmetrizer()[j] * (beta[j] * x[j]);
  return s;
}

long height(const Root& r) {
  long h = 0;
  for (int x : r) h += x;
  return h;
}

void require_dominant(const RootDatum& d, const IntWeight& lambda, const char* what) {
  if (lambda.size() != d.rank()) throw InputError(std::string(what) + ": weight has wrong length");
  if (!d.is_dominant(lambda)) throw InputError(std::string(what) + ": weight is not dominant");
}

}  // namespace

BigInt weyl_dim(const RootDatum& d, const IntWeight& lambda) {
  require_dominant(d, lambda, "weyl_dim");
  IntWeight shifted = lambda;
  for (auto& x : shifted) x += 1;
  const IntWeight rho(d.rank(), 1);
  Rational prod = 1;
  for (const Root& beta : d.positive_roots()) prod *= pair_with_root(d, shifted, beta) / pair_with_root(d, rho, beta);
  if (!is_integer(prod)) throw VerificationError("weyl_dim", "non-integral product");
  return prod.get_num();
}

std::vector<long> root_depth(const RootDatum& d, const IntWeight& top, const IntWeight& w) {
  const Vector c = d.weight_to_root_coords(to_weight(sub(top, w)));
  std::vector<long> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!is_integer(c[i])) throw InputError("root_depth: weights differ by a non-root-lattice element");
    out[i] = c[i].get_num().get_si();
  }
  return out;
}

WeightTable dominant_multiplicities(const RootDatum& d, const IntWeight& lambda) {
  require_dominant(d, lambda, "freudenthal");
  // Dominant weights below lambda are connected to lambda by positive-root
  // steps through dominant weights, so a downward search finds all of them.
  std::map<IntWeight, long> level;  // height of lambda - mu
  std::deque<IntWeight> queue{lambda};
  level[lambda] = 0;
  while (!queue.empty()) {
    const IntWeight mu = queue.front();
    queue.pop_front();
    for (const Root& beta : d.positive_roots()) {
      IntWeight nu = sub(mu, d.root_to_int_weight(beta));
      if (!d.is_dominant(nu) || level.count(nu)) continue;
      level[nu] = level[mu] + height(beta);
      queue.push_back(std::move(nu));
    }
  }
  std::vector<IntWeight> order;
  for (const auto& [mu, h] : level) order.push_back(mu);
  std::stable_sort(order.begin(), order.end(),
                   [&](const IntWeight& a, const IntWeight& b) { return level[a] < level[b]; });

  std::vector<IntWeight> root_weights;
  for (const Root& beta : d.positive_roots()) root_weights.push_back(d.root_to_int_weight(beta));
  IntWeight lr = lambda;
  for (auto& x : lr) x += 1;
  const Rational top = d.inner_product(to_weight(lr), to_weight(lr));

  WeightTable mult;
  mult[lambda] = 1;
  for (const IntWeight& mu : order) {
    if (mu == lambda) continue;
    Rational sum;
    for (std::size_t b = 0; b < root_weights.size(); ++b) {
      IntWeight nu = mu;
      while (true) {
        nu = add(nu, root_weights[b]);
        const IntWeight dom = d.to_dominant(nu);
        if (!level.count(dom)) break;
        auto it = mult.find(dom);
        if (it == mult.end()) throw VerificationError("freudenthal", "recursion order violated");
        if (it->second != 0) sum += it->second * pair_with_root(d, nu, d.positive_roots()[b]);
      }
    }
    IntWeight mr = mu;
    for (auto& x : mr) x += 1;
    const Rational denom = top - d.inner_product(to_weight(mr), to_weight(mr));
    const Rational m = 2 * sum / denom;
    if (!is_integer(m) || sgn(m) < 0) throw VerificationError("freudenthal", "non-integral multiplicity");
    mult[mu] = m.get_num().get_si();
  }
  return mult;
}

WeightTable freudenthal_multiplicities(const RootDatum& d, const IntWeight& lambda) {
  WeightTable out;
  for (const auto& [mu, m] : dominant_multiplicities(d, lambda)) {
    if (m == 0) continue;
    std::deque<IntWeight> queue{mu};
    out[mu] = m;
    while (!queue.empty()) {
      const IntWeight x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < d.rank(); ++i) {
        if (x[i] == 0) continue;
        IntWeight y = d.simple_reflection(i, x);
        if (out.emplace(y, m).second) queue.push_back(std::move(y));
      }
    }
  }
  return out;
}

Decomposition tensor_decompose(const RootDatum& d, const IntWeight& a, const IntWeight& b) {
  require_dominant(d, b, "tensor_decompose");
  Decomposition raw;
  for (const auto& [nu, m] : freudenthal_multiplicities(d, a)) {
    IntWeight x = add(b, nu);
    for (auto& c : x) c += 1;
    std::size_t flips = 0;
    x = d.to_dominant(std::move(x), &flips);
    if (std::any_of(x.begin(), x.end(), [](long c) { return c == 0; })) continue;
    for (auto& c : x) c -= 1;
    raw[x] += (flips % 2 == 0) ? m : -m;
  }
  Decomposition out;
  for (const auto& [w, m] : raw) {
    if (m < 0) throw VerificationError("tensor_decompose", "negative multiplicity");
    if (m > 0) out[w] = m;
  }
  return out;
}

Decomposition tensor_decompose(const RootDatum& d, const IrrepLabel& a, const IrrepLabel& b) {
  if (a.scope != b.scope) throw InputError("tensor_decompose: scope mismatch");
  return tensor_decompose(d, a.weight, b.weight);
}

IrrepLabel cartan_product_label(const IrrepLabel& a, const IrrepLabel& b) {
  if (a.scope != b.scope) throw InputError("cartan_product_label: scope mismatch");
  if (a.weight.size() != b.weight.size()) throw InputError("cartan_product_label: length mismatch");
  return {a.scope, add(a.weight, b.weight)};
}

IntWeight construct_V(const ParabolicGrading& g, const IntWeight& e_levi, const Orders& orders) {
  const RootDatum& levi = g.levi_datum();
  require_dominant(levi, e_levi, "construct_V");
  for (const auto& [node, r] : orders) {
    if (node >= g.datum().rank() || !g.crossed(node)) throw InputError("construct_V: order given for an uncrossed node");
    if (r < 1) throw InputError("construct_V: orders must be >= 1");
  }
  IntWeight mu = g.extend_from_levi(levi.dual_weight(e_levi));
  for (auto j : g.sigma()) {
    auto it = orders.find(j);
    mu[j] += (it == orders.end() ? 1 : it->second) - 1;
  }
  return g.datum().dual_weight(mu);
}

H0Entry kostant_h0(const ParabolicGrading& g, const IntWeight& v_weight) {
  require_dominant(g.datum(), v_weight, "kostant_h0");
  // H^0(g_-, V) is the dual of H^0(p_+, V^*), whose highest weight is the
  // restriction of the highest weight of V^*.
  const IntWeight mu = g.datum().dual_weight(v_weight);
  H0Entry h;
  h.levi_weight = g.levi_datum().dual_weight(g.restrict_to_levi(mu));
  h.dim = weyl_dim(g.levi_datum(), h.levi_weight);
  return h;
}

IntWeight levi_dominant(const ParabolicGrading& g, IntWeight x) {
  while (true) {
    bool moved = false;
    for (auto i : g.levi_nodes()) {
      if (x[i] < 0) {
        x = g.datum().simple_reflection(i, x);
        moved = true;
        break;
      }
    }
    if (!moved) return x;
  }
}

std::vector<H1Entry> kostant_h1(const ParabolicGrading& g, const IntWeight& v_weight) {
  const RootDatum& d = g.datum();
  require_dominant(d, v_weight, "kostant_h1");
  const IntWeight mu = d.dual_weight(v_weight);
  // V has lowest weight -mu, so V_0 sits at eigenvalue e(-mu).
  const Rational bottom = g.eigenvalue(neg(mu));
  std::vector<H1Entry> out;
  for (auto j : g.sigma()) {
    Root aj(d.rank(), 0);
    aj[j] = 1;
    const IntWeight alpha = d.root_to_int_weight(aj);
    // affine reflection s_j . mu = s_j(mu + rho) - rho
    IntWeight affine = mu;
    for (std::size_t k = 0; k < affine.size(); ++k) affine[k] -= (mu[j] + 1) * alpha[k];
    H1Entry h;
    h.node = j;
    h.levi_weight = g.levi_datum().dual_weight(g.restrict_to_levi(affine));
    h.dim = weyl_dim(g.levi_datum(), h.levi_weight);
    // Extreme cochain: dual of the root vector for -a_j tensored with the
    // extremal vector of weight -s_j(mu) in V.
    const IntWeight extreme = neg(d.simple_reflection(j, mu));
    const Rational degree = g.eigenvalue(alpha) + g.eigenvalue(extreme) - bottom;
    if (!is_integer(degree)) throw VerificationError("kostant_h1", "non-integral grading degree");
    h.grading_degree = static_cast<int>(degree.get_num().get_si());
    h.full_weight = levi_dominant(g, neg(affine));
    out.push_back(std::move(h));
  }
  return out;
}

CohomologyReport kostant_cohomology(const ParabolicGrading& g, const IntWeight& v_weight) {
  return {kostant_h0(g, v_weight), kostant_h1(g, v_weight)};
}

GradingDecomposition grading_decomposition(const ParabolicGrading& g, const WeightTable& table) {
  std::map<Rational, long> buckets;
  for (const auto& [w, m] : table) buckets[g.eigenvalue(w)] += m;
  GradingDecomposition out;
  if (buckets.empty()) return out;
  out.bottom = buckets.begin()->first;
  const Rational span = buckets.rbegin()->first - out.bottom;
  if (!is_integer(span)) throw VerificationError("grading_decomposition", "eigenvalues not integrally spaced");
  out.N = static_cast<int>(span.get_num().get_si());
  out.dims.assign(static_cast<std::size_t>(out.N) + 1, 0);
  for (const auto& [ev, m] : buckets) {
    const Rational k = ev - out.bottom;
    if (!is_integer(k)) throw VerificationError("grading_decomposition", "eigenvalues not integrally spaced");
    out.dims[k.get_num().get_ui()] += m;
  }
  return out;
}

GradingDecomposition grading_decomposition(const ParabolicGrading& g, const IntWeight& v_weight) {
  return grading_decomposition(g, freudenthal_multiplicities(g.datum(), v_weight));
}

SolutionBound solution_space_bound(const ParabolicGrading& g, const IntWeight& e_levi, const Orders& orders) {
  SolutionBound s;
  s.v_weight = construct_V(g, e_levi, orders);
  s.bound = weyl_dim(g.datum(), s.v_weight);
  s.N = grading_decomposition(g, s.v_weight).N;
  return s;
}

BigInt contact_bound_closed_form(int n, int r, int t) {
  if (n < 1 || r < 1 || t < 1) throw InputError("contact_bound_closed_form: arguments must be positive");
  auto fac = [](long k) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    return f;
  };
  const BigInt num = fac(r + t + 2 * n - 1) * fac(2 * n + t - 1) * r * (r + 2 * t + 2 * n);
  const BigInt den = fac(r + t) * fac(t) * fac(2 * n + 1) * fac(2 * n - 1);
  if (num % den != 0) throw VerificationError("contact_bound_closed_form", "non-integral value");
  return num / den;
}

WeightTable cochain1_character(const ParabolicGrading& g, const WeightTable& v_table) {
  WeightTable out;
  for (const Root& beta : g.datum().positive_roots()) {
    if (g.sigma_height(beta) < 1) continue;
    const IntWeight wb = g.datum().root_to_int_weight(beta);
    for (const auto& [v, m] : v_table) out[add(wb, v)] += m;
  }
  return out;
}

Decomposition g0_decompose(const ParabolicGrading& g, WeightTable character) {
  const RootDatum& d = g.datum();
  Weight rho_levi(d.rank());
  for (auto i : g.levi_nodes()) rho_levi[i] = 1;
  auto score = [&](const IntWeight& w) { return d.inner_product(to_weight(w), rho_levi); };
  Decomposition out;
  for (auto it = character.begin(); it != character.end();)
    it = it->second == 0 ? character.erase(it) : std::next(it);
  while (!character.empty()) {
    // A maximal weight for a functional positive on the Levi simple roots is
    // a highest weight of some remaining component.
    auto best = character.begin();
    Rational best_score = score(best->first);
    for (auto it = std::next(character.begin()); it != character.end(); ++it) {
      Rational s = score(it->first);
      if (s > best_score) {
        best = it;
        best_score = s;
      }
    }
    const IntWeight top = best->first;
    const long count = best->second;
    if (count < 0) throw VerificationError("g0_decompose", "not a genuine character");
    out[top] += count;
    const IntWeight top_levi = g.restrict_to_levi(top);
    for (const auto& [wl, m] : freudenthal_multiplicities(g.levi_datum(), top_levi)) {
      const std::vector<long> depth = root_depth(g.levi_datum(), top_levi, wl);
      IntWeight full = top;
      for (std::size_t k = 0; k < depth.size(); ++k) {
        if (depth[k] == 0) continue;
        Root a(d.rank(), 0);
        a[g.levi_nodes()[k]] = 1;
        const IntWeight aw = d.root_to_int_weight(a);
        for (std::size_t c = 0; c < full.size(); ++c) full[c] -= depth[k] * aw[c];
      }
      auto it = character.find(full);
      if (it == character.end() || it->second < m * count)
        throw VerificationError("g0_decompose", "not a genuine character");
      it->second -= m * count;
      if (it->second == 0) character.erase(it);
    }
  }
  return out;
}

}  // namespace parabolica

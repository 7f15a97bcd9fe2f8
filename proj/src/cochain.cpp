#include "parabolica/cochain.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "parabolica/errors.hpp"
#include "parabolica/linalg/modular_rank.hpp"

namespace parabolica {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Matrix unit_columns(std::size_t rows, const std::vector<std::size_t>& at) {
  Matrix m(rows, at.size());
  for (std::size_t c = 0; c < at.size(); ++c) m(at[c], c) = 1;
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (sgn(b(k, l)) != 0) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

/// First (row, col) entry joining different labels, if any.
bool respects_labels(const Matrix& m, const std::vector<int>& row_labels, const std::vector<int>& col_labels,
                     std::string* where) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(m(r, c)) != 0 && row_labels[r] != col_labels[c]) {
        if (where) *where = "entry (" + std::to_string(r) + ", " + std::to_string(c) + ")";
        return false;
      }
  return true;
}

std::string weight_text(const IntWeight& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + "]";
}

CheckResult make_check(std::string name, bool pass, std::string expected, std::string actual,
                       std::string detail = {}) {
  CheckResult c;
  c.name = std::move(name);
  c.pass = pass;
  c.expected = std::move(expected);
  c.actual = std::move(actual);
  c.detail = std::move(detail);
  return c;
}

/// delta^* on im(d) is the inverse of d restricted to im(dstar); zero on ker(dstar).
Matrix codifferential_inverse(const Matrix& d, const Matrix& dstar) {
  const Matrix y = column_space_basis(dstar);
  const Matrix k = kernel_basis(dstar);
  const Matrix m = Matrix::hstack(d * y, k);
  if (m.rows() != m.cols()) throw VerificationError("hodge", "im(d) + ker(d*) has the wrong size");
  Matrix minv;
  try {
    minv = inverse(m);
  } catch (const std::domain_error&) {
    throw VerificationError("hodge", "im(d) and ker(d*) are not complementary");
  }
  return Matrix::hstack(y, Matrix(y.rows(), k.cols())) * minv;
}

}  // namespace

int CochainComplex::top_tag() const {
  int t = 0;
  for (int x : tags) t = std::max(t, x);
  return t;
}

std::vector<std::size_t> CochainComplex::tag_block(int i) const { return label_block(tags, i); }

std::vector<std::size_t> CochainComplex::label_block(const std::vector<int>& labels, int i) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (labels[k] == i) out.push_back(k);
  return out;
}

CochainComplex build_complex(const ModuleModel& mm, const NilpotentModel& nm) {
  CochainComplex cc;
  cc.module = mm;
  cc.nilpotent = nm;
  cc.tags = mm.grading_tags(nm.grading());
  const std::size_t nv = mm.dim(), m = nm.dim();
  for (std::size_t b = 0; b < m; ++b)
    for (std::size_t c = b + 1; c < m; ++c) cc.pairs.emplace_back(b, c);
  cc.label0 = cc.tags;
  cc.label1.resize(m * nv);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t v = 0; v < nv; ++v) cc.label1[a * nv + v] = nm.degree(a) + cc.tags[v];
  cc.label2.resize(cc.pairs.size() * nv);
  for (std::size_t p = 0; p < cc.pairs.size(); ++p)
    for (std::size_t v = 0; v < nv; ++v)
      cc.label2[p * nv + v] = nm.degree(cc.pairs[p].first) + nm.degree(cc.pairs[p].second) + cc.tags[v];

  cc.d0 = Matrix(m * nv, nv);
  for (std::size_t a = 0; a < m; ++a) {
    const SparseMatrix& ra = mm.rho(nm.lower_index(a));
    for (std::size_t v = 0; v < nv; ++v)
      for (const auto& [w, x] : ra.column(v)) cc.d0(a * nv + w, v) = x;
  }

  // (d f)(Y_b, Y_c) = Y_b f(Y_c) - Y_c f(Y_b) - f([Y_b, Y_c])
  cc.d1 = Matrix(cc.pairs.size() * nv, m * nv);
  for (std::size_t p = 0; p < cc.pairs.size(); ++p) {
    const auto [b, c] = cc.pairs[p];
    const SparseMatrix& rb = mm.rho(nm.lower_index(b));
    const SparseMatrix& rc = mm.rho(nm.lower_index(c));
    for (std::size_t u = 0; u < nv; ++u) {
      for (const auto& [w, x] : rb.column(u)) cc.d1(p * nv + w, c * nv + u) += x;
      for (const auto& [w, x] : rc.column(u)) cc.d1(p * nv + w, b * nv + u) -= x;
      for (const auto& [t, k] : nm.bracket(b, c)) cc.d1(p * nv + u, t * nv + u) -= k;
    }
  }
  return cc;
}

HodgeData build_partial_star(const CochainComplex& cc) {
  const ModuleModel& mm = cc.module;
  const NilpotentModel& nm = cc.nilpotent;
  const std::size_t nv = cc.dim_v(), m = nm.dim();
  HodgeData hd;
  std::vector<SparseMatrix> z(m);
  for (std::size_t a = 0; a < m; ++a) z[a] = mm.rho(nm.upper_index(a)).scaled(nm.pairing_scale(a));

  // Z_a (x) v  |->  -Z_a v
  hd.dstar1 = Matrix(nv, m * nv);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t v = 0; v < nv; ++v)
      for (const auto& [w, x] : z[a].column(v)) hd.dstar1(w, a * nv + v) = -x;

  // Z_b ^ Z_c (x) v  |->  -Z_c (x) Z_b v + Z_b (x) Z_c v - [Z_b, Z_c] (x) v
  hd.dstar2 = Matrix(m * nv, cc.pairs.size() * nv);
  for (std::size_t p = 0; p < cc.pairs.size(); ++p) {
    const auto [b, c] = cc.pairs[p];
    for (std::size_t v = 0; v < nv; ++v) {
      const std::size_t col = p * nv + v;
      for (const auto& [w, x] : z[b].column(v)) hd.dstar2(c * nv + w, col) -= x;
      for (const auto& [w, x] : z[c].column(v)) hd.dstar2(b * nv + w, col) += x;
      for (const auto& [t, k] : nm.upper_bracket(b, c)) hd.dstar2(t * nv + v, col) -= k;
    }
  }
  return hd;
}

HodgeData hodge(const CochainComplex& cc) {
  HodgeData hd = build_partial_star(cc);
  const std::size_t n1 = cc.dim1();
  hd.rank_d0 = rank(cc.d0);
  hd.rank_d1 = rank(cc.d1);
  hd.rank_dstar1 = rank(hd.dstar1);
  hd.rank_dstar2 = rank(hd.dstar2);
  hd.laplacian = cc.d0 * hd.dstar1 + hd.dstar2 * cc.d1;

  std::string where;
  if (!respects_labels(hd.laplacian, cc.label1, cc.label1, &where))
    throw VerificationError("hodge", "Laplacian mixes grading labels at " + where);

  // Kernel label by label; the Laplacian is block diagonal.
  std::set<int> labels(cc.label1.begin(), cc.label1.end());
  std::vector<Vector> kernel;
  for (int l : labels) {
    const auto idx = CochainComplex::label_block(cc.label1, l);
    const Matrix kb = kernel_basis(hd.laplacian.block(idx, idx));
    for (std::size_t c = 0; c < kb.cols(); ++c) {
      Vector v(n1);
      for (std::size_t i = 0; i < idx.size(); ++i) v[idx[i]] = kb(i, c);
      kernel.push_back(std::move(v));
    }
  }
  hd.ker_laplacian = Matrix::from_columns(n1, kernel);
  const std::size_t k = kernel.size();

  if (hd.rank_d0 + hd.rank_dstar2 + k != n1)
    throw VerificationError("hodge", "rank d0 + rank d2* + dim ker Laplacian = " +
                                         std::to_string(hd.rank_d0 + hd.rank_dstar2 + k) + ", expected " +
                                         std::to_string(n1));
  const Matrix all = Matrix::hstack(Matrix::hstack(column_space_basis(cc.d0), column_space_basis(hd.dstar2)),
                                    hd.ker_laplacian);
  if (rank(all) != n1) throw VerificationError("hodge", "im d0 + im d2* + ker Laplacian is not direct");

  hd.deltastar1 = codifferential_inverse(cc.d0, hd.dstar1);
  hd.deltastar2 = codifferential_inverse(cc.d1, hd.dstar2);
  return hd;
}

std::size_t h0_dim(const CochainComplex& cc) { return cc.dim_v() - rank(cc.d0); }

std::size_t h1_dim(const CochainComplex& cc) { return (cc.dim1() - rank(cc.d1)) - rank(cc.d0); }

std::map<int, std::size_t> h1_label_profile(const CochainComplex& cc, const HodgeData& hd) {
  std::map<int, std::size_t> out;
  for (std::size_t c = 0; c < hd.ker_laplacian.cols(); ++c) {
    int label = -1;
    for (std::size_t r = 0; r < hd.ker_laplacian.rows(); ++r) {
      if (sgn(hd.ker_laplacian(r, c)) == 0) continue;
      if (label >= 0 && label != cc.label1[r])
        throw VerificationError("h1_location", "kernel vector with mixed labels");
      label = cc.label1[r];
    }
    ++out[label];
  }
  return out;
}

int h1_location_check(const CochainComplex& cc, const HodgeData& hd) {
  const auto profile = h1_label_profile(cc, hd);
  if (profile.size() != 1) {
    std::ostringstream os;
    os << "kernel labels:";
    for (const auto& [l, n] : profile) os << " " << l << "x" << n;
    throw VerificationError("h1_location", os.str());
  }
  return profile.begin()->first;
}

bool h1_supported_in_degree_one(const CochainComplex& cc, const HodgeData& hd) {
  const std::size_t nv = cc.dim_v();
  for (std::size_t r = 0; r < hd.ker_laplacian.rows(); ++r) {
    if (cc.nilpotent.degree(r / nv) == 1) continue;
    for (std::size_t c = 0; c < hd.ker_laplacian.cols(); ++c)
      if (sgn(hd.ker_laplacian(r, c)) != 0) return false;
  }
  return true;
}

Matrix phi_matrix(const CochainComplex& cc, int i, Enveloping& env) {
  const auto v0 = cc.tag_block(0), vi = cc.tag_block(i);
  const auto words = pbw_basis(cc.nilpotent, i).monomials;
  const std::size_t n0 = v0.size();
  Matrix out(words.size() * n0, vi.size());
  for (std::size_t k = 0; k < words.size(); ++k) {
    const UElement t = env.transpose(words[k]);
    for (std::size_t c = 0; c < vi.size(); ++c) {
      Vector e(cc.dim_v());
      e[vi[c]] = 1;
      const Vector x = u_action(cc.module, cc.nilpotent, t, e);
      for (std::size_t q = 0; q < n0; ++q) out(k * n0 + q, c) = -x[v0[q]];
    }
  }
  return out;
}

NaturalProjection natural_projection(const CochainComplex& cc, int r, std::size_t node, Enveloping& env) {
  const NilpotentModel& nm = cc.nilpotent;
  const ModuleModel& mm = cc.module;
  const ParabolicGrading& g = nm.grading();
  const RootDatum& d = g.datum();
  if (r < 1) throw InputError("natural_projection: order must be positive");
  if (!g.crossed(node)) throw InputError("natural_projection: node is not crossed");

  const auto comp = nm.component(node);
  const auto v0 = cc.tag_block(0);
  const std::size_t n0 = v0.size();
  const auto words = pbw_basis(nm, r).monomials;
  std::map<Word, std::size_t> word_index;
  for (std::size_t k = 0; k < words.size(); ++k) word_index[words[k]] = k;

  // Multisets of size r over the component, as nondecreasing generator words.
  std::vector<Word> sym;
  {
    Word cur;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      if (cur.size() == static_cast<std::size_t>(r)) {
        sym.push_back(cur);
        return;
      }
      for (std::size_t i = from; i < comp.size(); ++i) {
        cur.push_back(comp[i]);
        rec(i);
        cur.pop_back();
      }
    };
    rec(0);
  }
  std::map<Word, std::size_t> sym_index;
  for (std::size_t s = 0; s < sym.size(); ++s) sym_index[sym[s]] = s;

  NaturalProjection np;
  const std::size_t nt = sym.size() * n0;

  // A functional on U_{-r} restricted to symmetric tensors: f |-> (s |-> f(sym(s))).
  Matrix restr(sym.size(), words.size());
  for (std::size_t s = 0; s < sym.size(); ++s)
    for (const auto& [w, c] : env.symmetrise(sym[s])) restr(s, word_index.at(w)) = c;
  np.restriction = kron(restr, Matrix::identity(n0));

  auto v0_block = [&](std::size_t a) {
    Matrix b(n0, n0);
    const SparseMatrix& ra = mm.rho(a);
    for (std::size_t q = 0; q < n0; ++q)
      for (const auto& [w, x] : ra.column(v0[q])) {
        auto it = std::lower_bound(v0.begin(), v0.end(), w);
        if (it == v0.end() || *it != w) throw VerificationError("natural_projection", "Levi action leaves V_0");
        b(static_cast<std::size_t>(it - v0.begin()), q) = x;
      }
    return b;
  };
  // Derivation action on symmetric tensors over the component.
  auto sym_action = [&](const Matrix& ad) {
    Matrix m(sym.size(), sym.size());
    for (std::size_t s = 0; s < sym.size(); ++s)
      for (std::size_t k = 0; k < sym[s].size(); ++k)
        for (std::size_t y = 0; y < nm.dim(); ++y) {
          const Rational& c = ad(y, sym[s][k]);
          if (sgn(c) == 0) continue;
          Word w = sym[s];
          w[k] = y;
          std::sort(w.begin(), w.end());
          m(sym_index.at(w), s) += c;
        }
    return m;
  };
  // Derivation action on PBW words, straightened.
  auto word_action = [&](const Matrix& ad) {
    Matrix m(words.size(), words.size());
    for (std::size_t s = 0; s < words.size(); ++s)
      for (std::size_t k = 0; k < words[s].size(); ++k)
        for (std::size_t y = 0; y < nm.dim(); ++y) {
          const Rational& c = ad(y, words[s][k]);
          if (sgn(c) == 0) continue;
          Word w = words[s];
          w[k] = y;
          for (const auto& [pw, pc] : env.normal_order(w)) m(word_index.at(pw), s) += c * pc;
        }
    return m;
  };

  const Matrix id0 = Matrix::identity(n0);
  std::map<std::size_t, Matrix> target_of;
  for (std::size_t a : nm.levi_elements()) {
    const Matrix& ad = nm.ad(a);
    const Matrix b0 = v0_block(a);
    Matrix t = kron(-sym_action(ad).transpose(), id0) + kron(Matrix::identity(sym.size()), b0);
    Matrix s = kron(-word_action(ad).transpose(), id0) + kron(Matrix::identity(words.size()), b0);
    np.source_action.push_back(std::move(s));
    target_of.emplace(a, t);
    np.target_action.push_back(std::move(t));
  }

  // Levi Casimir, normalized by the ambient form.
  const auto& hs = nm.levi_cartan();
  Matrix gram(hs.size(), hs.size());
  for (std::size_t k = 0; k < hs.size(); ++k)
    for (std::size_t l = 0; l < hs.size(); ++l) {
      const Rational ak = 2 * d.symmetrizer()[hs[k]], al = 2 * d.symmetrizer()[hs[l]];
      gram(k, l) = 4 * d.simple_form()(hs[k], hs[l]) / (ak * al);
    }
  const Matrix ginv = hs.empty() ? Matrix() : inverse(gram);
  Matrix casimir(nt, nt);
  for (std::size_t k = 0; k < hs.size(); ++k)
    for (std::size_t l = 0; l < hs.size(); ++l)
      if (sgn(ginv(k, l)) != 0) casimir = casimir + (target_of.at(hs[k]) * target_of.at(hs[l])).scaled(ginv(k, l));
  for (const auto& lr : nm.levi_roots()) {
    const Matrix& x = target_of.at(lr.raising);
    const Matrix& y = target_of.at(lr.lowering);
    casimir = casimir + (x * y + y * x).scaled(lr.half_norm);
  }
  for (const auto& t : np.target_action)
    if (!(casimir * t == t * casimir)) throw VerificationError("natural_projection", "Casimir is not central");

  auto eigenvalue = [&](const IntWeight& lam) {
    Rational c = 0;
    for (std::size_t k = 0; k < hs.size(); ++k)
      for (std::size_t l = 0; l < hs.size(); ++l) c += ginv(k, l) * lam[hs[k]] * lam[hs[l]];
    for (const auto& lr : nm.levi_roots()) {
      const Root& gamma = d.positive_roots()[lr.raising - d.rank()];
      for (std::size_t j = 0; j < d.rank(); ++j) c += Rational(gamma[j]) * d.symmetrizer()[j] * lam[j];
    }
    return c;
  };

  // g_0 characters: Y_b^* has weight +b, V_0 weights as in the module.
  WeightTable comp_char, v0_char, w_char;
  for (auto b : comp) ++comp_char[d.root_to_int_weight(d.positive_roots()[nm.root(b)])];
  for (auto q : v0) ++v0_char[mm.weights[q]];
  for (const auto& s : sym) {
    IntWeight ws(d.rank(), 0);
    for (auto b : s) {
      const IntWeight wb = d.root_to_int_weight(d.positive_roots()[nm.root(b)]);
      for (std::size_t i = 0; i < ws.size(); ++i) ws[i] += wb[i];
    }
    for (auto q : v0) {
      IntWeight w = ws;
      for (std::size_t i = 0; i < w.size(); ++i) w[i] += mm.weights[q][i];
      ++w_char[w];
    }
  }
  const auto comp_dec = g0_decompose(g, comp_char);
  const auto v0_dec = g0_decompose(g, v0_char);
  if (comp_dec.size() != 1 || v0_dec.size() != 1)
    throw VerificationError("natural_projection", "g_{-1,j} or V_0 is not irreducible");
  IntWeight cartan = v0_dec.begin()->first;
  for (std::size_t i = 0; i < cartan.size(); ++i) cartan[i] += r * comp_dec.begin()->first[i];
  const auto w_dec = g0_decompose(g, w_char);
  auto it = w_dec.find(cartan);
  if (it == w_dec.end() || it->second != 1)
    throw VerificationError("natural_projection", "Cartan component missing or repeated");
  np.cartan_weight = g.restrict_to_levi(cartan);
  np.cartan_dim = weyl_dim(g.levi_datum(), np.cartan_weight);

  const Rational c0 = eigenvalue(cartan);
  std::set<Rational> others;
  for (const auto& [lam, mult] : w_dec)
    if (lam != cartan) {
      const Rational c = eigenvalue(lam);
      if (c == c0)
        throw VerificationError("natural_projection",
                                "Casimir does not separate " + weight_text(lam) + " from the Cartan component");
      others.insert(c);
    }
  Matrix proj = Matrix::identity(nt);
  for (const auto& c : others) proj = (proj * (casimir - Matrix::identity(nt).scaled(c))).scaled(1 / (c0 - c));
  np.projector = std::move(proj);
  np.matrix = np.projector * np.restriction;
  return np;
}

std::vector<CheckResult> verify_phi_ranks(const CochainComplex& cc, const std::map<std::size_t, int>& orders,
                                          Enveloping& env) {
  std::vector<CheckResult> out;
  const NilpotentModel& nm = cc.nilpotent;
  const ParabolicGrading& g = nm.grading();
  const std::size_t n0 = cc.tag_block(0).size();
  int r_min = 0;
  for (const auto& [node, r] : orders) r_min = r_min == 0 ? r : std::min(r_min, r);

  std::map<std::size_t, NaturalProjection> projections;
  for (const auto& [node, r] : orders) {
    const auto t0 = Clock::now();
    NaturalProjection np = natural_projection(cc, r, node, env);
    bool equivariant = true;
    for (std::size_t k = 0; k < np.source_action.size(); ++k)
      equivariant = equivariant && (np.matrix * np.source_action[k] == np.target_action[k] * np.matrix);
    const std::size_t rk = rank(np.matrix);
    const bool idempotent = np.projector * np.projector == np.projector;
    auto c = make_check("natural_projection_node_" + std::to_string(node), equivariant && idempotent &&
                                                                                BigInt(rk) == np.cartan_dim,
                        "rank " + to_string(np.cartan_dim) + ", equivariant, idempotent",
                        "rank " + std::to_string(rk) + (equivariant ? ", equivariant" : ", not equivariant") +
                            (idempotent ? ", idempotent" : ", not idempotent"),
                        "r = " + std::to_string(r) + ", Cartan weight " + weight_text(np.cartan_weight));
    c.seconds = since(t0);
    out.push_back(std::move(c));
    projections.emplace(node, std::move(np));
  }

  for (int i = 0; i <= cc.top_tag(); ++i) {
    const auto t0 = Clock::now();
    const Matrix phi = phi_matrix(cc, i, env);
    const std::size_t dim_vi = cc.tag_block(i).size();
    const std::size_t rk = rank(phi);
    auto c = make_check("phi_injective_" + std::to_string(i), rk == dim_vi, std::to_string(dim_vi),
                        std::to_string(rk));
    c.seconds = since(t0);
    out.push_back(std::move(c));
    if (i < r_min || orders.empty()) {
      const BigInt expected = g.dim_U_minus(i) * static_cast<unsigned long>(n0);
      out.push_back(make_check("phi_isomorphism_" + std::to_string(i), BigInt(rk) == expected &&
                                                                           BigInt(static_cast<unsigned long>(dim_vi)) == expected,
                               to_string(expected), std::to_string(rk)));
    }
    for (const auto& [node, r] : orders) {
      if (i < r) continue;
      const auto t1 = Clock::now();
      const auto& np = projections.at(node);
      const auto low = pbw_basis(nm, i - r).monomials;
      const auto words_r = pbw_basis(nm, r).monomials;
      const auto words_i = pbw_basis(nm, i).monomials;
      std::map<Word, std::size_t> index_i;
      for (std::size_t k = 0; k < words_i.size(); ++k) index_i[words_i[k]] = k;
      bool zero = true;
      for (const auto& lw : low) {
        // g(u) = phi_i(v)(u' u) for u in U_{-r}
        Matrix pick(words_r.size(), words_i.size());
        for (std::size_t k = 0; k < words_r.size(); ++k) {
          Word w = lw;
          w.insert(w.end(), words_r[k].begin(), words_r[k].end());
          for (const auto& [pw, pc] : env.normal_order(w)) pick(k, index_i.at(pw)) += pc;
        }
        const Matrix gm = kron(pick, Matrix::identity(n0)) * phi;
        if (!(np.matrix * gm).is_zero()) {
          zero = false;
          break;
        }
      }
      auto a = make_check("natural_projection_annihilates_node_" + std::to_string(node) + "_degree_" +
                              std::to_string(i),
                          zero, "0", zero ? "0" : "nonzero");
      a.seconds = since(t1);
      out.push_back(std::move(a));
    }
  }
  return out;
}

CheckResult splitting_symbol_check(const CochainComplex& cc, const HodgeData& hd, int j) {
  const auto t0 = Clock::now();
  const NilpotentModel& nm = cc.nilpotent;
  const ModuleModel& mm = cc.module;
  const std::size_t nv = cc.dim_v(), m = nm.dim();
  const auto vj = cc.tag_block(j);
  const std::size_t nj = vj.size();

  // F(w) = (-1)^{p+1} Y_{w_p} ... Y_{w_1} v, first letter acting first.
  auto leaf = [&](const Word& w) {
    Matrix out(nv, nj);
    for (std::size_t c = 0; c < nj; ++c) {
      Vector x(nv);
      x[vj[c]] = 1;
      for (auto a : w) x = mm.rho(nm.lower_index(a)).apply(x);
      const int s = w.size() % 2 == 1 ? 1 : -1;
      for (std::size_t r = 0; r < nv; ++r)
        if (sgn(x[r]) != 0) out(r, c) = s * x[r];
    }
    return out;
  };

  std::function<Matrix(Word&, int, int)> node = [&](Word& prefix, int deg, int slots) -> Matrix {
    Matrix stacked(m * nv, nj);
    for (std::size_t a = 0; a < m; ++a) {
      const int nd = deg + nm.degree(a);
      if (nd + (slots - 1) > j) continue;
      prefix.push_back(a);
      Matrix sub;
      if (slots == 1) {
        if (nd == j) sub = leaf(prefix);
      } else {
        sub = node(prefix, nd, slots - 1);
      }
      prefix.pop_back();
      if (sub.rows() == 0) continue;
      for (std::size_t r = 0; r < nv; ++r)
        for (std::size_t c = 0; c < nj; ++c)
          if (sgn(sub(r, c)) != 0) stacked(a * nv + r, c) = sub(r, c);
    }
    return hd.deltastar1 * stacked;
  };

  Matrix psi(nv, nj);
  for (int i = 1; i <= j; ++i) {
    Word prefix;
    const Matrix t = node(prefix, 0, i);
    psi = i % 2 == 1 ? psi - t : psi + t;
  }
  const Matrix expected = unit_columns(nv, vj).scaled(-1);
  std::string detail;
  const bool pass = psi == expected;
  if (!pass)
    for (std::size_t c = 0; c < nj && detail.empty(); ++c)
      if (!(psi.column(c) == expected.column(c))) detail = "first differing column " + std::to_string(c);
  auto out = make_check("splitting_symbol_" + std::to_string(j), pass, "-id on V_" + std::to_string(j),
                        pass ? "-id" : "differs", detail);
  out.seconds = since(t0);
  return out;
}

CheckResult exactness_check(const CochainComplex& cc, int r) {
  const auto t0 = Clock::now();
  std::string detail;
  bool pass = true;
  for (int i = 1; i < r && pass; ++i) {
    const auto rows1 = CochainComplex::label_block(cc.label1, i);
    const auto rows2 = CochainComplex::label_block(cc.label2, i);
    const auto vi = cc.tag_block(i);
    const std::size_t rk0 = rank(cc.d0.block(rows1, vi));
    const std::size_t ker1 = rows1.size() - rank(cc.d1.block(rows2, rows1));
    if (rk0 != vi.size() || ker1 != rk0) {
      pass = false;
      detail = "degree " + std::to_string(i) + ": rank d0 " + std::to_string(rk0) + ", dim V_i " +
               std::to_string(vi.size()) + ", dim ker d1 " + std::to_string(ker1);
    }
  }
  auto out = make_check("exactness_below_" + std::to_string(r), pass, "exact", pass ? "exact" : "not exact", detail);
  out.seconds = since(t0);
  return out;
}

bool CaseReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

CaseReport verify_case(const StructureConstants& sc, const ParabolicGrading& g, const IntWeight& v_weight,
                       const CaseOptions& options) {
  const RootDatum& d = g.datum();
  CaseReport rep;
  rep.v_weight = v_weight;
  rep.name = (d.lie_type() ? d.lie_type()->name() : std::string("g")) + " sigma=" +
             weight_text(IntWeight(g.sigma().begin(), g.sigma().end())) + " V=" + weight_text(v_weight);
  rep.kostant = kostant_cohomology(g, v_weight);
  rep.grading = grading_decomposition(g, v_weight);
  rep.dim_v = weyl_dim(d, v_weight);

  auto timed = [&](const std::string& name, const std::function<CheckResult()>& f) {
    const auto t0 = Clock::now();
    CheckResult c;
    try {
      c = f();
    } catch (const VerificationError& e) {
      c = make_check(name, false, "", "", e.what());
    }
    if (c.name.empty()) c.name = name;
    c.seconds = since(t0);
    rep.checks.push_back(std::move(c));
    return rep.checks.back().pass;
  };

  ModuleModel mm;
  if (!timed("module_brackets", [&] {
        mm = highest_weight_module(sc, v_weight, options.size_cap);
        return make_check("module_brackets", true, "homomorphism", "homomorphism");
      }))
    return rep;
  timed("module_dimension", [&] {
    return make_check("module_dimension", BigInt(static_cast<unsigned long>(mm.dim())) == rep.dim_v,
                      to_string(rep.dim_v), std::to_string(mm.dim()));
  });

  const NilpotentModel nm = NilpotentModel::build(sc, g);
  const CochainComplex cc = build_complex(mm, nm);
  Enveloping env(cc.nilpotent);

  timed("grading_tags", [&] {
    std::vector<long> dims(static_cast<std::size_t>(cc.top_tag()) + 1, 0);
    for (int t : cc.tags) ++dims[static_cast<std::size_t>(t)];
    std::ostringstream e, a;
    for (auto x : rep.grading.dims) e << x << " ";
    for (auto x : dims) a << x << " ";
    return make_check("grading_tags", dims == rep.grading.dims, e.str(), a.str());
  });
  timed("d_squared_zero", [&] {
    const bool z = (cc.d1 * cc.d0).is_zero();
    return make_check("d_squared_zero", z, "0", z ? "0" : "nonzero");
  });

  HodgeData hd;
  if (!timed("hodge_decomposition", [&] {
        hd = hodge(cc);
        const std::size_t k = hd.ker_laplacian.cols();
        return make_check("hodge_decomposition", true, std::to_string(cc.dim1()),
                          std::to_string(hd.rank_d0) + " + " + std::to_string(hd.rank_dstar2) + " + " +
                              std::to_string(k));
      }))
    return rep;
  const std::size_t k = hd.ker_laplacian.cols();

  // Ranks mod p can only drop, so agreement certifies the exact ones.
  timed("modular_rank_crosscheck", [&] {
    const std::size_t m0 = modular_rank(cc.d0), m1 = modular_rank(cc.d1);
    const std::size_t s1 = modular_rank(hd.dstar1), s2 = modular_rank(hd.dstar2);
    std::ostringstream e, a;
    e << hd.rank_d0 << " " << hd.rank_d1 << " " << hd.rank_dstar1 << " " << hd.rank_dstar2;
    a << m0 << " " << m1 << " " << s1 << " " << s2;
    return make_check("modular_rank_crosscheck", e.str() == a.str(), e.str(), a.str(),
                      simd::isa_name(simd::active_kernels().isa));
  });

  timed("grading_preserved", [&] {
    std::string where;
    const std::vector<std::pair<std::string, bool>> parts = {
        {"d0", respects_labels(cc.d0, cc.label1, cc.label0, &where)},
        {"d1", respects_labels(cc.d1, cc.label2, cc.label1, &where)},
        {"d1*", respects_labels(hd.dstar1, cc.label0, cc.label1, &where)},
        {"d2*", respects_labels(hd.dstar2, cc.label1, cc.label2, &where)},
        {"delta1*", respects_labels(hd.deltastar1, cc.label0, cc.label1, &where)},
        {"delta2*", respects_labels(hd.deltastar2, cc.label1, cc.label2, &where)}};
    for (const auto& [n, ok] : parts)
      if (!ok) return make_check("grading_preserved", false, "all", n, where);
    return make_check("grading_preserved", true, "all", "all");
  });
  timed("codifferential_squared_zero", [&] {
    const bool a = (hd.dstar1 * hd.dstar2).is_zero(), b = (hd.deltastar1 * hd.deltastar2).is_zero();
    return make_check("codifferential_squared_zero", a && b, "0", a && b ? "0" : "nonzero");
  });
  timed("ker_codifferential_split", [&] {
    const std::size_t lhs = cc.dim1() - hd.rank_dstar1, rhs = hd.rank_dstar2 + k;
    return make_check("ker_codifferential_split", lhs == rhs, std::to_string(rhs), std::to_string(lhs));
  });
  timed("ker_differential_split", [&] {
    const std::size_t lhs = cc.dim1() - hd.rank_d1, rhs = hd.rank_d0 + k;
    return make_check("ker_differential_split", lhs == rhs, std::to_string(rhs), std::to_string(lhs));
  });
  timed("v0_is_ker_d0", [&] {
    const bool ok = same_column_span(kernel_basis(cc.d0), unit_columns(cc.dim_v(), cc.tag_block(0)));
    return make_check("v0_is_ker_d0", ok, "V_0", ok ? "V_0" : "differs");
  });

  rep.h0 = cc.dim_v() - hd.rank_d0;
  rep.h1 = (cc.dim1() - hd.rank_d1) - hd.rank_d0;
  BigInt kostant_h1 = 0;
  std::map<int, std::size_t> expected_profile;
  for (const auto& e : rep.kostant.h1) {
    kostant_h1 += e.dim;
    expected_profile[e.grading_degree] += e.dim.get_ui();
  }
  timed("h0_kostant", [&] {
    return make_check("h0_kostant", BigInt(static_cast<unsigned long>(rep.h0)) == rep.kostant.h0.dim,
                      to_string(rep.kostant.h0.dim), std::to_string(rep.h0));
  });
  timed("h1_kostant", [&] {
    return make_check("h1_kostant", BigInt(static_cast<unsigned long>(rep.h1)) == kostant_h1, to_string(kostant_h1),
                      std::to_string(rep.h1));
  });
  timed("h1_laplacian", [&] {
    return make_check("h1_laplacian", k == rep.h1, std::to_string(rep.h1), std::to_string(k));
  });
  timed("h1_location", [&] {
    rep.h1_profile = h1_label_profile(cc, hd);
    std::ostringstream e, a;
    for (const auto& [l, n] : expected_profile) e << l << ":" << n << " ";
    for (const auto& [l, n] : rep.h1_profile) a << l << ":" << n << " ";
    return make_check("h1_location", rep.h1_profile == expected_profile, e.str(), a.str());
  });
  timed("h1_degree_one_support", [&] {
    const bool ok = h1_supported_in_degree_one(cc, hd);
    return make_check("h1_degree_one_support", ok, "degree 1", ok ? "degree 1" : "higher degree");
  });
  timed("grading_v0_h0", [&] {
    const BigInt v0(rep.grading.dims.empty() ? 0L : rep.grading.dims[0]);
    return make_check("grading_v0_h0", v0 == rep.kostant.h0.dim, to_string(rep.kostant.h0.dim), to_string(v0));
  });
  timed("h1_multiplicity_one", [&] {
    const auto dec = g0_decompose(g, cochain1_character(g, freudenthal_multiplicities(d, v_weight)));
    for (const auto& e : rep.kostant.h1) {
      auto it = dec.find(e.full_weight);
      const long mult = it == dec.end() ? 0 : it->second;
      if (mult != 1)
        return make_check("h1_multiplicity_one", false, "1", std::to_string(mult), weight_text(e.full_weight));
    }
    return make_check("h1_multiplicity_one", true, "1", "1");
  });
  timed("phi1_equals_d0", [&] {
    if (cc.top_tag() < 1) return make_check("phi1_equals_d0", true, "vacuous", "vacuous");
    const Matrix phi1 = phi_matrix(cc, 1, env);
    // Degree-1 words are single generators; rows (a, V_0 position) of d0 on V_1.
    const auto words = pbw_basis(nm, 1).monomials;
    const auto v0 = cc.tag_block(0), v1 = cc.tag_block(1);
    std::vector<std::size_t> rows;
    for (const auto& w : words)
      for (auto q : v0) rows.push_back(w[0] * cc.dim_v() + q);
    const bool ok = phi1 == cc.d0.block(rows, v1);
    return make_check("phi1_equals_d0", ok, "equal", ok ? "equal" : "differs");
  });

  std::map<std::size_t, int> orders;
  for (const auto& e : rep.kostant.h1) orders[e.node] = e.grading_degree;
  int r_min = 0;
  for (const auto& [node, r] : orders) r_min = r_min == 0 ? r : std::min(r_min, r);

  if (options.phi) {
    try {
      for (auto& c : verify_phi_ranks(cc, orders, env)) rep.checks.push_back(std::move(c));
    } catch (const VerificationError& e) {
      rep.checks.push_back(make_check("phi", false, "", "", e.what()));
    }
  }
  timed("exactness", [&] { return exactness_check(cc, r_min); });
  if (options.splitting)
    for (int j = 1; j <= cc.top_tag(); ++j)
      timed("splitting_symbol_" + std::to_string(j), [&] { return splitting_symbol_check(cc, hd, j); });
  return rep;
}

}  // namespace parabolica

#pragma once

// Independent reference computations used to derive frozen test values.
// None of these call the library routine they are compared against.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "parabolica/root_system.hpp"
#include "parabolica/weights.hpp"

namespace oracle {

using parabolica::IntWeight;
using parabolica::Root;
using parabolica::RootDatum;

/// All positive roots as the Weyl orbit of the simple roots, reflecting in
/// simple-root coordinates only.
inline std::set<Root> positive_roots_by_reflection(const RootDatum& d) {
  const std::size_t n = d.rank();
  std::set<Root> seen, frontier;
  for (std::size_t i = 0; i < n; ++i) {
    Root a(n, 0);
    a[i] = 1;
    frontier.insert(a);
  }
  while (!frontier.empty()) {
    std::set<Root> next;
    for (const auto& b : frontier) {
      if (!seen.insert(b).second) continue;
      for (std::size_t i = 0; i < n; ++i) {
        int pair = 0;  // <b, a_i^vee>
        for (std::size_t j = 0; j < n; ++j) pair += b[j] * d.cartan(i, j);
        Root c = b;
        c[i] -= pair;
        if (!seen.count(c)) next.insert(c);
      }
    }
    frontier.swap(next);
  }
  std::set<Root> pos;
  for (const auto& r : seen)
    if (std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; })) pos.insert(r);
  return pos;
}

/// dim of the A_n irreducible with fundamental coordinates lambda:
/// prod_{i<j} (lambda_i + ... + lambda_{j-1} + j - i) / (j - i).
inline long type_a_dim(const IntWeight& lambda) {
  const std::size_t n = lambda.size() + 1;
  mpq_class p = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      long s = static_cast<long>(j - i);
      for (std::size_t k = i; k < j; ++k) s += lambda[k];
      p *= mpq_class(s, static_cast<long>(j - i));
    }
  p.canonicalize();
  return p.get_num().get_si();
}

/// Tensor product by multiplying weight characters and peeling off the
/// highest remaining dominant weight.
inline parabolica::Decomposition tensor_by_characters(const RootDatum& d, const IntWeight& a, const IntWeight& b) {
  const auto ca = parabolica::freudenthal_multiplicities(d, a);
  const auto cb = parabolica::freudenthal_multiplicities(d, b);
  std::map<IntWeight, long> prod;
  for (const auto& [wa, ma] : ca)
    for (const auto& [wb, mb] : cb) {
      IntWeight w(wa.size());
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = wa[i] + wb[i];
      prod[w] += ma * mb;
    }
  parabolica::Decomposition out;
  auto height = [&](const IntWeight& w) {
    // pairing with rho^vee, via rho in root coordinates
    const auto rc = d.weight_to_root_coords(parabolica::to_weight(w));
    mpq_class s = 0;
    for (const auto& x : rc) s += x;
    return s;
  };
  while (true) {
    for (auto it = prod.begin(); it != prod.end();) it = it->second == 0 ? prod.erase(it) : std::next(it);
    if (prod.empty()) break;
    auto best = prod.begin();
    for (auto it = prod.begin(); it != prod.end(); ++it)
      if (height(it->first) > height(best->first)) best = it;
    const IntWeight top = best->first;
    const long m = best->second;
    out[top] += m;
    for (const auto& [w, k] : parabolica::freudenthal_multiplicities(d, top)) prod[w] -= m * k;
  }
  return out;
}

/// |N_{a,b}| = p + 1 with p the largest integer such that b - p a is a root.
inline long structure_constant_magnitude(const RootDatum& d, const Root& a, const Root& b) {
  long p = 0;
  while (true) {
    Root c = b;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= static_cast<int>(p + 1) * a[i];
    if (!d.is_root(c)) break;
    ++p;
  }
  return p + 1;
}

}  // namespace oracle

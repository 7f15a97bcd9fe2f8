#include <doctest.h>

#include <map>

#include "parabolica/errors.hpp"
#include "parabolica/parabolic_grading.hpp"

using namespace parabolica;

namespace {

ParabolicGrading grade(const char* t, std::vector<std::size_t> sigma) {
  return ParabolicGrading::build(RootDatum::build(LieType::parse(t)), std::move(sigma));
}

/// Direct bucketing of the roots by their coefficient sum on the crossed nodes.
std::map<int, std::size_t> bucket(const ParabolicGrading& g) {
  std::map<int, std::size_t> out;
  out[0] = g.datum().rank();
  for (const auto& r : g.datum().positive_roots()) {
    int h = 0;
    for (auto j : g.sigma()) h += r[j];
    ++out[h];
    ++out[-h];
  }
  return out;
}

}  // namespace

TEST_CASE("examples of gradings") {
  const auto c3 = grade("C3", {0});
  CHECK(c3.depth() == 2);
  CHECK(c3.dim(-1) == 4);
  CHECK(c3.dim(-2) == 1);
  CHECK(c3.is_contact());
  CHECK(c3.levi_nodes() == std::vector<std::size_t>{1, 2});

  const auto a1 = grade("A1", {0});
  CHECK(a1.depth() == 1);
  CHECK_FALSE(a1.is_contact());

  const auto a2 = grade("A2", {0, 1});
  CHECK(a2.depth() == 2);
  CHECK(a2.center_dim() == 2);
  CHECK(a2.dim(0) == 2);
}

TEST_CASE("graded dimensions match root bucketing") {
  for (auto [t, s] : std::vector<std::pair<const char*, std::vector<std::size_t>>>{
           {"A3", {1}}, {"B3", {0, 2}}, {"C4", {0}}, {"D5", {2}}, {"G2", {0}}, {"G2", {1}}, {"F4", {3}}, {"E6", {1}}}) {
    CAPTURE(t);
    const auto g = grade(t, s);
    const auto b = bucket(g);
    for (int i = -g.depth(); i <= g.depth(); ++i) CHECK(g.dim(i) == b.at(i));
    std::size_t total = 0;
    for (int i = -g.depth(); i <= g.depth(); ++i) total += g.dim(i);
    CHECK(total == g.datum().dimension());
  }
}

TEST_CASE("grading element eigenvalues") {
  const auto g = grade("C2", {0});
  CHECK(g.eigenvalue(g.datum().root_to_int_weight({1, 0})) == 1);
  CHECK(g.eigenvalue(g.datum().root_to_int_weight({0, 1})) == 0);
  CHECK(g.eigenvalue(g.datum().root_to_int_weight({2, 1})) == 2);
  CHECK(g.sigma_height({1, 1}) == 1);
}

TEST_CASE("degree -1 splits by crossed node") {
  const auto g = grade("C2", {0});
  const auto comps = g.g_minus1_decomposition();
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].node == 0);
  CHECK(comps[0].levi_weight == IntWeight{1});
  CHECK(comps[0].dim == 2);

  const auto b = grade("A2", {0, 1});
  CHECK(b.g_minus1_decomposition().size() == 2);
}

TEST_CASE("Levi restriction round trip") {
  const auto g = grade("C3", {0});
  CHECK(g.restrict_to_levi(IntWeight{4, 1, 2}) == IntWeight{1, 2});
  CHECK(g.extend_from_levi(IntWeight{1, 2}) == IntWeight{0, 1, 2});
}

TEST_CASE("invalid crossed sets") {
  const RootDatum d = RootDatum::build(LieType::parse("A3"));
  CHECK_THROWS_AS(ParabolicGrading::build(d, {}), InputError);
  CHECK_THROWS_AS(ParabolicGrading::build(d, {0, 0}), InputError);
  CHECK_THROWS_AS(ParabolicGrading::build(d, {3}), InputError);
}

TEST_CASE("enveloping algebra dimensions from the generating function") {
  const auto heis = grade("C2", {0});
  CHECK(heis.dim_U_minus(0) == 1);
  CHECK(heis.dim_U_minus(1) == 2);
  CHECK(heis.dim_U_minus(2) == 4);
  CHECK(heis.dim_U_minus(3) == 6);
  CHECK(heis.weighted_jet_fiber_dim(2, 1) == 7);
  CHECK(heis.dim_U_minus(-1) == 0);
}

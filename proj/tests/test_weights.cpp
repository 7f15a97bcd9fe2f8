#include <doctest.h>

#include "oracles.hpp"
#include "parabolica/errors.hpp"
#include "parabolica/weights.hpp"

using namespace parabolica;

namespace {

RootDatum make(const char* t) { return RootDatum::build(LieType::parse(t)); }

BigInt total(const WeightTable& t) {
  BigInt s = 0;
  for (const auto& [w, m] : t) s += m;
  return s;
}

}  // namespace

TEST_CASE("Weyl dimension in type A against the product over intervals") {
  for (const char* t : {"A1", "A2", "A3", "A4"}) {
    const RootDatum d = make(t);
    for (int seed = 0; seed < 30; ++seed) {
      IntWeight w(d.rank());
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = (seed * 7 + static_cast<int>(i) * 3) % 4;
      CHECK(weyl_dim(d, w) == oracle::type_a_dim(w));
    }
  }
}

TEST_CASE("known dimensions") {
  CHECK(weyl_dim(make("C2"), {0, 1}) == 5);
  CHECK(weyl_dim(make("C2"), {1, 0}) == 4);
  CHECK(weyl_dim(make("C2"), {2, 0}) == 10);
  CHECK(weyl_dim(make("C2"), {1, 1}) == 16);
  CHECK(weyl_dim(make("G2"), {1, 0}) == 7);
  CHECK(weyl_dim(make("G2"), {0, 1}) == 14);
  CHECK(weyl_dim(make("F4"), {0, 0, 0, 1}) == 26);
  CHECK(weyl_dim(make("E6"), {1, 0, 0, 0, 0, 0}) == 27);
  CHECK(weyl_dim(make("E7"), {0, 0, 0, 0, 0, 0, 1}) == 56);
  CHECK(weyl_dim(make("E8"), {0, 0, 0, 0, 0, 0, 0, 1}) == 248);
  CHECK_THROWS_AS(weyl_dim(make("A2"), {-1, 0}), InputError);
}

TEST_CASE("Freudenthal multiplicities sum to the Weyl dimension") {
  for (auto [t, w] : std::vector<std::pair<const char*, IntWeight>>{{"A2", {2, 1}},
                                                                  {"B3", {1, 0, 1}},
                                                                  {"C3", {0, 1, 1}},
                                                                  {"G2", {1, 1}},
                                                                  {"D4", {1, 0, 0, 1}},
                                                                  {"F4", {1, 0, 0, 0}}}) {
    CAPTURE(t);
    const RootDatum d = make(t);
    CHECK(total(freudenthal_multiplicities(d, w)) == weyl_dim(d, w));
  }
}

TEST_CASE("zero-weight multiplicity of the adjoint is the rank") {
  CHECK(dominant_multiplicities(make("A2"), {1, 1}).at({0, 0}) == 2);
  CHECK(dominant_multiplicities(make("G2"), {0, 1}).at({0, 0}) == 2);
  CHECK(dominant_multiplicities(make("E8"), {0, 0, 0, 0, 0, 0, 0, 1}).at(IntWeight(8, 0)) == 8);
  CHECK(dominant_multiplicities(make("G2"), {1, 0}).at({0, 0}) == 1);
}

TEST_CASE("Klimyk agrees with character multiplication") {
  for (auto [t, a, b] : std::vector<std::tuple<const char*, IntWeight, IntWeight>>{{"A1", {1}, {1}},
                                                                                  {"A1", {3}, {2}},
                                                                                  {"A2", {1, 0}, {0, 1}},
                                                                                  {"A2", {1, 1}, {1, 1}},
                                                                                  {"C2", {1, 0}, {0, 1}},
                                                                                  {"C2", {1, 1}, {2, 0}},
                                                                                  {"G2", {1, 0}, {1, 0}},
                                                                                  {"B3", {0, 0, 1}, {0, 0, 1}}}) {
    CAPTURE(t);
    const RootDatum d = make(t);
    const auto k = tensor_decompose(d, a, b);
    CHECK(k == oracle::tensor_by_characters(d, a, b));
    BigInt dims = 0;
    for (const auto& [w, m] : k) dims += weyl_dim(d, w) * m;
    CHECK(dims == weyl_dim(d, a) * weyl_dim(d, b));
  }
  CHECK(tensor_decompose(make("A1"), IntWeight{1}, IntWeight{1}) == Decomposition{{{0}, 1}, {{2}, 1}});
}

TEST_CASE("label scopes") {
  const RootDatum d = make("A2");
  CHECK_THROWS_AS(tensor_decompose(d, IrrepLabel{Scope::Ambient, {1, 0}}, IrrepLabel{Scope::Levi, {1}}), InputError);
  CHECK(cartan_product_label({Scope::Levi, {1, 2}}, {Scope::Levi, {3, 0}}).weight == IntWeight{4, 2});
}

TEST_CASE("root depth") {
  const RootDatum d = make("A2");
  CHECK(root_depth(d, {1, 1}, {-1, -1}) == std::vector<long>{2, 2});
  CHECK(root_depth(d, {1, 1}, {0, 0}) == std::vector<long>{1, 1});
  CHECK(root_depth(d, {1, 1}, {2, -1}) == std::vector<long>{0, 1});
}

TEST_CASE("prolongation modules on the C2 contact grading") {
  const auto g = ParabolicGrading::build(make("C2"), {0});
  CHECK(construct_V(g, {1}, {{0, 1}}) == IntWeight{0, 1});
  CHECK(construct_V(g, {1}, {{0, 2}}) == IntWeight{1, 1});
  CHECK(construct_V(g, {1}, {}) == IntWeight{0, 1});  // missing order defaults to 1
  CHECK_THROWS_AS(construct_V(g, {1}, {{1, 1}}), InputError);
  CHECK_THROWS_AS(construct_V(g, {1}, {{0, 0}}), InputError);

  const auto coh = kostant_cohomology(g, {0, 1});
  CHECK(coh.h0.levi_weight == IntWeight{1});
  CHECK(coh.h0.dim == 2);
  REQUIRE(coh.h1.size() == 1);
  CHECK(coh.h1[0].node == 0);
  CHECK(coh.h1[0].levi_weight == IntWeight{2});
  CHECK(coh.h1[0].dim == 3);
  CHECK(coh.h1[0].grading_degree == 1);

  const auto coh16 = kostant_cohomology(g, {1, 1});
  CHECK(coh16.h1[0].levi_weight == IntWeight{3});
  CHECK(coh16.h1[0].grading_degree == 2);
}

TEST_CASE("kostant H1 degrees recover the orders") {
  const auto g = ParabolicGrading::build(make("A3"), {0, 2});
  const IntWeight v = construct_V(g, {2}, {{0, 3}, {2, 1}});
  std::map<std::size_t, int> seen;
  for (const auto& e : kostant_h1(g, v)) seen[e.node] = e.grading_degree;
  CHECK(seen == std::map<std::size_t, int>{{0, 3}, {2, 1}});
  CHECK(kostant_h0(g, v).levi_weight == IntWeight{2});
}

TEST_CASE("grading decompositions of C2 contact modules") {
  const auto g = ParabolicGrading::build(make("C2"), {0});
  const auto five = grading_decomposition(g, IntWeight{0, 1});
  CHECK(five.dims == std::vector<long>{2, 1, 2});
  CHECK(five.N == 2);
  const auto adj = grading_decomposition(g, IntWeight{2, 0});
  CHECK(adj.dims == std::vector<long>{1, 2, 4, 2, 1});
  CHECK(adj.N == 4);
}

TEST_CASE("contact closed form spot values") {
  CHECK(contact_bound_closed_form(1, 1, 1) == 5);
  CHECK(contact_bound_closed_form(1, 2, 1) == 16);
  CHECK(contact_bound_closed_form(2, 1, 1) == 14);
  CHECK_THROWS_AS(contact_bound_closed_form(0, 1, 1), InputError);
}

TEST_CASE("solution bounds") {
  const auto g = ParabolicGrading::build(make("C2"), {0});
  CHECK(solution_space_bound(g, {1}, {{0, 1}}).bound == 5);
  CHECK(solution_space_bound(g, {1}, {{0, 1}}).N == 2);
  CHECK(solution_space_bound(g, {1}, {{0, 2}}).bound == 16);
  const auto b = ParabolicGrading::build(make("A1"), {0});
  CHECK(solution_space_bound(b, {}, {{0, 1}}).bound == 1);
  CHECK(solution_space_bound(b, {}, {{0, 1}}).N == 0);
}

TEST_CASE("H1 labels have multiplicity one in the degree-one cochains") {
  const auto g = ParabolicGrading::build(make("C2"), {0});
  for (const IntWeight& v : {IntWeight{0, 1}, IntWeight{2, 0}, IntWeight{1, 1}}) {
    const auto dec = g0_decompose(g, cochain1_character(g, freudenthal_multiplicities(g.datum(), v)));
    for (const auto& e : kostant_h1(g, v)) CHECK(dec.at(e.full_weight) == 1);
  }
}

#include <doctest.h>

#include "oracles.hpp"
#include "parabolica/chevalley.hpp"
#include "parabolica/errors.hpp"
#include "parabolica/weights.hpp"

using namespace parabolica;

namespace {

RootDatum make(const char* t) { return RootDatum::build(LieType::parse(t)); }

Root negate(Root r) {
  for (auto& x : r) x = -x;
  return r;
}

Root sum(const Root& a, const Root& b) {
  Root c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

}  // namespace

TEST_CASE("structure constants on every root pair") {
  for (const char* t : {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "G2"}) {
    CAPTURE(t);
    const RootDatum d = make(t);
    const StructureConstants sc = StructureConstants::build(d);  // includes the Jacobi check
    CHECK(sc.dim() == d.dimension());
    std::vector<Root> roots;
    for (const auto& r : d.positive_roots()) {
      roots.push_back(r);
      roots.push_back(negate(r));
    }
    for (const auto& a : roots)
      for (const auto& b : roots) {
        const Root s = sum(a, b);
        const auto& br = sc.bracket(sc.root_vector_index(a), sc.root_vector_index(b));
        if (!d.is_root(s)) {
          if (std::any_of(s.begin(), s.end(), [](int x) { return x != 0; })) CHECK(br.empty());
          continue;
        }
        REQUIRE(br.size() == 1);
        CHECK(br[0].first == sc.root_vector_index(s));
        CHECK(std::abs(br[0].second) == oracle::structure_constant_magnitude(d, a, b));
        // Chevalley involution: N_{-a,-b} = -N_{a,b}
        const auto& nb = sc.bracket(sc.root_vector_index(negate(a)), sc.root_vector_index(negate(b)));
        REQUIRE(nb.size() == 1);
        CHECK(nb[0].second == -br[0].second);
      }
  }
}

TEST_CASE("root vectors pair to coroots") {
  const RootDatum d = make("C3");
  const StructureConstants sc = StructureConstants::build(d);
  for (std::size_t k = 0; k < d.num_positive_roots(); ++k) {
    const auto& br = sc.bracket(sc.pos_index(k), sc.neg_index(k));
    const Vector h = sc.coroot(k);
    Vector got(d.rank());
    for (const auto& [i, c] : br) {
      REQUIRE(sc.is_cartan(i));
      got[i] = c;
    }
    CHECK(got == h);
    // h_b acts on x_b by 2
    const auto& act = sc.bracket(sc.pos_index(k), sc.pos_index(k));
    CHECK(act.empty());
  }
}

TEST_CASE("Cartan elements act by coroot pairings") {
  const RootDatum d = make("G2");
  const StructureConstants sc = StructureConstants::build(d);
  for (std::size_t i = 0; i < d.rank(); ++i)
    for (std::size_t k = 0; k < d.num_positive_roots(); ++k) {
      const auto& br = sc.bracket(sc.h_index(i), sc.pos_index(k));
      const int pairing = d.coroot_pairing(d.positive_roots()[k], i);
      if (pairing == 0) {
        CHECK(br.empty());
      } else {
        REQUIRE(br.size() == 1);
        CHECK(br[0].second == pairing);
      }
    }
}

TEST_CASE("exceptional tables build") {
  CHECK(StructureConstants::build(make("F4")).dim() == 52);
}

TEST_CASE("highest-weight modules") {
  const RootDatum d = make("C2");
  const StructureConstants sc = StructureConstants::build(d);
  for (const IntWeight& w : {IntWeight{0, 0}, IntWeight{1, 0}, IntWeight{0, 1}, IntWeight{2, 0}, IntWeight{1, 1}}) {
    const ModuleModel mm = highest_weight_module(sc, w);
    CHECK(BigInt(static_cast<unsigned long>(mm.dim())) == weyl_dim(d, w));
    WeightTable seen;
    for (const auto& x : mm.weights) ++seen[x];
    CHECK(seen == freudenthal_multiplicities(d, w));
  }
  CHECK_THROWS_AS(highest_weight_module(sc, {1, 1}, 10), SizeCapError);
}

TEST_CASE("modules for other types") {
  for (auto [t, w] : std::vector<std::pair<const char*, IntWeight>>{
           {"G2", {1, 0}}, {"A3", {1, 0, 1}}, {"B3", {0, 0, 1}}, {"D4", {0, 1, 0, 0}}}) {
    CAPTURE(t);
    const RootDatum d = make(t);
    const StructureConstants sc = StructureConstants::build(d);
    const ModuleModel mm = highest_weight_module(sc, w);  // checks every bracket
    CHECK(BigInt(static_cast<unsigned long>(mm.dim())) == weyl_dim(d, w));
  }
}

TEST_CASE("grading tags start at zero") {
  const RootDatum d = make("C2");
  const StructureConstants sc = StructureConstants::build(d);
  const ModuleModel mm = highest_weight_module(sc, {0, 1});
  const auto tags = mm.grading_tags(ParabolicGrading::build(d, {0}));
  std::vector<int> count(3, 0);
  for (int t : tags) ++count.at(static_cast<std::size_t>(t));
  CHECK(count == std::vector<int>{2, 1, 2});
}

TEST_CASE("size cap from the environment") {
  setenv("PARABOLICA_SIZE_CAP", "17", 1);
  CHECK(default_size_cap() == 17);
  unsetenv("PARABOLICA_SIZE_CAP");
  CHECK(default_size_cap() == 400);
}

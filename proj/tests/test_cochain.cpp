#include <doctest.h>

#include "grid.hpp"
#include "parabolica/cochain.hpp"
#include "parabolica/errors.hpp"

using namespace parabolica;

namespace {

struct Built {
  RootDatum d;
  ParabolicGrading g;
  StructureConstants sc;
  NilpotentModel nm;
  ModuleModel mm;
  CochainComplex cc;
  Built(const char* t, std::vector<std::size_t> sigma, const IntWeight& v)
      : d(RootDatum::build(LieType::parse(t))),
        g(ParabolicGrading::build(d, std::move(sigma))),
        sc(StructureConstants::build(d)),
        nm(NilpotentModel::build(sc, g)),
        mm(highest_weight_module(sc, v)),
        cc(build_complex(mm, nm)) {}
};

const CheckResult* find(const CaseReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("every grid case passes the full suite") {
  for (const auto& c : grid::cases()) {
    const RootDatum d = RootDatum::build(LieType::parse(c.type));
    const auto g = ParabolicGrading::build(d, c.sigma);
    const auto sc = StructureConstants::build(d);
    const CaseReport r = verify_case(sc, g, c.v);
    CAPTURE(r.name);
    for (const auto& ch : r.checks) {
      CAPTURE(ch.name);
      CAPTURE(ch.detail);
      CHECK(ch.pass);
    }
    CHECK(r.checks.size() > 15);
  }
}

TEST_CASE("cohomology of the A1 Borel") {
  // V = S^m C^2: H^0 is the lowest line, H^1 sits in degree m + 1.
  for (long m = 0; m <= 4; ++m) {
    Built b("A1", {0}, {m});
    CHECK(h0_dim(b.cc) == 1);
    CHECK(h1_dim(b.cc) == 1);
    const HodgeData hd = hodge(b.cc);
    CHECK(h1_location_check(b.cc, hd) == m + 1);
  }
}

TEST_CASE("trivial coefficients") {
  Built b("C2", {0}, {0, 0});
  CHECK(b.cc.dim_v() == 1);
  CHECK(h0_dim(b.cc) == 1);
  CHECK(h1_dim(b.cc) == 2);  // g_{-1}^* in degree 1
  const HodgeData hd = hodge(b.cc);
  CHECK(h1_label_profile(b.cc, hd) == std::map<int, std::size_t>{{1, 2}});
  CHECK(exactness_check(b.cc, 1).pass);
}

TEST_CASE("phi in degree one is the differential") {
  Built b("C2", {0}, {0, 1});
  Enveloping env(b.cc.nilpotent);
  const Matrix phi1 = phi_matrix(b.cc, 1, env);
  CHECK(phi1.cols() == 1);
  CHECK(phi1.rows() == 2 * 2);
  CHECK(rank(phi1) == 1);
}

TEST_CASE("natural projection onto the Cartan component") {
  Built b("C2", {0}, {1, 1});
  Enveloping env(b.cc.nilpotent);
  const NaturalProjection np = natural_projection(b.cc, 2, 0, env);
  CHECK(np.cartan_weight == IntWeight{3});
  CHECK(np.cartan_dim == 4);
  CHECK(np.projector * np.projector == np.projector);
  CHECK(rank(np.matrix) == 4);
  for (std::size_t k = 0; k < np.source_action.size(); ++k)
    CHECK(np.matrix * np.source_action[k] == np.target_action[k] * np.matrix);
  CHECK_THROWS_AS(natural_projection(b.cc, 0, 0, env), InputError);
  CHECK_THROWS_AS(natural_projection(b.cc, 1, 1, env), InputError);
}

TEST_CASE("a wrong order is caught by the annihilation check") {
  // V built with r = 2; claiming r = 1 must make the projection see phi_1.
  Built b("C2", {0}, {1, 1});
  Enveloping env(b.cc.nilpotent);
  bool caught = false;
  for (const auto& c : verify_phi_ranks(b.cc, {{0, 1}}, env))
    if (c.name == "natural_projection_annihilates_node_0_degree_1") caught = !c.pass;
  CHECK(caught);
}

TEST_CASE("corrupted complexes fail") {
  Built b("C2", {0}, {0, 1});
  CochainComplex bad = b.cc;
  // flip the sign of the bracket term -f([Y_0, Y_1]) on the Heisenberg pair
  const std::size_t nv = bad.dim_v();
  const auto& br = bad.nilpotent.bracket(0, 1);
  REQUIRE(br.size() == 1);
  for (std::size_t u = 0; u < nv; ++u) bad.d1(0 * nv + u, br[0].first * nv + u) *= -1;
  CHECK_FALSE((bad.d1 * bad.d0).is_zero());

  HodgeData hd = hodge(b.cc);
  CHECK(splitting_symbol_check(b.cc, hd, 2).pass);
  hd.deltastar1 = hd.deltastar1.scaled(2);
  const CheckResult broken = splitting_symbol_check(b.cc, hd, 2);
  CHECK_FALSE(broken.pass);
  CHECK_FALSE(broken.detail.empty());
}

TEST_CASE("exactness fails past the order") {
  // V dim 5 comes from r = 1; pretending r = 3 breaks exactness at i = 1 or 2.
  Built b("C2", {0}, {0, 1});
  CHECK(exactness_check(b.cc, 1).pass);
  CHECK_FALSE(exactness_check(b.cc, 3).pass);
}

TEST_CASE("report fields for the adjoint") {
  const RootDatum d = RootDatum::build(LieType::parse("C2"));
  const auto g = ParabolicGrading::build(d, {0});
  const auto r = verify_case(StructureConstants::build(d), g, {2, 0});
  CHECK(r.pass());
  CHECK(r.dim_v == 10);
  CHECK(r.grading.dims == std::vector<long>{1, 2, 4, 2, 1});
  REQUIRE(find(r, "splitting_symbol_4") != nullptr);
  CHECK(find(r, "modular_rank_crosscheck")->pass);
}

TEST_CASE("size cap propagates") {
  const RootDatum d = RootDatum::build(LieType::parse("C2"));
  const auto g = ParabolicGrading::build(d, {0});
  CaseOptions opt;
  opt.size_cap = 4;
  CHECK_THROWS_AS(verify_case(StructureConstants::build(d), g, {1, 1}, opt), SizeCapError);
}

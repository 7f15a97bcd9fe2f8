// Acceptance suite: one PASS/FAIL line per criterion.
// usage: acceptance <cli-binary> <golden-contact-table> <verify-spec>

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

#include "grid.hpp"
#include "parabolica/cochain.hpp"
#include "parabolica/report.hpp"

using namespace parabolica;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct GridRun {
  grid::Case input;
  CaseReport report;
  double seconds = 0;
};

std::vector<GridRun> g_grid;
double g_grid_seconds = 0;

const CheckResult* find(const CaseReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

void require_checks(Outcome& o, const std::vector<std::string>& names, const std::function<bool(const GridRun&)>& on) {
  for (const auto& run : g_grid) {
    if (!on(run)) continue;
    for (const auto& n : names) {
      const CheckResult* c = find(run.report, n);
      if (!c)
        o.fail(run.report.name + ": missing " + n);
      else if (!c->pass)
        o.fail(run.report.name + ": " + n + " expected " + c->expected + " got " + c->actual + " " + c->detail);
    }
  }
}

bool any(const GridRun&) { return true; }

bool is_case(const GridRun& r, const char* type, long dim) {
  return std::string(r.input.type) == type && r.report.dim_v == dim;
}

std::pair<int, std::string> run_command(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, out};
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

IntWeight g1_dual(const ParabolicGrading& g, int t) { return symmetric_power_dual_weight(g, t); }

Outcome contact_formula() {
  Outcome o;
  for (int n = 1; n <= 4; ++n) {
    const RootDatum d = RootDatum::build(LieType{'C', n + 1});
    const auto g = ParabolicGrading::build(d, {0});
    for (int r = 1; r <= 5; ++r) {
      const BigInt a = weyl_dim(d, construct_V(g, g1_dual(g, 1), {{0, r}}));
      const BigInt b = contact_bound_closed_form(n, r, 1);
      if (a != b) o.fail("(n, r) = (" + std::to_string(n) + ", " + std::to_string(r) + "): " + to_string(a) +
                         " vs " + to_string(b));
    }
  }
  if (contact_bound_closed_form(1, 1, 1) != 5 || contact_bound_closed_form(1, 2, 1) != 16 ||
      contact_bound_closed_form(2, 1, 1) != 14)
    o.fail("spot values");
  return o;
}

Outcome second_contact_formula() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) {
    const RootDatum d = RootDatum::build(LieType{'C', n + 1});
    const auto g = ParabolicGrading::build(d, {0});
    for (int t = 1; t <= 3; ++t)
      for (int r = 1; r <= 3; ++r) {
        const BigInt a = weyl_dim(d, construct_V(g, g1_dual(g, t), {{0, r}}));
        const BigInt b = contact_bound_closed_form(n, r, t);
        if (a != b)
          o.fail("(n, r, t) = (" + std::to_string(n) + ", " + std::to_string(r) + ", " + std::to_string(t) + ")");
        if (t == 1 && b != weyl_dim(d, construct_V(g, g1_dual(g, 1), {{0, r}}))) o.fail("t = 1 column");
      }
  }
  return o;
}

Outcome kostant_vs_brute_force() {
  Outcome o;
  require_checks(o, {"h0_kostant", "h1_kostant", "h1_laplacian", "h1_location"}, any);
  if (g_grid_seconds >= 60) o.fail("runtime " + std::to_string(g_grid_seconds) + " s");
  return o;
}

Outcome structural_identities() {
  Outcome o;
  require_checks(o,
                 {"d_squared_zero", "codifferential_squared_zero", "hodge_decomposition", "v0_is_ker_d0",
                  "ker_codifferential_split", "ker_differential_split", "grading_preserved",
                  "modular_rank_crosscheck"},
                 any);
  return o;
}

Outcome phi_maps() {
  Outcome o;
  for (const auto& run : g_grid) {
    const int top = static_cast<int>(run.report.grading.dims.size()) - 1;
    std::vector<std::string> names = {"phi1_equals_d0"};
    for (int i = 0; i <= top; ++i) names.push_back("phi_injective_" + std::to_string(i));
    int r_min = 0;
    for (const auto& e : run.report.kostant.h1) r_min = r_min == 0 ? e.grading_degree : std::min(r_min, e.grading_degree);
    for (int i = 0; i < std::min(r_min, top + 1); ++i) names.push_back("phi_isomorphism_" + std::to_string(i));
    for (const auto& e : run.report.kostant.h1) {
      names.push_back("natural_projection_node_" + std::to_string(e.node));
      for (int i = e.grading_degree; i <= top; ++i)
        names.push_back("natural_projection_annihilates_node_" + std::to_string(e.node) + "_degree_" +
                        std::to_string(i));
    }
    names.push_back("exactness_below_" + std::to_string(r_min));
    require_checks(o, names, [&](const GridRun& r) { return &r == &run; });
  }
  return o;
}

Outcome splitting_symbol() {
  Outcome o;
  std::size_t covered = 0;
  for (const auto& run : g_grid) {
    const bool target = is_case(run, "C2", 5) || is_case(run, "C2", 16) || std::string(run.input.type) == "A1";
    if (!target) continue;
    ++covered;
    std::vector<std::string> names;
    for (int j = 1; j <= run.report.grading.N; ++j) names.push_back("splitting_symbol_" + std::to_string(j));
    require_checks(o, names, [&](const GridRun& r) { return &r == &run; });
  }
  if (covered != 7) o.fail("expected 7 target cases, saw " + std::to_string(covered));
  return o;
}

Outcome enveloping_dims() {
  Outcome o;
  for (auto [t, sigma] : std::vector<std::pair<const char*, std::vector<std::size_t>>>{{"C2", {0}}, {"A2", {0, 1}}}) {
    const RootDatum d = RootDatum::build(LieType::parse(t));
    const auto g = ParabolicGrading::build(d, sigma);
    const auto sc = StructureConstants::build(d);
    const auto nm = NilpotentModel::build(sc, g);
    for (int i = 0; i <= 10; ++i)
      if (g.dim_U_minus(i) != static_cast<unsigned long>(pbw_basis(nm, i).monomials.size()))
        o.fail(std::string(t) + " degree " + std::to_string(i));
    if (g.dim_U_minus(3) != 6) o.fail(std::string(t) + ": dim U_{-3} != 6");
    if (g.weighted_jet_fiber_dim(2, 1) != 7) o.fail(std::string(t) + ": jet fiber != 7");
  }
  return o;
}

Outcome multiplicity_one() {
  Outcome o;
  require_checks(o, {"h1_multiplicity_one"}, any);
  return o;
}

Outcome grading_decompositions() {
  Outcome o;
  const RootDatum d = RootDatum::build(LieType::parse("C2"));
  const auto g = ParabolicGrading::build(d, {0});
  const auto five = grading_decomposition(g, IntWeight{0, 1});
  const auto adj = grading_decomposition(g, IntWeight{2, 0});
  if (five.dims != std::vector<long>{2, 1, 2} || five.N != 2) o.fail("dim 5 decomposition");
  if (adj.dims != std::vector<long>{1, 2, 4, 2, 1} || adj.N != 4) o.fail("adjoint decomposition");
  require_checks(o, {"grading_tags"}, [](const GridRun& r) { return std::string(r.input.type) == "C2"; });
  return o;
}

Outcome cli_contract(const std::string& cli, const std::string& golden, const std::string& spec) {
  Outcome o;
  std::ifstream in(golden, std::ios::binary);
  if (!in) {
    o.fail("cannot read " + golden);
    return o;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  const auto [rc, out] = run_command("'" + cli + "' contact-table 3 3 2");
  if (rc != 0) o.fail("contact-table exit " + std::to_string(rc));
  if (out != ss.str()) o.fail("contact-table output differs from golden file");
  const auto t0 = Clock::now();
  const auto [vrc, vout] = run_command("'" + cli + "' verify --spec '" + spec + "' > /dev/null");
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (vrc != 0) o.fail("verify exit " + std::to_string(vrc));
  if (secs >= 5) o.fail("verify took " + std::to_string(secs) + " s");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 4) {
    std::cerr << "usage: acceptance <cli> <golden> <spec>\n";
    return 2;
  }
  const auto g0 = Clock::now();
  for (const auto& c : grid::cases()) {
    const auto t0 = Clock::now();
    const RootDatum d = RootDatum::build(LieType::parse(c.type));
    const auto g = ParabolicGrading::build(d, c.sigma);
    GridRun run{c, verify_case(StructureConstants::build(d), g, c.v), 0};
    run.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    g_grid.push_back(std::move(run));
  }
  g_grid_seconds = std::chrono::duration<double>(Clock::now() - g0).count();

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"contact formula equality, n <= 4, r <= 5", contact_formula},
      {"second contact formula, n, t, r <= 3", second_contact_formula},
      {"Kostant cohomology equals matrix-rank cohomology on the grid", kostant_vs_brute_force},
      {"structural identities on the grid", structural_identities},
      {"phi-map ranks and natural projection", phi_maps},
      {"splitting symbol is -id", splitting_symbol},
      {"enveloping-algebra dimensions", enveloping_dims},
      {"H1 multiplicity one", multiplicity_one},
      {"C2 grading decompositions", grading_decompositions},
      {"CLI contract", [&] { return cli_contract(argv[1], argv[2], argv[3]); }},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (k == 2) secs += g_grid_seconds;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << (k + 1) << ": " << criteria[k].first << " ("
              << std::fixed << std::setprecision(2) << secs << " s)";
    if (!o.pass) std::cout << "  -- " << o.detail;
    std::cout << "\n";
    failed += o.pass ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << " ("
            << g_grid.size() << " grid cases)\n";
  return failed == 0 ? 0 : 1;
}

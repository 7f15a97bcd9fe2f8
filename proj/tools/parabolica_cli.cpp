#include <CLI11.hpp>

#include <atomic>
#include <iostream>
#include <mutex>
#include <thread>

#include "parabolica/errors.hpp"
#include "parabolica/report.hpp"

using namespace parabolica;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kVerificationFailed = 1, kInputError = 2 };

struct Inline {
  std::string type;
  std::vector<std::size_t> sigma;
  std::vector<long> e_weight;
  std::vector<std::string> orders;
  std::vector<long> v_weight;
};

struct Common {
  std::vector<std::string> specs;
  std::string format = "text";
  std::size_t size_cap = 0;
  unsigned jobs = 1;
  bool real_form = false;
  Inline in;
};

void add_inline(CLI::App* cmd, Common& c, bool with_v = false) {
  cmd->add_option("--spec", c.specs, "Problem file (JSON); repeatable")->check(CLI::ExistingFile);
  cmd->add_option("--type", c.in.type, "Lie type, e.g. C3");
  cmd->add_option("--sigma", c.in.sigma, "Crossed nodes (1-based)")->delimiter(',');
  cmd->add_option("--e-weight", c.in.e_weight, "Highest weight of E on the uncrossed nodes")->delimiter(',');
  cmd->add_option("--orders", c.in.orders, "node:order pairs, e.g. 1:2")->delimiter(',');
  if (with_v) cmd->add_option("--v-weight", c.in.v_weight, "Highest weight of V (all nodes)")->delimiter(',');
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--size-cap", c.size_cap, "Largest module dimension built explicitly");
  cmd->add_flag("--real-form", c.real_form, "Print the note on real forms");
}

std::vector<ProblemSpec> collect_specs(const Common& c) {
  std::vector<ProblemSpec> out;
  for (const auto& path : c.specs) out.push_back(load_problem_spec(path));
  if (!c.in.type.empty()) {
    ProblemSpec s;
    s.source = "<command line>";
    s.type = LieType::parse(c.in.type);
    for (auto x : c.in.sigma) {
      if (x < 1 || x > static_cast<std::size_t>(s.type.rank)) throw InputError("--sigma: node out of range");
      s.sigma.push_back(x - 1);
    }
    s.e_weight = c.in.e_weight;
    for (const auto& o : c.in.orders) {
      const auto colon = o.find(':');
      if (colon == std::string::npos) throw InputError("--orders: expected node:order, got \"" + o + "\"");
      std::size_t node = 0;
      int r = 0;
      try {
        node = std::stoul(o.substr(0, colon));
        r = std::stoi(o.substr(colon + 1));
      } catch (const std::exception&) {
        throw InputError("--orders: expected node:order, got \"" + o + "\"");
      }
      if (node < 1) throw InputError("--orders: nodes are 1-based");
      s.orders[node - 1] = r;
    }
    validate_problem_spec(s);
    out.push_back(std::move(s));
  } else if (!c.in.sigma.empty() || !c.in.e_weight.empty() || !c.in.orders.empty()) {
    throw InputError("--type is required with inline problem flags");
  }
  if (out.empty()) throw InputError("no problem given: use --spec or --type/--sigma");
  if (c.size_cap > 0)
    for (auto& s : out) s.size_cap = c.size_cap;
  return out;
}

void print_real_form_note(bool on) {
  if (on)
    std::cout << "note: all dimensions are complex dimensions of the complexified data; for a real form the "
                 "same numbers are real dimensions of the corresponding real representations.\n";
}

int cmd_grade(const Common& c) {
  json all = json::array();
  for (const auto& s : collect_specs(c)) {
    const RootDatum d = RootDatum::build(s.type);
    const GradingSummary g = summarize_grading(ParabolicGrading::build(d, s.sigma));
    if (c.format == "json") {
      json dims = json::object();
      for (const auto& [i, n] : g.dims) dims[std::to_string(i)] = n;
      all.push_back({{"type", g.type},
                     {"sigma", g.sigma},
                     {"levi_nodes", g.levi_nodes},
                     {"depth", g.depth},
                     {"dims", dims},
                     {"center_dim", g.center_dim},
                     {"contact", g.contact}});
    } else {
      std::cout << grading_text(g);
    }
  }
  if (c.format == "json") std::cout << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
  print_real_form_note(c.real_form);
  return kOk;
}

int cmd_bound(const Common& c) {
  json all = json::array();
  for (auto s : collect_specs(c)) {
    s.verify = false;
    const Report r = build_report(s);
    if (c.format == "json")
      all.push_back(report_to_json(r));
    else
      std::cout << report_text(r);
  }
  if (c.format == "json") std::cout << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
  print_real_form_note(c.real_form);
  return kOk;
}

int cmd_cohomology(const Common& c) {
  // Either V directly or V built from E and the orders.
  std::vector<std::pair<ParabolicGrading, IntWeight>> cases;
  if (!c.in.v_weight.empty()) {
    if (c.in.type.empty()) throw InputError("--v-weight needs --type and --sigma");
    Common base = c;
    base.in.v_weight.clear();
    base.in.e_weight.clear();
    base.in.orders.clear();
    base.specs.clear();
    const auto s = collect_specs(base).front();
    const RootDatum d = RootDatum::build(s.type);
    if (c.in.v_weight.size() != d.rank()) throw InputError("--v-weight: expected one entry per node");
    cases.emplace_back(ParabolicGrading::build(d, s.sigma), c.in.v_weight);
  } else {
    for (const auto& s : collect_specs(c)) {
      const RootDatum d = RootDatum::build(s.type);
      const ParabolicGrading g = ParabolicGrading::build(d, s.sigma);
      const IntWeight e = s.e_weight.empty() ? IntWeight(g.levi_nodes().size(), 0) : s.e_weight;
      cases.emplace_back(g, construct_V(g, e, s.orders));
    }
  }
  json all = json::array();
  for (const auto& [g, v] : cases) {
    const CohomologyReport coh = kostant_cohomology(g, v);
    if (c.format == "json") {
      json h1 = json::array();
      for (const auto& e : coh.h1)
        h1.push_back({{"node", e.node + 1},
                      {"levi_weight", e.levi_weight},
                      {"dim", to_string(e.dim)},
                      {"grading_degree", e.grading_degree}});
      all.push_back({{"v_label", v},
                     {"h0", {{"levi_weight", coh.h0.levi_weight}, {"dim", to_string(coh.h0.dim)}}},
                     {"h1", h1}});
    } else {
      std::cout << "V label " << json(v).dump() << "\n";
      std::cout << "H0      " << json(coh.h0.levi_weight).dump() << " dim " << to_string(coh.h0.dim) << "\n";
      for (const auto& e : coh.h1)
        std::cout << "H1      node " << e.node + 1 << " " << json(e.levi_weight).dump() << " dim "
                  << to_string(e.dim) << " degree " << e.grading_degree << "\n";
    }
  }
  if (c.format == "json") std::cout << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
  print_real_form_note(c.real_form);
  return kOk;
}

int cmd_contact_table(int n, int r, int t, const std::string& format) {
  const auto rows = contact_table(n, r, t);
  int status = kOk;
  if (format == "json") {
    json a = json::array();
    for (const auto& row : rows)
      a.push_back({{"n", row.n},
                   {"r", row.r},
                   {"t", row.t},
                   {"closed_form", to_string(row.closed_form)},
                   {"weyl_dim", to_string(row.pipeline)}});
    std::cout << a.dump(2) << "\n";
  } else {
    std::cout << contact_table_text(rows);
  }
  for (const auto& row : rows)
    if (row.closed_form != row.pipeline) {
      std::cerr << "mismatch at (n, r, t) = (" << row.n << ", " << row.r << ", " << row.t << ")\n";
      status = kVerificationFailed;
    }
  return status;
}

int cmd_verify(const Common& c) {
  auto specs = collect_specs(c);
  for (auto& s : specs) s.verify = true;
  std::vector<Report> reports(specs.size());
  std::vector<std::string> errors(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < specs.size();) {
      try {
        reports[k] = build_report(specs[k]);
      } catch (const InputError& e) {
        errors[k] = e.what();
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(c.jobs, static_cast<unsigned>(specs.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 0; i + 1 < jobs; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (std::size_t k = 0; k < specs.size(); ++k)
    if (!errors[k].empty()) throw InputError(errors[k]);

  bool ok = true;
  json all = json::array();
  for (std::size_t k = 0; k < specs.size(); ++k) {
    ok = ok && reports[k].all_pass();
    if (c.format == "json") {
      json j = report_to_json(reports[k]);
      j["source"] = specs[k].source;
      all.push_back(j);
    } else {
      std::cout << "== " << specs[k].source << "\n" << report_text(reports[k]);
    }
    for (const auto& ch : reports[k].checks)
      if (!ch.pass) std::cerr << specs[k].source << ": check failed: " << ch.name << "\n";
  }
  if (c.format == "json") std::cout << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
  print_real_form_note(c.real_form);
  return ok ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prolongation bounds and cochain verification for parabolic gradings"};
  app.require_subcommand(1);
  Common grade, bound, coh, verify;
  add_inline(app.add_subcommand("grade", "Grading summary"), grade);
  add_inline(app.add_subcommand("bound", "Prolongation module and solution-space bound"), bound);
  add_inline(app.add_subcommand("cohomology", "Kostant H0 and H1"), coh, true);
  auto* ver = app.add_subcommand("verify", "Brute-force cochain checks");
  add_inline(ver, verify);
  ver->add_option("--jobs", verify.jobs, "Concurrent specs")->check(CLI::PositiveNumber);

  int tn = 0, tr = 0, tt = 0;
  std::string table_format = "text";
  auto* table = app.add_subcommand("contact-table", "Closed form against the pipeline on C_{n+1}");
  table->add_option("n_max", tn)->required()->check(CLI::PositiveNumber);
  table->add_option("r_max", tr)->required()->check(CLI::PositiveNumber);
  table->add_option("t_max", tt)->required()->check(CLI::PositiveNumber);
  table->add_option("--format", table_format)->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (app.got_subcommand("grade")) return cmd_grade(grade);
    if (app.got_subcommand("bound")) return cmd_bound(bound);
    if (app.got_subcommand("cohomology")) return cmd_cohomology(coh);
    if (app.got_subcommand("verify")) return cmd_verify(verify);
    if (app.got_subcommand("contact-table")) return cmd_contact_table(tn, tr, tt, table_format);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kVerificationFailed;
  }
  return kInputError;
}

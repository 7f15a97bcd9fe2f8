#include "parabolica/report.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "parabolica/chevalley.hpp"
#include "parabolica/errors.hpp"

namespace parabolica {

using nlohmann::json;

namespace {

std::size_t line_of_offset(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(offset), '\n'));
}

/// Line of the first occurrence of "field" as a key, else 1.
std::size_t line_of_field(const std::string& text, const std::string& field) {
  const auto pos = text.find("\"" + field + "\"");
  return pos == std::string::npos ? 1 : line_of_offset(text, pos);
}

struct SpecReader {
  const std::string& text;
  const std::string& source;

  [[noreturn]] void fail(const std::string& field, const std::string& message) const {
    throw InputError(source + ":" + std::to_string(line_of_field(text, field)) + ": " + field + ": " + message);
  }

  long integer(const json& v, const std::string& field) const {
    if (v.is_number_float()) fail(field, "floating point is not accepted");
    if (!v.is_number_integer()) fail(field, "expected an integer");
    return v.get<long>();
  }

  std::vector<long> integer_list(const json& v, const std::string& field) const {
    if (!v.is_array()) fail(field, "expected a list of integers");
    std::vector<long> out;
    for (const auto& x : v) out.push_back(integer(x, field));
    return out;
  }
};

std::string weight_text(const IntWeight& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ", " : "") + std::to_string(w[i]);
  return s + "]";
}

template <class T>
std::string list_text(const std::vector<T>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << "]";
  return os.str();
}

BigInt big_from_json(const json& v, const char* field) {
  if (!v.is_string()) throw InputError(std::string("report: ") + field + " must be a decimal string");
  BigInt z;
  if (z.set_str(v.get<std::string>(), 10) != 0) throw InputError(std::string("report: bad integer in ") + field);
  return z;
}

}  // namespace

ProblemSpec parse_problem_spec(const std::string& text, const std::string& source) {
  json doc;
  // nlohmann keeps the last of repeated keys; reject them instead.
  std::vector<std::set<std::string>> open_keys;
  auto no_duplicates = [&](int, json::parse_event_t ev, json& parsed) {
    if (ev == json::parse_event_t::object_start) {
      open_keys.emplace_back();
    } else if (ev == json::parse_event_t::object_end) {
      open_keys.pop_back();
    } else if (ev == json::parse_event_t::key) {
      const auto key = parsed.get<std::string>();
      if (!open_keys.back().insert(key).second) {
        const auto pos = text.rfind("\"" + key + "\"");
        throw InputError(source + ":" + std::to_string(line_of_offset(text, pos)) + ": " + key +
                         ": duplicate field");
      }
    }
    return true;
  };
  try {
    doc = json::parse(text, no_duplicates);
  } catch (const json::parse_error& e) {
    throw InputError(source + ":" + std::to_string(line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1)) +
                     ": syntax: " + e.what());
  }
  SpecReader rd{text, source};
  if (!doc.is_object()) throw InputError(source + ":1: document: expected a JSON object");
  static const std::set<std::string> known = {"lie_type", "sigma", "e_weight", "orders", "verify", "size_cap"};
  for (const auto& [k, v] : doc.items())
    if (!known.count(k)) rd.fail(k, "unknown field");

  ProblemSpec spec;
  spec.source = source;
  if (!doc.contains("lie_type") || !doc["lie_type"].is_string()) rd.fail("lie_type", "expected a string such as \"C3\"");
  try {
    spec.type = LieType::parse(doc["lie_type"].get<std::string>());
  } catch (const InputError& e) {
    rd.fail("lie_type", e.what());
  }
  if (!doc.contains("sigma")) rd.fail("sigma", "missing");
  for (long x : rd.integer_list(doc["sigma"], "sigma")) {
    if (x < 1 || x > spec.type.rank) rd.fail("sigma", "node " + std::to_string(x) + " out of range");
    spec.sigma.push_back(static_cast<std::size_t>(x - 1));
  }
  if (doc.contains("e_weight")) spec.e_weight = rd.integer_list(doc["e_weight"], "e_weight");
  if (doc.contains("orders")) {
    const json& o = doc["orders"];
    auto add = [&](long node, long r) {
      if (node < 1 || node > spec.type.rank) rd.fail("orders", "node " + std::to_string(node) + " out of range");
      if (r < 1) rd.fail("orders", "order must be >= 1");
      spec.orders[static_cast<std::size_t>(node - 1)] = static_cast<int>(r);
    };
    if (o.is_object()) {
      for (const auto& [k, v] : o.items()) {
        long node = 0;
        try {
          std::size_t used = 0;
          node = std::stol(k, &used);
          if (used != k.size()) throw std::invalid_argument(k);
        } catch (const std::exception&) {
          rd.fail("orders", "key \"" + k + "\" is not a node number");
        }
        add(node, rd.integer(v, "orders"));
      }
    } else if (o.is_array()) {
      for (const auto& pair : o) {
        const auto p = rd.integer_list(pair, "orders");
        if (p.size() != 2) rd.fail("orders", "expected [node, order] pairs");
        add(p[0], p[1]);
      }
    } else {
      rd.fail("orders", "expected an object {\"node\": order}");
    }
  }
  if (doc.contains("verify")) {
    if (!doc["verify"].is_boolean()) rd.fail("verify", "expected true or false");
    spec.verify = doc["verify"].get<bool>();
  }
  if (doc.contains("size_cap")) {
    const long cap = rd.integer(doc["size_cap"], "size_cap");
    if (cap < 1) rd.fail("size_cap", "must be positive");
    spec.size_cap = static_cast<std::size_t>(cap);
  }
  try {
    validate_problem_spec(spec);
  } catch (const InputError& e) {
    const std::string msg = e.what();
    const std::string field = msg.substr(0, msg.find(':'));
    rd.fail(field, msg.substr(msg.find(':') + 2));
  }
  return spec;
}

ProblemSpec load_problem_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem_spec(ss.str(), path);
}

void validate_problem_spec(const ProblemSpec& spec) {
  spec.type.validate();
  const std::size_t n = static_cast<std::size_t>(spec.type.rank);
  if (spec.sigma.empty()) throw InputError("sigma: at least one node must be crossed");
  std::set<std::size_t> s(spec.sigma.begin(), spec.sigma.end());
  if (s.size() != spec.sigma.size()) throw InputError("sigma: repeated node");
  for (auto x : spec.sigma)
    if (x >= n) throw InputError("sigma: node out of range");
  for (const auto& [node, r] : spec.orders) {
    if (!s.count(node)) throw InputError("orders: node " + std::to_string(node + 1) + " is not crossed");
    if (r < 1) throw InputError("orders: order must be >= 1");
  }
  const std::size_t levi = n - s.size();
  if (!spec.e_weight.empty() && spec.e_weight.size() != levi)
    throw InputError("e_weight: expected " + std::to_string(levi) + " entries, one per uncrossed node");
  for (long x : spec.e_weight)
    if (x < 0) throw InputError("e_weight: must be dominant (non-negative)");
}

GradingSummary summarize_grading(const ParabolicGrading& g) {
  GradingSummary s;
  s.type = g.datum().lie_type() ? g.datum().lie_type()->name() : "?";
  for (auto x : g.sigma()) s.sigma.push_back(x + 1);
  for (auto x : g.levi_nodes()) s.levi_nodes.push_back(x + 1);
  s.depth = g.depth();
  for (int i = -g.depth(); i <= g.depth(); ++i) s.dims[i] = g.dim(i);
  s.center_dim = g.center_dim();
  s.contact = g.is_contact();
  return s;
}

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const ReportCheck& c) { return c.pass; });
}

Report build_report(const ProblemSpec& spec) {
  validate_problem_spec(spec);
  const RootDatum d = RootDatum::build(spec.type);
  const ParabolicGrading g = ParabolicGrading::build(d, spec.sigma);
  Report rep;
  rep.grading = summarize_grading(g);
  rep.e_weight = spec.e_weight.empty() ? IntWeight(g.levi_nodes().size(), 0) : spec.e_weight;
  Orders orders = spec.orders;
  for (auto j : g.sigma()) orders.emplace(j, 1);
  for (const auto& [node, r] : orders) rep.orders[node + 1] = r;

  const SolutionBound sb = solution_space_bound(g, rep.e_weight, orders);
  rep.v_label = sb.v_weight;
  rep.bound = sb.bound;
  rep.dim_v = sb.bound;
  rep.N = sb.N;
  rep.v_grading = grading_decomposition(g, rep.v_label).dims;
  const CohomologyReport coh = kostant_cohomology(g, rep.v_label);
  rep.h0_weight = coh.h0.levi_weight;
  rep.h0_dim = coh.h0.dim;
  for (const auto& e : coh.h1) rep.h1.push_back({e.node + 1, e.levi_weight, e.dim, e.grading_degree});
  for (int i = 0; i <= rep.N; ++i) rep.jet_fiber_dims.push_back(g.weighted_jet_fiber_dim(i, rep.h0_dim));

  if (spec.verify) {
    if (rep.dim_v > static_cast<unsigned long>(spec.size_cap))
      throw SizeCapError("size_cap: dim V = " + to_string(rep.dim_v) + " exceeds the cap " +
                         std::to_string(spec.size_cap));
    const StructureConstants sc = StructureConstants::build(d);
    CaseOptions opt;
    opt.size_cap = spec.size_cap;
    const CaseReport cr = verify_case(sc, g, rep.v_label, opt);
    rep.verified = true;
    for (const auto& c : cr.checks) rep.checks.push_back({c.name, c.pass, c.expected, c.actual, c.detail, c.seconds});
  }
  return rep;
}

json checks_to_json(const std::vector<CheckResult>& checks) {
  json a = json::array();
  for (const auto& c : checks)
    a.push_back({{"name", c.name},
                 {"pass", c.pass},
                 {"expected", c.expected},
                 {"actual", c.actual},
                 {"detail", c.detail},
                 {"seconds", c.seconds}});
  return a;
}

json report_to_json(const Report& r) {
  json dims = json::object();
  for (const auto& [i, n] : r.grading.dims) dims[std::to_string(i)] = n;
  json orders = json::object();
  for (const auto& [node, ord] : r.orders) orders[std::to_string(node)] = ord;
  json h1 = json::array();
  for (const auto& e : r.h1)
    h1.push_back({{"node", e.node},
                  {"levi_weight", e.levi_weight},
                  {"dim", to_string(e.dim)},
                  {"grading_degree", e.grading_degree}});
  json jets = json::array();
  for (const auto& x : r.jet_fiber_dims) jets.push_back(to_string(x));
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"detail", c.detail},
                      {"seconds", c.seconds}});
  return {{"schema", kReportSchema},
          {"grading",
           {{"type", r.grading.type},
            {"sigma", r.grading.sigma},
            {"levi_nodes", r.grading.levi_nodes},
            {"depth", r.grading.depth},
            {"dims", dims},
            {"center_dim", r.grading.center_dim},
            {"contact", r.grading.contact}}},
          {"e_weight", r.e_weight},
          {"orders", orders},
          {"v_label", r.v_label},
          {"dim_v", to_string(r.dim_v)},
          {"bound", to_string(r.bound)},
          {"N", r.N},
          {"v_grading", r.v_grading},
          {"h0", {{"levi_weight", r.h0_weight}, {"dim", to_string(r.h0_dim)}}},
          {"h1", h1},
          {"jet_fiber_dims", jets},
          {"verified", r.verified},
          {"checks", checks}};
}

Report report_from_json(const json& j) {
  if (!j.is_object() || j.value("schema", "") != kReportSchema) throw InputError("report: unknown schema");
  try {
    Report r;
    const json& g = j.at("grading");
    r.grading.type = g.at("type").get<std::string>();
    r.grading.sigma = g.at("sigma").get<std::vector<std::size_t>>();
    r.grading.levi_nodes = g.at("levi_nodes").get<std::vector<std::size_t>>();
    r.grading.depth = g.at("depth").get<int>();
    for (const auto& [k, v] : g.at("dims").items()) r.grading.dims[std::stoi(k)] = v.get<std::size_t>();
    r.grading.center_dim = g.at("center_dim").get<std::size_t>();
    r.grading.contact = g.at("contact").get<bool>();
    r.e_weight = j.at("e_weight").get<IntWeight>();
    for (const auto& [k, v] : j.at("orders").items()) r.orders[std::stoul(k)] = v.get<int>();
    r.v_label = j.at("v_label").get<IntWeight>();
    r.dim_v = big_from_json(j.at("dim_v"), "dim_v");
    r.bound = big_from_json(j.at("bound"), "bound");
    r.N = j.at("N").get<int>();
    r.v_grading = j.at("v_grading").get<std::vector<long>>();
    r.h0_weight = j.at("h0").at("levi_weight").get<IntWeight>();
    r.h0_dim = big_from_json(j.at("h0").at("dim"), "h0.dim");
    for (const auto& e : j.at("h1"))
      r.h1.push_back({e.at("node").get<std::size_t>(), e.at("levi_weight").get<IntWeight>(),
                      big_from_json(e.at("dim"), "h1.dim"), e.at("grading_degree").get<int>()});
    for (const auto& x : j.at("jet_fiber_dims")) r.jet_fiber_dims.push_back(big_from_json(x, "jet_fiber_dims"));
    r.verified = j.at("verified").get<bool>();
    for (const auto& c : j.at("checks"))
      r.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(),
                          c.at("expected").get<std::string>(), c.at("actual").get<std::string>(),
                          c.at("detail").get<std::string>(), c.at("seconds").get<double>()});
    return r;
  } catch (const json::exception& e) {
    throw InputError(std::string("report: ") + e.what());
  }
}

std::string grading_text(const GradingSummary& s) {
  std::ostringstream os;
  os << "type        " << s.type << "\n";
  os << "sigma       " << list_text(s.sigma) << "\n";
  os << "levi nodes  " << list_text(s.levi_nodes) << "\n";
  os << "depth       " << s.depth << "\n";
  os << "dims       ";
  for (const auto& [i, n] : s.dims) os << " g(" << i << ")=" << n;
  os << "\n";
  os << "center dim  " << s.center_dim << "\n";
  os << "contact     " << (s.contact ? "true" : "false") << "\n";
  return os.str();
}

std::string report_text(const Report& r) {
  std::ostringstream os;
  os << grading_text(r.grading);
  os << "E weight    " << weight_text(r.e_weight) << "\n";
  os << "orders     ";
  for (const auto& [node, ord] : r.orders) os << " r(" << node << ")=" << ord;
  os << "\n";
  os << "V label     " << weight_text(r.v_label) << "\n";
  os << "bound       " << to_string(r.bound) << "\n";
  os << "N           " << r.N << "\n";
  os << "V grading   " << list_text(r.v_grading) << "\n";
  os << "H0          " << weight_text(r.h0_weight) << " dim " << to_string(r.h0_dim) << "\n";
  for (const auto& e : r.h1)
    os << "H1          node " << e.node << " " << weight_text(e.levi_weight) << " dim " << to_string(e.dim)
       << " degree " << e.grading_degree << "\n";
  os << "jet fibers  ";
  for (std::size_t i = 0; i < r.jet_fiber_dims.size(); ++i) os << (i ? " " : "") << to_string(r.jet_fiber_dims[i]);
  os << "\n";
  if (r.verified) {
    for (const auto& c : r.checks) {
      os << (c.pass ? "PASS " : "FAIL ") << c.name;
      if (!c.pass) os << "  expected " << c.expected << ", got " << c.actual << (c.detail.empty() ? "" : "; ") << c.detail;
      os << "\n";
    }
    os << "verification " << (r.all_pass() ? "passed" : "FAILED") << "\n";
  }
  return os.str();
}

IntWeight symmetric_power_dual_weight(const ParabolicGrading& g, int t) {
  const auto comps = g.g_minus1_decomposition();
  if (comps.size() != 1) throw InputError("symmetric power: g_{-1} is not irreducible");
  IntWeight w = g.levi_datum().dual_weight(comps[0].levi_weight);
  for (auto& x : w) x *= t;
  return w;
}

std::vector<ContactRow> contact_table(int n_max, int r_max, int t_max) {
  if (n_max < 1 || r_max < 1 || t_max < 1) throw InputError("contact-table: bounds must be positive");
  std::vector<ContactRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    const RootDatum d = RootDatum::build(LieType{'C', n + 1});
    const ParabolicGrading g = ParabolicGrading::build(d, {0});
    for (int t = 1; t <= t_max; ++t) {
      const IntWeight e = symmetric_power_dual_weight(g, t);
      for (int r = 1; r <= r_max; ++r) {
        ContactRow row{n, r, t, contact_bound_closed_form(n, r, t), 0};
        row.pipeline = weyl_dim(d, construct_V(g, e, {{0, r}}));
        rows.push_back(row);
      }
    }
  }
  std::sort(rows.begin(), rows.end(), [](const ContactRow& a, const ContactRow& b) {
    return std::tie(a.n, a.t, a.r) < std::tie(b.n, b.t, b.r);
  });
  return rows;
}

std::string contact_table_text(const std::vector<ContactRow>& rows) {
  std::ostringstream os;
  os << std::setw(3) << "n" << std::setw(4) << "t" << std::setw(4) << "r" << std::setw(14) << "closed_form"
     << std::setw(14) << "weyl_dim" << "  match\n";
  for (const auto& row : rows)
    os << std::setw(3) << row.n << std::setw(4) << row.t << std::setw(4) << row.r << std::setw(14)
       << to_string(row.closed_form) << std::setw(14) << to_string(row.pipeline) << "  "
       << (row.closed_form == row.pipeline ? "yes" : "NO") << "\n";
  return os.str();
}

}  // namespace parabolica

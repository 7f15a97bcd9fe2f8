#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "parabolica/cochain.hpp"
#include "parabolica/parabolic_grading.hpp"
#include "parabolica/root_system.hpp"
#include "parabolica/weights.hpp"

namespace parabolica {

inline constexpr const char* kReportSchema = "parabolica.report/1";

/// One problem. Nodes are 0-based here; the JSON form is 1-based.
struct ProblemSpec {
  LieType type;
  std::vector<std::size_t> sigma;
  IntWeight e_weight;  // on uncrossed nodes, in node order
  Orders orders;
  bool verify = false;
  std::size_t size_cap = default_size_cap();
  std::string source = "<spec>";
};

/// Parses the JSON problem document. Errors carry "source:line: field: message"
/// and are thrown as InputError. Floating point values are rejected.
ProblemSpec parse_problem_spec(const std::string& text, const std::string& source = "<spec>");
ProblemSpec load_problem_spec(const std::string& path);
/// Checks nodes, order keys and the e_weight length against the Lie type.
void validate_problem_spec(const ProblemSpec& spec);

struct GradingSummary {
  std::string type;
  std::vector<std::size_t> sigma;       // 1-based
  std::vector<std::size_t> levi_nodes;  // 1-based
  int depth = 0;
  std::map<int, std::size_t> dims;  // -depth..depth
  std::size_t center_dim = 0;
  bool contact = false;
  bool operator==(const GradingSummary&) const = default;
};

GradingSummary summarize_grading(const ParabolicGrading& g);

struct ReportH1 {
  std::size_t node = 0;  // 1-based
  IntWeight levi_weight;
  BigInt dim;
  int grading_degree = 0;
  bool operator==(const ReportH1&) const = default;
};

struct ReportCheck {
  std::string name;
  bool pass = false;
  std::string expected, actual, detail;
  double seconds = 0;
  bool operator==(const ReportCheck&) const = default;
};

struct Report {
  GradingSummary grading;
  IntWeight e_weight;
  std::map<std::size_t, int> orders;  // 1-based, after defaulting
  IntWeight v_label;
  BigInt dim_v;
  BigInt bound;
  int N = 0;
  std::vector<long> v_grading;  // dim V_0 .. dim V_N
  IntWeight h0_weight;
  BigInt h0_dim;
  std::vector<ReportH1> h1;
  std::vector<BigInt> jet_fiber_dims;  // weighted i-jet fiber, i = 0..N
  bool verified = false;
  std::vector<ReportCheck> checks;
  bool operator==(const Report&) const = default;

  bool all_pass() const;
};

/// Runs the pipeline (and the brute-force suite when spec.verify is set).
Report build_report(const ProblemSpec& spec);

nlohmann::json report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
std::string report_text(const Report& r);
std::string grading_text(const GradingSummary& s);

nlohmann::json checks_to_json(const std::vector<CheckResult>& checks);

/// Highest weight of S^t g_{-1}^* on the Levi (single crossed node).
IntWeight symmetric_power_dual_weight(const ParabolicGrading& g, int t);

struct ContactRow {
  int n = 0, r = 0, t = 0;
  BigInt closed_form;
  BigInt pipeline;
};

/// Closed form against weyl_dim(construct_V) on C_{n+1} with the first node crossed.
std::vector<ContactRow> contact_table(int n_max, int r_max, int t_max);
std::string contact_table_text(const std::vector<ContactRow>& rows);

}  // namespace parabolica

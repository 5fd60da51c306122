#ifndef TAMECHECK_REPORT_HPP
#define TAMECHECK_REPORT_HPP

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "tamecheck/closure.hpp"
#include "tamecheck/germ.hpp"
#include "tamecheck/parser.hpp"

namespace tamecheck {

using ordered_json = nlohmann::ordered_json;

struct AnalysisOptions {
  int max_power = 6;
  int max_weight = 4;
  long max_arcs = 40000;
  long budget_pairs = 200000;
  int budget_degree = 60;
  long budget_reductions = 2000000;
  long generator_cap = 4000;
  bool strict = false;  // demote HOLDS with-caveat to UNDETERMINED
  std::vector<std::string> checks;  // empty means all

  void validate() const;
  bool wants(const std::string& check) const;
  // folds problem-file overrides (max_power = ..., etc.) into the options
  void apply_overrides(const std::map<std::string, std::string>& overrides);
};

struct AuditEntry {
  std::string premise;
  std::string conclusion;
  std::string status;  // "OK" or "VIOLATION"
  std::string note;
};

struct Report {
  DeformationProblem problem;
  AnalysisOptions options;
  SingularLoci loci;
  bool disc_computed = false;
  Discriminant disc;
  std::string disc_note;
  bool milnor_computed = false;
  MilnorSet milnor;
  std::string milnor_note;
  std::vector<std::pair<std::string, Verdict>> verdicts;  // pipeline order
  std::vector<JacobianCheck> jacobian_checks;
  std::vector<AuditEntry> audit;
  bool audit_violation = false;
  std::vector<std::string> notes;
  Budget budget;  // cumulative usage, caps as configured

  const Verdict* verdict(const std::string& name) const;
};

Report analyze(const DeformationProblem& problem, const AnalysisOptions& opts);

ordered_json render_json(const Report& r);
std::string render_text(const Report& r);

struct VerifyResult {
  bool ok = true;
  int checked = 0;
  std::vector<std::string> failures;
};

// Re-verifies every piece of evidence embedded in a rendered JSON report.
VerifyResult verify_report(const ordered_json& j);

}  // namespace tamecheck

#endif

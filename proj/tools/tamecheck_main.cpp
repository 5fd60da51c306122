#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tamecheck/corpus.hpp"
#include "tamecheck/report.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run_analyze(const std::string& file, const std::vector<std::string>& checks,
                int max_power, int max_weight, bool strict, const std::string& json_out,
                long budget_pairs, int budget_degree) {
  tamecheck::DeformationProblem prob;
  try {
    prob = tamecheck::parse_problem_file(read_file(file));
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }

  tamecheck::AnalysisOptions opts;
  opts.checks = checks;
  opts.max_power = max_power;
  opts.max_weight = max_weight;
  opts.strict = strict;
  opts.budget_pairs = budget_pairs;
  opts.budget_degree = budget_degree;

  tamecheck::Report report;
  try {
    report = tamecheck::analyze(prob, opts);
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }

  if (report.audit_violation) {
    std::cerr << "internal inconsistency: the implication audit found a violation\n";
    for (const auto& a : report.audit)
      if (a.status == "VIOLATION")
        std::cerr << "  " << a.premise << " => " << a.conclusion << ": " << a.note << "\n";
    return 3;
  }

  std::cout << tamecheck::render_text(report);
  if (!json_out.empty()) {
    std::ofstream out(json_out);
    if (!out) {
      std::cerr << "input error: cannot write " << json_out << "\n";
      return 2;
    }
    out << tamecheck::render_json(report).dump(2) << "\n";
  }
  return 0;
}

int run_verify(const std::string& file) {
  tamecheck::ordered_json j;
  try {
    j = tamecheck::ordered_json::parse(read_file(file));
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  tamecheck::VerifyResult res = tamecheck::verify_report(j);
  std::cout << "checked " << res.checked << " evidence object(s)\n";
  if (!res.ok) {
    for (const auto& f : res.failures) std::cerr << "verification failure: " << f << "\n";
    return 4;
  }
  std::cout << "all evidence verified\n";
  return 0;
}

int run_examples() {
  for (const auto& e : tamecheck::corpus_examples()) {
    std::cout << e.name << ": " << e.description << "\n";
    std::istringstream in(e.text);
    std::string line;
    while (std::getline(in, line)) std::cout << "    " << line << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact analysis of one-parameter deformations of singular germs"};
  app.require_subcommand(1);

  std::string file, json_out;
  std::vector<std::string> checks;
  int max_power = 6, max_weight = 4, budget_degree = 60;
  long budget_pairs = 200000;
  bool strict = false;

  auto* analyze = app.add_subcommand("analyze", "analyze a deformation problem file");
  analyze->add_option("file", file, "problem file")->required();
  analyze->add_option("--check", checks,
                      "checks to run (all|cond0|cond|cond2|jacobian|tame)");
  analyze->add_option("--max-power", max_power, "certificate power sweep limit");
  analyze->add_option("--max-weight", max_weight, "arc catalog weight limit");
  analyze->add_flag("--strict", strict, "demote holds-with-caveat to UNDETERMINED");
  analyze->add_option("--json", json_out, "write the JSON report here");
  analyze->add_option("--budget-pairs", budget_pairs, "basis pair budget");
  analyze->add_option("--budget-degree", budget_degree, "degree budget");

  std::string report_file;
  auto* verify = app.add_subcommand("verify", "re-verify all evidence in a JSON report");
  verify->add_option("report", report_file, "report JSON file")->required();

  app.add_subcommand("examples", "list the built-in corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("analyze"))
      return run_analyze(file, checks, max_power, max_weight, strict, json_out,
                         budget_pairs, budget_degree);
    if (app.got_subcommand("verify")) return run_verify(report_file);
    return run_examples();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

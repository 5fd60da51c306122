#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tamecheck/corpus.hpp"
#include "tamecheck/report.hpp"

namespace py = pybind11;
using namespace tamecheck;

namespace {

AnalysisOptions options_from_kwargs(const py::kwargs& kw) {
  AnalysisOptions opts;
  for (auto item : kw) {
    auto key = item.first.cast<std::string>();
    if (key == "checks") opts.checks = item.second.cast<std::vector<std::string>>();
    else if (key == "max_power") opts.max_power = item.second.cast<int>();
    else if (key == "max_weight") opts.max_weight = item.second.cast<int>();
    else if (key == "max_arcs") opts.max_arcs = item.second.cast<long>();
    else if (key == "budget_pairs") opts.budget_pairs = item.second.cast<long>();
    else if (key == "budget_degree") opts.budget_degree = item.second.cast<int>();
    else if (key == "budget_reductions") opts.budget_reductions = item.second.cast<long>();
    else if (key == "strict") opts.strict = item.second.cast<bool>();
    else throw std::invalid_argument("unknown option: " + key);
  }
  return opts;
}

}  // namespace

PYBIND11_MODULE(_tamecheck, m) {
  m.doc() = "exact analysis of one-parameter deformations of singular germs";

  m.def(
      "analyze",
      [](const std::string& problem_text, const py::kwargs& kw) {
        auto prob = parse_problem_file(problem_text);
        auto report = analyze(prob, options_from_kwargs(kw));
        return render_json(report).dump(2);
      },
      py::arg("problem_text"),
      "Analyze a problem file text; returns the JSON report as a string.");

  m.def(
      "analyze_text",
      [](const std::string& problem_text, const py::kwargs& kw) {
        auto prob = parse_problem_file(problem_text);
        return render_text(analyze(prob, options_from_kwargs(kw)));
      },
      py::arg("problem_text"),
      "Analyze a problem file text; returns the human-readable report.");

  m.def(
      "verify",
      [](const std::string& report_json) {
        auto res = verify_report(ordered_json::parse(report_json));
        py::dict out;
        out["ok"] = res.ok;
        out["checked"] = res.checked;
        out["failures"] = res.failures;
        return out;
      },
      py::arg("report_json"),
      "Re-verify every piece of evidence in a JSON report string.");

  m.def(
      "parse_check",
      [](const std::string& problem_text) {
        auto prob = parse_problem_file(problem_text);
        py::dict out;
        out["spatial"] = prob.vars.spatial;
        out["param"] = prob.vars.param;
        out["F"] = prob.F.str();
        out["witness_count"] = prob.witness_points.size();
        return out;
      },
      py::arg("problem_text"), "Parse a problem file and echo its normal form.");

  m.def("examples", [] {
    py::list out;
    for (const auto& e : corpus_examples()) {
      py::dict d;
      d["name"] = e.name;
      d["description"] = e.description;
      d["text"] = e.text;
      out.append(d);
    }
    return out;
  });
}

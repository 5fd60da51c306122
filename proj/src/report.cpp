#include "tamecheck/report.hpp"

#include <algorithm>
#include <sstream>

namespace tamecheck {

void AnalysisOptions::validate() const {
  if (max_power < 1 || max_weight < 1 || max_arcs < 1 || budget_pairs < 1 ||
      budget_degree < 1 || budget_reductions < 1 || generator_cap < 1)
    throw std::invalid_argument("all analysis caps must be positive");
  static const std::vector<std::string> known = {"all",  "cond0",    "cond",
                                                 "cond2", "jacobian", "tame"};
  for (const auto& c : checks)
    if (std::find(known.begin(), known.end(), c) == known.end())
      throw std::invalid_argument("unknown check: " + c);
}

bool AnalysisOptions::wants(const std::string& check) const {
  if (checks.empty()) return true;
  for (const auto& c : checks)
    if (c == "all" || c == check) return true;
  return false;
}

void AnalysisOptions::apply_overrides(const std::map<std::string, std::string>& ov) {
  for (const auto& [k, v] : ov) {
    if (k == "max_power") max_power = static_cast<int>(std::stol(v));
    else if (k == "max_weight") max_weight = static_cast<int>(std::stol(v));
    else if (k == "max_arcs") max_arcs = std::stol(v);
    else if (k == "budget_pairs") budget_pairs = std::stol(v);
    else if (k == "budget_degree") budget_degree = static_cast<int>(std::stol(v));
    else if (k == "budget_reductions") budget_reductions = std::stol(v);
    else if (k == "generator_cap") generator_cap = std::stol(v);
    else if (k == "strict") strict = (v == "1" || v == "true" || v == "yes");
    else throw std::invalid_argument("unknown problem option: " + k);
  }
}

const Verdict* Report::verdict(const std::string& name) const {
  for (const auto& [n, v] : verdicts)
    if (n == name) return &v;
  return nullptr;
}

namespace {

Verdict* find_verdict(Report& r, const std::string& name) {
  for (auto& [n, v] : r.verdicts)
    if (n == name) return &v;
  return nullptr;
}

bool binding_holds(const Verdict* v) {
  return v && v->status == Status::Holds && v->binding();
}

bool binding_fails(const Verdict* v) {
  return v && v->status == Status::Fails && v->binding();
}

}  // namespace

Report analyze(const DeformationProblem& problem, const AnalysisOptions& opts_in) {
  AnalysisOptions opts = opts_in;
  opts.apply_overrides(problem.option_overrides);
  opts.validate();

  Report r;
  r.problem = problem;
  r.options = opts;
  const int n = problem.vars.arity();
  const Polynomial& F = problem.F;

  Budget master;
  master.pair_cap = opts.budget_pairs;
  master.degree_cap = opts.budget_degree;
  master.reduction_cap = opts.budget_reductions;
  master.generator_cap = opts.generator_cap;

  r.loci = build_singular_loci(F, n);

  ClosureOptions copts;
  copts.max_power = opts.max_power;
  copts.arcs.max_weight = opts.max_weight;
  copts.arcs.max_arcs = opts.max_arcs;

  auto run = [&](const std::string& name, auto&& fn) {
    Budget sub = master.fresh();
    Verdict v;
    try {
      v = fn(sub);
    } catch (const BudgetExceeded& e) {
      v = Verdict::undetermined(e.what());
    }
    master.absorb(sub);
    r.verdicts.emplace_back(name, std::move(v));
  };

  if (opts.wants("cond0"))
    run("cond0", [&](Budget& b) { return check_cond0(r.loci, b); });

  if (opts.wants("tame")) {
    {
      Budget sub = master.fresh();
      try {
        r.disc = discriminant(F, r.loci, sub);
        r.disc_computed = true;
      } catch (const BudgetExceeded& e) {
        r.disc_note = e.what();
      }
      master.absorb(sub);
    }
    {
      Budget sub = master.fresh();
      try {
        r.milnor = milnor_set(F, r.loci, r.disc_computed ? r.disc : Discriminant{}, sub);
        r.milnor_computed = true;
      } catch (const BudgetExceeded& e) {
        r.milnor_note = e.what();
      }
      master.absorb(sub);
    }
    if (r.milnor_computed) {
      run("tame", [&](Budget& b) {
        Verdict v = check_tame(r.milnor, r.loci, problem.witness_points, b);
        if (v.status == Status::Fails && !r.disc_computed)
          v = Verdict::undetermined(
              "witness lies on the unsaturated Milnor candidate, but the discriminant "
              "needed for saturation was unavailable: " + r.disc_note);
        return v;
      });
    } else {
      r.verdicts.emplace_back("tame",
                              Verdict::undetermined("Milnor set unavailable: " + r.milnor_note));
    }
  }

  if (opts.wants("cond"))
    run("cond", [&](Budget& b) {
      return check_cond(F, r.loci, problem.witness_points, copts, b);
    });
  if (opts.wants("cond2"))
    run("cond2", [&](Budget& b) {
      return check_cond2(F, r.loci, problem.witness_points, copts, b);
    });

  if (opts.wants("jacobian")) {
    Budget sub = master.fresh();
    Verdict v;
    try {
      JacobianResult jr = jacobian_criterion(F, n, copts, sub);
      v = jr.verdict;
      r.jacobian_checks = std::move(jr.checks);
    } catch (const BudgetExceeded& e) {
      v = Verdict::undetermined(e.what());
    } catch (const std::invalid_argument& e) {
      v = Verdict::undetermined(std::string("t-expansion unavailable: ") + e.what());
    }
    master.absorb(sub);
    r.verdicts.emplace_back("jacobian", std::move(v));
  }

  if (opts.strict) {
    for (auto& [name, v] : r.verdicts)
      if (v.status == Status::Holds && v.qualifier == Qualifier::WithCaveat)
        v = Verdict::undetermined("strict mode: holds with-caveat demoted (" + name + ")");
  }

  // sound upgrades along the implication chain
  auto promote = [&](const char* src, const char* dst, const std::string& why) {
    Verdict* s = find_verdict(r, src);
    Verdict* d = find_verdict(r, dst);
    if (!s || !d) return;
    if (binding_holds(s) && d->status == Status::Undetermined)
      *d = Verdict{Status::Holds, Qualifier::None, "implied", NoteEvidence{why}};
  };
  promote("jacobian", "cond2", "implied by the jacobian criterion");
  promote("cond2", "cond", "implied by cond2");
  promote("cond", "cond0", "implied by cond");
  promote("cond", "tame", "implied by cond");

  // theorem-consistency audit; only unqualified verdicts bind
  auto entry = [&](const std::string& p, const std::string& c) {
    AuditEntry a;
    a.premise = p;
    a.conclusion = c;
    const Verdict* pv = r.verdict(p);
    if (c == "fibre_constancy") {
      a.status = "OK";
      a.note = binding_holds(pv)
                   ? "fibre constancy follows; not separately computed"
                   : (pv ? "premise not established" : "premise not evaluated");
      r.audit.push_back(std::move(a));
      return;
    }
    if (c == "sing_equality") {
      a.status = "OK";
      if (!binding_holds(pv)) {
        a.note = pv ? "premise not established" : "premise not evaluated";
      } else {
        Budget sub = master.fresh();
        bool eq = false, known = true;
        try {
          eq = ideal_equal_radical(r.loci.sing_F, r.loci.sing_Ftilde, sub);
        } catch (const BudgetExceeded&) {
          known = false;
        }
        master.absorb(sub);
        if (!known)
          a.note = "radical comparison hit the budget; equality undecided";
        else if (eq)
          a.note = "Sing F and Sing Ftilde have equal zero sets";
        else
          a.note = "global radical equality fails; germ-level equality undecided";
      }
      r.audit.push_back(std::move(a));
      return;
    }
    const Verdict* cv = r.verdict(c);
    if (binding_holds(pv) && binding_fails(cv)) {
      a.status = "VIOLATION";
      a.note = "premise HOLDS but conclusion FAILS";
      r.audit_violation = true;
    } else {
      a.status = "OK";
      if (!pv)
        a.note = "premise not evaluated";
      else if (!binding_holds(pv))
        a.note = "premise not established";
      else if (!cv)
        a.note = "conclusion not evaluated";
      else if (binding_holds(cv))
        a.note = "consistent";
      else
        a.note = "conclusion not FAILS";
    }
    r.audit.push_back(std::move(a));
  };
  entry("jacobian", "cond2");
  entry("cond2", "cond");
  entry("cond", "cond0");
  entry("cond", "tame");
  entry("jacobian", "cond");
  entry("jacobian", "tame");
  entry("tame", "fibre_constancy");
  entry("cond2", "sing_equality");

  r.budget = master;
  return r;
}

namespace {

ordered_json ring_json(const RingPtr& R) {
  ordered_json a = ordered_json::array();
  if (R)
    for (const auto& v : R->vars) a.push_back(v);
  return a;
}

ordered_json point_json(const Point& p) {
  ordered_json a = ordered_json::array();
  for (const auto& c : p) a.push_back(to_string(c));
  return a;
}

ordered_json polys_json(const std::vector<Polynomial>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& p : v) a.push_back(p.str());
  return a;
}

ordered_json ord_json(long o) {
  if (o == ORDER_INFINITY) return ordered_json("inf");
  return ordered_json(o);
}

ordered_json evidence_json(const Evidence& e) {
  ordered_json j;
  if (std::holds_alternative<std::monostate>(e)) {
    j["kind"] = "none";
  } else if (const auto* c = std::get_if<ClosureCertificate>(&e)) {
    j["kind"] = "certificate";
    j["ring"] = ring_json(c->f.ring());
    j["base"] = point_json(c->base);
    j["m"] = c->m;
    j["f"] = c->f.str();
    j["unit"] = c->unit.str();
    j["ideal_gens"] = polys_json(c->ideal_gens);
    ordered_json terms = ordered_json::array();
    for (const auto& t : c->terms) {
      ordered_json tj;
      tj["gens"] = t.gen_indices;
      tj["cofactor"] = t.cofactor.str();
      terms.push_back(std::move(tj));
    }
    j["terms"] = std::move(terms);
  } else if (const auto* w = std::get_if<ArcWitness>(&e)) {
    j["kind"] = "arc_witness";
    j["ring"] = ring_json(w->f.ring());
    j["base"] = point_json(w->base);
    ordered_json arc;
    ordered_json coords = ordered_json::array();
    for (const auto& u : w->arc.coords) coords.push_back(univar_str(u));
    arc["coords"] = std::move(coords);
    arc["base_point"] = w->arc.base_point ? point_json(*w->arc.base_point) : ordered_json(nullptr);
    j["arc"] = std::move(arc);
    j["f"] = w->f.str();
    j["ideal_gens"] = polys_json(w->ideal_gens);
    j["avoid_gens"] = polys_json(w->avoid_gens);
    j["ord_f"] = ord_json(w->ord_f);
    j["ord_ideal"] = ord_json(w->ord_ideal);
  } else if (const auto* p = std::get_if<PointWitness>(&e)) {
    j["kind"] = "point_witness";
    RingPtr R;
    if (!p->vanishing.empty()) R = p->vanishing.front().ring();
    else if (p->separating) R = p->separating->ring();
    j["ring"] = ring_json(R);
    j["point"] = point_json(p->point);
    j["vanishing"] = polys_json(p->vanishing);
    j["separating"] = p->separating ? ordered_json(p->separating->str()) : ordered_json(nullptr);
    j["scale_checks"] = p->scale_checks;
    j["scaled_coords"] = p->scaled_coords;
  } else if (const auto* nt = std::get_if<NoteEvidence>(&e)) {
    j["kind"] = "note";
    j["note"] = nt->note;
  }
  return j;
}

ordered_json verdict_json(const Verdict& v) {
  ordered_json j;
  j["status"] = status_str(v.status);
  j["qualifier"] = qualifier_str(v.qualifier);
  j["scope"] = v.scope;
  j["evidence"] = evidence_json(v.evidence);
  return j;
}

}  // namespace

ordered_json render_json(const Report& r) {
  ordered_json j;

  ordered_json prob;
  prob["vars"] = r.problem.vars.spatial;
  prob["param"] = r.problem.vars.param;
  prob["F"] = r.problem.F.str();
  ordered_json wits = ordered_json::array();
  for (const auto& w : r.problem.witness_points) wits.push_back(point_json(w));
  prob["witness"] = std::move(wits);
  ordered_json ov = ordered_json::object();
  for (const auto& [k, v] : r.problem.option_overrides) ov[k] = v;
  prob["overrides"] = std::move(ov);
  j["problem"] = std::move(prob);

  ordered_json op;
  op["max_power"] = r.options.max_power;
  op["max_weight"] = r.options.max_weight;
  op["max_arcs"] = r.options.max_arcs;
  op["budget_pairs"] = r.options.budget_pairs;
  op["budget_degree"] = r.options.budget_degree;
  op["budget_reductions"] = r.options.budget_reductions;
  op["generator_cap"] = r.options.generator_cap;
  op["strict"] = r.options.strict;
  op["checks"] = r.options.checks.empty() ? std::vector<std::string>{"all"} : r.options.checks;
  j["options"] = std::move(op);

  ordered_json loci;
  loci["ring"] = ring_json(r.loci.sing_F.ring());
  loci["sing_F0"] = polys_json(r.loci.sing_F0.generators());
  loci["sing_F"] = polys_json(r.loci.sing_F.generators());
  loci["sing_Ftilde"] = polys_json(r.loci.sing_Ftilde.generators());
  j["loci"] = std::move(loci);

  ordered_json disc;
  disc["computed"] = r.disc_computed;
  if (r.disc_computed) {
    disc["ring"] = ring_json(r.disc.uv_ring);
    disc["generators"] = polys_json(r.disc.ideal.generators());
    disc["pullback"] = polys_json(r.disc.pullback);
    disc["empty"] = r.disc.empty;
  }
  if (!r.disc_note.empty()) disc["note"] = r.disc_note;
  j["discriminant"] = std::move(disc);

  ordered_json mil;
  mil["computed"] = r.milnor_computed;
  if (r.milnor_computed) {
    mil["minors"] = polys_json(r.milnor.minors_ideal.generators());
    mil["saturated"] = polys_json(r.milnor.saturated_ideal.generators());
    mil["removed"] = r.milnor.removed;
  }
  if (!r.milnor_note.empty()) mil["note"] = r.milnor_note;
  j["milnor_set"] = std::move(mil);

  ordered_json verdicts = ordered_json::object();
  for (const auto& [name, v] : r.verdicts) {
    ordered_json vj = verdict_json(v);
    if (name == "jacobian" && !r.jacobian_checks.empty()) {
      ordered_json checks = ordered_json::array();
      for (const auto& c : r.jacobian_checks) {
        ordered_json cj;
        cj["var"] = c.var;
        cj["j"] = c.j;
        ordered_json inner = verdict_json(c.verdict);
        cj["status"] = inner["status"];
        cj["qualifier"] = inner["qualifier"];
        cj["scope"] = inner["scope"];
        cj["evidence"] = inner["evidence"];
        checks.push_back(std::move(cj));
      }
      vj["checks"] = std::move(checks);
    }
    verdicts[name] = std::move(vj);
  }
  j["verdicts"] = std::move(verdicts);

  ordered_json audit = ordered_json::array();
  for (const auto& a : r.audit) {
    ordered_json aj;
    aj["premise"] = a.premise;
    aj["conclusion"] = a.conclusion;
    aj["status"] = a.status;
    aj["note"] = a.note;
    audit.push_back(std::move(aj));
  }
  j["audit"] = std::move(audit);

  ordered_json bud;
  bud["pair_cap"] = r.budget.pair_cap;
  bud["degree_cap"] = r.budget.degree_cap;
  bud["reduction_cap"] = r.budget.reduction_cap;
  bud["generator_cap"] = r.budget.generator_cap;
  bud["pairs_used"] = r.budget.pairs_used;
  bud["reductions_used"] = r.budget.reductions_used;
  bud["max_degree_seen"] = r.budget.max_degree_seen;
  j["budgets"] = std::move(bud);

  j["notes"] = r.notes;
  return j;
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "problem: F = " << r.problem.F.str() << "\n";
  out << "  spatial vars:";
  for (const auto& v : r.problem.vars.spatial) out << " " << v;
  out << "; parameter: " << r.problem.vars.param << "\n\n";

  out << "singular loci (generators):\n";
  auto dump = [&](const char* name, const Ideal& I) {
    out << "  " << name << ":";
    if (I.generators().empty()) out << " (0)";
    for (const auto& g : I.generators()) out << " " << g.str() << ";";
    out << "\n";
  };
  dump("Sing F0     ", r.loci.sing_F0);
  dump("Sing F      ", r.loci.sing_F);
  dump("Sing Ftilde ", r.loci.sing_Ftilde);
  out << "\n";

  if (r.disc_computed) {
    out << "discriminant in (" << (r.disc.uv_ring ? r.disc.uv_ring->vars[0] : "u") << ", "
        << (r.disc.uv_ring ? r.disc.uv_ring->vars[1] : "v") << "):";
    if (r.disc.empty) out << " empty";
    for (const auto& g : r.disc.ideal.generators()) out << " " << g.str() << ";";
    out << "\n";
  } else if (!r.disc_note.empty()) {
    out << "discriminant: not computed (" << r.disc_note << ")\n";
  }
  if (r.milnor_computed) {
    out << "milnor set minors:";
    for (const auto& g : r.milnor.minors_ideal.generators()) out << " " << g.str() << ";";
    out << "\n  saturated:";
    for (const auto& g : r.milnor.saturated_ideal.generators()) out << " " << g.str() << ";";
    out << (r.milnor.removed ? "  (saturation removed components)" : "");
    out << "\n";
  }
  out << "\nverdicts:\n";
  for (const auto& [name, v] : r.verdicts) {
    out << "  " << name << ": " << status_str(v.status);
    if (v.qualifier != Qualifier::None) out << " (" << qualifier_str(v.qualifier) << ")";
    if (!v.scope.empty()) out << "  [" << v.scope << "]";
    if (const auto* nt = std::get_if<NoteEvidence>(&v.evidence)) out << "  " << nt->note;
    out << "\n";
  }
  out << "\naudit:\n";
  for (const auto& a : r.audit)
    out << "  " << a.premise << " => " << a.conclusion << ": " << a.status
        << (a.note.empty() ? "" : "  (" + a.note + ")") << "\n";
  out << "\nbudget: pairs " << r.budget.pairs_used << ", reductions "
      << r.budget.reductions_used << ", max degree " << r.budget.max_degree_seen << "\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  return out.str();
}

namespace {

RingPtr ring_from_json(const ordered_json& arr) {
  std::vector<std::string> names;
  for (const auto& v : arr) names.push_back(v.get<std::string>());
  if (names.empty()) return nullptr;
  return make_ring(std::move(names));
}

Polynomial parse_in_ring(const std::string& text, const RingPtr& R) {
  VarContext ctx;
  ctx.spatial = R->vars;
  ctx.param = unique_name(*R, "_p");
  Polynomial p = parse_polynomial(text, ctx, 4096);
  return p.map_to_ring(R);
}

Point point_from_json(const ordered_json& arr) {
  Point p;
  for (const auto& v : arr) p.push_back(rational_from_string(v.get<std::string>()));
  return p;
}

std::vector<Polynomial> polys_from_json(const ordered_json& arr, const RingPtr& R) {
  std::vector<Polynomial> out;
  for (const auto& v : arr) out.push_back(parse_in_ring(v.get<std::string>(), R));
  return out;
}

long ord_from_json(const ordered_json& v) {
  if (v.is_string()) return ORDER_INFINITY;
  return v.get<long>();
}

Univar univar_from_json(const std::string& text) {
  RingPtr R = make_ring({"s"});
  Polynomial p = parse_in_ring(text, R);
  Univar u;
  for (const auto& [m, c] : p.terms()) u[m[0]] = c;
  return u;
}

void verify_evidence(const std::string& where, const ordered_json& vj, VerifyResult& res) {
  auto fail = [&](const std::string& m) {
    res.ok = false;
    res.failures.push_back(where + ": " + m);
  };
  if (!vj.contains("evidence")) {
    fail("missing evidence object");
    return;
  }
  const ordered_json& e = vj.at("evidence");
  const std::string kind = e.value("kind", "none");
  const std::string status = vj.value("status", "");
  try {
    if (kind == "certificate") {
      ClosureCertificate c;
      RingPtr R = ring_from_json(e.at("ring"));
      c.m = e.at("m").get<int>();
      c.base = point_from_json(e.at("base"));
      c.f = parse_in_ring(e.at("f").get<std::string>(), R);
      c.unit = parse_in_ring(e.at("unit").get<std::string>(), R);
      c.ideal_gens = polys_from_json(e.at("ideal_gens"), R);
      for (const auto& tj : e.at("terms")) {
        ClosureCertificate::Term t;
        t.gen_indices = tj.at("gens").get<std::vector<int>>();
        t.cofactor = parse_in_ring(tj.at("cofactor").get<std::string>(), R);
        c.terms.push_back(std::move(t));
      }
      ++res.checked;
      std::string why;
      if (!verify_certificate(c, &why)) fail("certificate rejected: " + why);
    } else if (kind == "arc_witness") {
      ArcWitness w;
      RingPtr R = ring_from_json(e.at("ring"));
      w.base = point_from_json(e.at("base"));
      const auto& aj = e.at("arc");
      for (const auto& cj : aj.at("coords"))
        w.arc.coords.push_back(univar_from_json(cj.get<std::string>()));
      if (!aj.at("base_point").is_null())
        w.arc.base_point = point_from_json(aj.at("base_point"));
      w.f = parse_in_ring(e.at("f").get<std::string>(), R);
      w.ideal_gens = polys_from_json(e.at("ideal_gens"), R);
      w.avoid_gens = polys_from_json(e.at("avoid_gens"), R);
      w.ord_f = ord_from_json(e.at("ord_f"));
      w.ord_ideal = ord_from_json(e.at("ord_ideal"));
      ++res.checked;
      std::string why;
      if (!verify_arc_witness(w, &why)) fail("arc witness rejected: " + why);
    } else if (kind == "point_witness") {
      PointWitness w;
      RingPtr R = ring_from_json(e.at("ring"));
      w.point = point_from_json(e.at("point"));
      w.vanishing = polys_from_json(e.at("vanishing"), R);
      if (!e.at("separating").is_null())
        w.separating = parse_in_ring(e.at("separating").get<std::string>(), R);
      w.scale_checks = e.at("scale_checks").get<int>();
      w.scaled_coords = e.at("scaled_coords").get<std::vector<int>>();
      ++res.checked;
      std::string why;
      if (!verify_point_witness(w, &why)) fail("point witness rejected: " + why);
    } else if (kind == "note" || kind == "none") {
      if (status == "FAILS") fail("FAILS verdict carries no re-verifiable witness");
    } else {
      fail("unknown evidence kind: " + kind);
    }
  } catch (const std::exception& ex) {
    fail(std::string("malformed evidence: ") + ex.what());
  }
}

}  // namespace

VerifyResult verify_report(const ordered_json& j) {
  VerifyResult res;
  if (!j.contains("verdicts") || !j.at("verdicts").is_object()) {
    res.ok = false;
    res.failures.push_back("report has no verdicts object");
    return res;
  }
  for (const auto& [name, vj] : j.at("verdicts").items()) {
    verify_evidence(name, vj, res);
    if (vj.contains("checks"))
      for (std::size_t i = 0; i < vj.at("checks").size(); ++i)
        verify_evidence(name + ".checks[" + std::to_string(i) + "]", vj.at("checks")[i], res);
  }
  return res;
}

}  // namespace tamecheck

#include "tamecheck/closure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace tamecheck {

namespace {

const std::vector<Rational>& catalog_coefficients() {
  static const std::vector<Rational> C = [] {
    std::vector<Rational> v;
    for (const char* s : {"1", "-1", "2", "-2", "1/2", "-1/2", "3", "-3", "3/2", "-3/2"})
      v.push_back(rational_from_string(s));
    return v;
  }();
  return C;
}

struct Atom {
  Univar u;
  int weight;
  bool two_term;
};

std::vector<std::vector<Atom>> atoms_by_weight(int W) {
  const auto& C = catalog_coefficients();
  std::vector<std::vector<Atom>> by(2 * W);
  for (int w = 1; w <= W; ++w)
    for (const auto& c : C) by[w].push_back({Univar{{w, c}}, w, false});
  for (int w1 = 1; w1 <= W; ++w1)
    for (int w2 = w1 + 1; w2 <= W; ++w2)
      for (const auto& c1 : C)
        for (const auto& c2 : C)
          by[w1 + w2].push_back({Univar{{w1, c1}, {w2, c2}}, w1 + w2, true});
  return by;
}

std::vector<Arc> build_catalog(int arity, const ArcCatalogOptions& opts) {
  const int W = std::max(1, opts.max_weight);
  auto by = atoms_by_weight(W);
  const int max_wt = 2 * W - 1;
  std::vector<Arc> out;
  std::vector<Univar> cur(arity);
  bool full = false;

  std::function<void(int, int, int, bool)> rec = [&](int i, int nz_left, int wt_left,
                                                     bool two_used) {
    if (full) return;
    if (i == arity) {
      if (nz_left == 0 && wt_left == 0) {
        Arc a;
        a.coords = cur;
        out.push_back(std::move(a));
        if (static_cast<long>(out.size()) >= opts.max_arcs) full = true;
      }
      return;
    }
    int coords_left = arity - i;
    if (coords_left > nz_left) {
      cur[i].clear();
      rec(i + 1, nz_left, wt_left, two_used);
    }
    if (nz_left > 0) {
      for (int w = 1; w <= std::min(wt_left, max_wt); ++w)
        for (const auto& atom : by[w]) {
          if (atom.two_term && two_used) continue;
          cur[i] = atom.u;
          rec(i + 1, nz_left - 1, wt_left - w, two_used || atom.two_term);
          if (full) { cur[i].clear(); return; }
        }
      cur[i].clear();
    }
  };

  for (int wt = 1; wt <= 2 * W && !full; ++wt)
    for (int nz = 1; nz <= std::min(arity, wt) && !full; ++nz)
      rec(0, nz, wt, false);
  return out;
}

bool point_is_zero(const Point& p) {
  for (const auto& c : p)
    if (c != 0) return false;
  return true;
}

}  // namespace

const std::vector<Arc>& arc_catalog(int arity, const ArcCatalogOptions& opts) {
  static std::map<std::string, std::vector<Arc>> cache;
  std::string key = std::to_string(arity) + ":" + std::to_string(opts.max_weight) + ":" +
                    std::to_string(opts.max_arcs);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_catalog(arity, opts)).first;
  return it->second;
}

std::optional<ArcWitness> arc_falsify(const Polynomial& f,
                                      const std::vector<Polynomial>& gens,
                                      const std::vector<Polynomial>& avoid,
                                      const Point& base,
                                      const ArcCatalogOptions& opts) {
  const RingPtr& R = f.ring();
  const bool shifted = !point_is_zero(base);
  Polynomial ft = shifted ? f.translate(base) : f;
  std::vector<Polynomial> gt, at;
  for (const auto& g : gens) gt.push_back(shifted ? g.translate(base) : g);
  for (const auto& a : avoid) at.push_back(shifted ? a.translate(base) : a);

  const auto& catalog = arc_catalog(static_cast<int>(R->size()), opts);
  for (const Arc& mu : catalog) {
    ArcOrderResult of = arc_order(ft, mu);
    if (of.order == ORDER_INFINITY) continue;
    long oj = ORDER_INFINITY;
    bool beaten = false;
    for (const auto& g : gt) {
      long o = arc_order(g, mu).order;
      if (o <= of.order) {
        beaten = true;
        break;
      }
      oj = std::min(oj, o);
    }
    if (beaten) continue;
    if (!at.empty()) {
      bool leaves = false;
      for (const auto& a : at)
        if (arc_order(a, mu).order != ORDER_INFINITY) {
          leaves = true;
          break;
        }
      if (!leaves) continue;
    }
    ArcWitness w;
    w.arc = mu;
    if (shifted) w.arc.base_point = base;
    w.f = f;
    w.ideal_gens = gens;
    w.avoid_gens = avoid;
    w.base = base;
    w.ord_f = of.order;
    w.ord_ideal = oj;
    if (verify_arc_witness(w)) return w;
  }
  return std::nullopt;
}

ClosureResult closure_member(const Polynomial& f, const Ideal& I, const Point& base,
                             const std::vector<Polynomial>& avoid,
                             const ClosureOptions& opts, Budget& budget) {
  ClosureResult res;
  const RingPtr& R = f.ring();
  const bool shifted = !point_is_zero(base);
  Polynomial ft = shifted ? f.translate(base) : f;
  std::vector<Polynomial> gt;
  for (const auto& g : I.generators()) {
    Polynomial h = shifted ? g.translate(base) : g;
    if (!h.is_zero()) gt.push_back(std::move(h));
  }

  if (ft.is_zero()) {
    res.status = Status::Holds;
    ClosureCertificate c;
    c.m = 1;
    c.f = ft;
    c.ideal_gens = gt;
    c.unit = Polynomial::constant(R, 1);
    c.base = base;
    res.certificate = std::move(c);
    return res;
  }

  MonomialOrdering ord = MonomialOrdering::local();

  auto attempt = [&](int m, Budget& b) -> bool {
    auto prods = power_products(gt, m, b);
    std::vector<Polynomial> pv;
    pv.reserve(prods.size());
    for (const auto& p : prods) pv.push_back(p.value);
    auto sb = compute_standard_basis(pv, ord, b, /*track=*/true);
    auto div = mora_nf(ft.pow(m), sb.basis, ord, b, /*track=*/true);
    if (!div.remainder.is_zero()) return false;
    ClosureCertificate c;
    c.m = m;
    c.f = ft;
    c.ideal_gens = gt;
    c.unit = div.unit;
    c.base = base;
    for (std::size_t j = 0; j < prods.size(); ++j) {
      Polynomial cof = Polynomial::zero(R);
      for (std::size_t k = 0; k < sb.basis.size(); ++k)
        if (!div.cofactors[k].is_zero() && !sb.reps[k][j].is_zero())
          cof += div.cofactors[k] * sb.reps[k][j];
      if (!cof.is_zero()) c.terms.push_back({prods[j].indices, std::move(cof)});
    }
    if (!verify_certificate(c)) return false;
    res.certificate = std::move(c);
    return true;
  };

  auto try_power = [&](int m) -> int {  // 1 found, 0 miss, -1 budget
    Budget sub = budget.fresh();
    int r = 0;
    try {
      if (attempt(m, sub)) r = 1;
    } catch (const BudgetExceeded& e) {
      res.note = e.what();
      r = -1;
    }
    budget.absorb(sub);
    return r;
  };

  if (!gt.empty() && try_power(1) == 1) {
    res.status = Status::Holds;
    return res;
  }
  if (auto w = arc_falsify(f, I.generators(), avoid, base, opts.arcs)) {
    res.status = Status::Fails;
    res.witness = std::move(*w);
    return res;
  }
  if (!gt.empty()) {
    for (int m = 2; m <= opts.max_power; ++m) {
      int r = try_power(m);
      if (r == 1) {
        res.status = Status::Holds;
        return res;
      }
      if (r == -1) break;
    }
  }
  res.status = Status::Undetermined;
  if (res.note.empty())
    res.note = "no certificate up to m = " + std::to_string(opts.max_power) +
               " and no falsifying arc in the catalog";
  return res;
}

namespace {

Point lift_spatial(const Point& w, int n, std::size_t ring_size) {
  Point p(ring_size, Rational(0));
  for (int i = 0; i < n && i < static_cast<int>(w.size()); ++i) p[i] = w[i];
  return p;
}

bool on_zero_set(const std::vector<Polynomial>& gens, const Point& p) {
  for (const auto& g : gens)
    if (g.evaluate(p) != 0) return false;
  return true;
}

std::string point_str(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += to_string(p[i]);
  }
  return s + ")";
}

// A FAILS at a fixed nonzero base point only speaks about the germ when the
// violation persists along scaled copies of the point.
bool fails_persists(const Polynomial& f, const std::vector<Polynomial>& gens,
                    const std::vector<Polynomial>& avoid, const Point& base,
                    const ArcCatalogOptions& opts, int k_max = 2) {
  for (int k = 1; k <= k_max; ++k) {
    Point p = base;
    Rational s(1);
    for (int j = 0; j < k; ++j) s /= 2;
    for (auto& c : p) c *= s;
    if (!arc_falsify(f, gens, avoid, p, opts)) return false;
  }
  return true;
}

bool spatial_locus_is_origin(const Ideal& I, int n, Budget& budget) {
  const RingPtr& R = I.ring();
  for (int i = 0; i < n; ++i) {
    Budget sub = budget.fresh();
    bool in = false;
    try {
      in = radical_member(Polynomial::variable(R, i), I, sub);
    } catch (const BudgetExceeded&) {
      in = false;
    }
    budget.absorb(sub);
    if (!in) return false;
  }
  return true;
}

}  // namespace

Verdict check_cond2(const Polynomial& F, const SingularLoci& loci,
                    const std::vector<Point>& witness_points,
                    const ClosureOptions& opts, Budget& budget) {
  const RingPtr& R = F.ring();
  const int n = loci.n;
  Polynomial ft = F.diff(n);
  if (ft.is_zero())
    return Verdict::holds("all base points",
                          NoteEvidence{"dF/dt vanishes identically, so it lies in every "
                                       "integral closure"});
  Polynomial ft0 = ft.set_var(n, 0);

  std::vector<Point> bases;
  bases.push_back(Point(R->size(), Rational(0)));
  for (const auto& w : witness_points) {
    Point p = lift_spatial(w, n, R->size());
    if (point_is_zero(p)) continue;
    if (on_zero_set(loci.sing_F0.generators(), p) && ft0.evaluate(p) == 0)
      bases.push_back(std::move(p));
  }

  bool all_hold = true;
  std::optional<ClosureCertificate> origin_cert;
  std::string und_note;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    const Point& p = bases[i];
    ClosureResult r = closure_member(ft, loci.sing_Ftilde, p, {}, opts, budget);
    if (r.status == Status::Fails) {
      Qualifier q = Qualifier::None;
      if (i != 0 && !fails_persists(ft, loci.sing_Ftilde.generators(), {}, p, opts.arcs))
        q = Qualifier::WithCaveat;
      return {Status::Fails, q, "base point " + point_str(p), std::move(*r.witness)};
    }
    if (r.status == Status::Holds) {
      if (i == 0) origin_cert = r.certificate;
    } else {
      all_hold = false;
      if (und_note.empty()) und_note = "base point " + point_str(p) + ": " + r.note;
    }
  }

  if (all_hold) {
    std::vector<Polynomial> qgens = loci.sing_F0.generators();
    if (!ft0.is_zero()) qgens.push_back(ft0);
    Ideal Q(R, std::move(qgens));
    if (spatial_locus_is_origin(Q, n, budget) && origin_cert)
      return Verdict::holds("all base points (locus certified to be the origin only)",
                            std::move(*origin_cert));
    return Verdict::undetermined(
        "membership holds at all " + std::to_string(bases.size()) +
        " sampled base points, but the base-point set is not certified exhaustive");
  }
  return Verdict::undetermined("membership undetermined: " + und_note);
}

Verdict check_cond(const Polynomial& F, const SingularLoci& loci,
                   const std::vector<Point>& witness_points,
                   const ClosureOptions& opts, Budget& budget) {
  const RingPtr& R = F.ring();
  const int n = loci.n;
  Polynomial ft = F.diff(n);
  if (ft.is_zero())
    return Verdict::holds("all base points",
                          NoteEvidence{"dF/dt vanishes identically"});

  if (spatial_locus_is_origin(loci.sing_F0, n, budget))
    return Verdict::holds(
        "vacuous", NoteEvidence{"Sing F0 contains no nonzero points near the origin"});

  auto comps = subspace_components(loci.sing_F0, n);

  // coverage: the union of the component subspaces contains Z(sing_F0)
  bool covered = !comps.empty();
  if (covered) {
    std::vector<std::vector<int>> complements;
    for (const auto& S : comps) {
      std::vector<int> c;
      for (int i = 0; i < n; ++i)
        if (std::find(S.begin(), S.end(), i) == S.end()) c.push_back(i);
      if (!c.empty()) complements.push_back(std::move(c));
    }
    std::vector<int> choice(complements.size(), 0);
    std::function<bool(std::size_t)> cover = [&](std::size_t d) -> bool {
      if (d == complements.size()) {
        Polynomial prod = Polynomial::constant(R, 1);
        for (std::size_t k = 0; k < complements.size(); ++k)
          prod = prod * Polynomial::variable(R, complements[k][choice[k]]);
        Budget sub = budget.fresh();
        bool in = false;
        try {
          in = radical_member(prod, loci.sing_F0, sub);
        } catch (const BudgetExceeded&) {
          in = false;
        }
        budget.absorb(sub);
        return in;
      }
      for (std::size_t v = 0; v < complements[d].size(); ++v) {
        choice[d] = static_cast<int>(v);
        if (!cover(d + 1)) return false;
      }
      return true;
    };
    covered = cover(0);
  }

  static const char* axis_vals[] = {"1", "-1", "1/2"};
  std::vector<Point> samples;
  std::set<std::string> seen;
  auto add = [&](Point p) {
    std::string key;
    for (const auto& c : p) key += to_string(c) + ",";
    if (seen.insert(key).second) samples.push_back(std::move(p));
  };
  for (const auto& S : comps) {
    for (int i : S)
      for (const char* v : axis_vals) {
        Point p(R->size(), Rational(0));
        p[i] = rational_from_string(v);
        add(std::move(p));
      }
    for (std::size_t a = 0; a < S.size(); ++a)
      for (std::size_t b = a + 1; b < S.size(); ++b)
        for (int sign : {1, -1}) {
          Point p(R->size(), Rational(0));
          p[S[a]] = 1;
          p[S[b]] = sign;
          add(std::move(p));
        }
  }
  for (const auto& w : witness_points) {
    Point p = lift_spatial(w, n, R->size());
    if (!point_is_zero(p) && on_zero_set(loci.sing_F0.generators(), p)) add(std::move(p));
  }

  const std::vector<Polynomial>& avoid = loci.sing_Ftilde.generators();
  bool all_hold = !samples.empty();
  std::string und_note;
  for (const auto& p : samples) {
    ClosureResult r = closure_member(ft, loci.sing_Ftilde, p, avoid, opts, budget);
    if (r.status == Status::Fails) {
      Qualifier q = Qualifier::None;
      if (!fails_persists(ft, avoid, avoid, p, opts.arcs)) q = Qualifier::WithCaveat;
      return {Status::Fails, q, "base point " + point_str(p), std::move(*r.witness)};
    }
    if (r.status != Status::Holds) {
      all_hold = false;
      if (und_note.empty()) und_note = "base point " + point_str(p) + ": " + r.note;
    }
  }

  if (all_hold && covered)
    return {Status::Holds, Qualifier::OnSample,
            std::to_string(samples.size()) + " sampled points on the covering "
            "coordinate subspaces of Sing F0",
            NoteEvidence{"membership certified at every sampled nonzero base point"}};
  if (all_hold)
    return Verdict::undetermined(
        "membership holds at all sampled points, but the coordinate subspaces do not "
        "provably cover Sing F0");
  if (samples.empty())
    return Verdict::undetermined(
        "no coordinate-subspace components or usable witness points found on Sing F0");
  return Verdict::undetermined("membership undetermined: " + und_note);
}

JacobianResult jacobian_criterion(const Polynomial& F, int n,
                                  const ClosureOptions& opts, Budget& budget) {
  JacobianResult res;
  const RingPtr& R = F.ring();
  std::vector<Polynomial> fj = t_expansion(F, n);
  std::vector<std::string> names(R->vars.begin(), R->vars.begin() + n);
  RingPtr S = make_ring(names);
  std::vector<Polynomial> fjs;
  for (const auto& g : fj) fjs.push_back(g.map_to_ring(S));

  if (fjs.size() <= 1) {
    res.verdict = Verdict::holds(
        "vacuous", NoteEvidence{"F does not depend on the parameter"});
    return res;
  }

  std::vector<Polynomial> j0;
  for (int i = 0; i < n; ++i) {
    Polynomial d = fjs[0].diff(i);
    if (!d.is_zero()) j0.push_back(std::move(d));
  }
  Ideal I0(S, std::move(j0));
  Point origin(n, Rational(0));

  bool any_und = false;
  std::string und_note;
  for (std::size_t j = 1; j < fjs.size(); ++j) {
    if (fjs[j].is_zero()) continue;
    for (int i = 0; i < n; ++i) {
      Polynomial g = fjs[j].diff(i);
      JacobianCheck chk;
      chk.var = i;
      chk.j = static_cast<int>(j);
      std::string scope = "d/d" + S->vars[i] + " of the t^" + std::to_string(j) +
                          " coefficient";
      if (g.is_zero()) {
        ClosureCertificate triv;
        triv.m = 1;
        triv.f = g;
        triv.ideal_gens = I0.generators();
        triv.unit = Polynomial::constant(S, 1);
        triv.base = origin;
        chk.verdict = Verdict::holds(scope, std::move(triv));
        res.checks.push_back(std::move(chk));
        continue;
      }
      ClosureResult r = closure_member(g, I0, origin, {}, opts, budget);
      if (r.status == Status::Holds) {
        chk.verdict = Verdict::holds(scope, std::move(*r.certificate));
      } else if (r.status == Status::Fails) {
        chk.verdict = Verdict::fails(scope, *r.witness);
        res.checks.push_back(std::move(chk));
        res.verdict = Verdict::fails(scope, std::move(*r.witness));
        return res;
      } else {
        any_und = true;
        if (und_note.empty()) und_note = scope + ": " + r.note;
        chk.verdict = Verdict::undetermined(r.note);
      }
      res.checks.push_back(std::move(chk));
    }
  }

  if (res.checks.empty())
    res.verdict = Verdict::holds(
        "vacuous", NoteEvidence{"every t-coefficient of positive index is zero"});
  else if (any_und)
    res.verdict = Verdict::undetermined(und_note);
  else
    res.verdict = Verdict::holds(
        "all coefficient derivatives",
        NoteEvidence{"every d_i f_j certified in the closure of (d f_0)"});
  return res;
}

OrderDiagnostics order_lemma_diagnostics(const Polynomial& F, int n, const Arc& arc) {
  OrderDiagnostics d;
  const RingPtr& R = F.ring();
  std::vector<Polynomial> fj = t_expansion(F, n);

  Arc full = arc;
  if (static_cast<int>(arc.arity()) == n) {
    full.coords.push_back(Univar{});
    if (full.base_point && static_cast<int>(full.base_point->size()) == n)
      full.base_point->push_back(Rational(0));
  } else if (arc.arity() != R->size()) {
    d.applicable = false;
    d.note = "arc arity matches neither n nor n+1";
    return d;
  }

  Point b = full.base_point ? *full.base_point : Point(R->size(), Rational(0));
  while (b.size() < R->size()) b.push_back(Rational(0));
  for (int i = 0; i < n; ++i)
    if (fj[0].diff(i).evaluate(b) != 0) {
      d.applicable = false;
      d.note = "some spatial partial of f_0 does not vanish at the arc base";
      return d;
    }

  for (int i = 0; i < n; ++i) {
    long o = arc_order(fj[0].diff(i), full).order;
    if (o < d.kappa) {
      d.kappa = o;
      d.min_index = i;
    }
  }
  if (d.min_index < 0 || d.kappa == ORDER_INFINITY) {
    d.note = "all partials of f_0 vanish identically along the arc";
    return d;
  }
  for (std::size_t j = 1; j < fj.size(); ++j) {
    long o = arc_order(fj[j], full).order;
    d.coeffs.push_back({static_cast<int>(j), o, o > d.kappa});
  }
  d.full_partial_matches = arc_order(F.diff(d.min_index), full).order == d.kappa;
  return d;
}

std::vector<std::vector<int>> subspace_components(const Ideal& I, int n) {
  std::vector<std::vector<int>> good;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    bool inside = true;
    for (const auto& g : I.generators()) {
      Polynomial h = g;
      for (int i = 0; i < n && !h.is_zero(); ++i)
        if (!(mask >> i & 1)) h = h.set_var(i, Rational(0));
      if (!h.is_zero()) {
        inside = false;
        break;
      }
    }
    if (!inside) continue;
    std::vector<int> S;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) S.push_back(i);
    good.push_back(std::move(S));
  }
  std::vector<std::vector<int>> maximal;
  for (const auto& S : good) {
    bool strict_sub = false;
    for (const auto& T : good) {
      if (T.size() <= S.size()) continue;
      if (std::includes(T.begin(), T.end(), S.begin(), S.end())) {
        strict_sub = true;
        break;
      }
    }
    if (!strict_sub) maximal.push_back(S);
  }
  std::sort(maximal.begin(), maximal.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  return maximal;
}

}  // namespace tamecheck

#include "tamecheck/ideal.hpp"

#include <algorithm>
#include <set>

namespace tamecheck {

namespace {

Polynomial times_term(const Polynomial& p, const Monomial& m, const Rational& c) {
  Polynomial r(p.ring());
  for (const auto& [mm, cc] : p.terms()) r.add_term(monomial_mul(mm, m), cc * c);
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

}  // namespace

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& reducers,
                      const MonomialOrdering& ord, Budget& budget, bool track) {
  if (!ord.is_global())
    throw std::invalid_argument("divide requires a global ordering");
  DivisionResult res;
  res.remainder = Polynomial::zero(f.ring());
  res.unit = Polynomial::constant(f.ring(), 1);
  if (track) res.cofactors.assign(reducers.size(), Polynomial::zero(f.ring()));

  std::vector<std::pair<Monomial, Rational>> lts;
  lts.reserve(reducers.size());
  for (const auto& g : reducers) lts.push_back(leading_term(g, ord));

  Polynomial h = f;
  while (!h.is_zero()) {
    budget.count_reduction(static_cast<long>(h.term_count()));
    budget.check_degree(h.degree());
    auto [lm, lc] = leading_term(h, ord);
    bool reduced = false;
    for (std::size_t k = 0; k < reducers.size(); ++k) {
      if (!monomial_divides(lts[k].first, lm)) continue;
      Monomial q = monomial_quot(lm, lts[k].first);
      Rational c = lc / lts[k].second;
      h -= times_term(reducers[k], q, c);
      if (track) res.cofactors[k] += Polynomial::term(f.ring(), q, c);
      reduced = true;
      break;
    }
    if (!reduced) {
      res.remainder.add_term(lm, lc);
      Polynomial lt = Polynomial::term(f.ring(), lm, lc);
      h -= lt;
    }
  }
  return res;
}

DivisionResult mora_nf(const Polynomial& f, const std::vector<Polynomial>& reducers,
                       const MonomialOrdering& ord, Budget& budget, bool track) {
  struct Reducer {
    Polynomial poly;
    Monomial lm;
    Rational lc;
    int ecart;
    // poly = unit * f - sum c_i * reducers[i]  (intermediate remainders);
    // original reducers have unit = 0 and c = e_i.
    Polynomial unit;
    std::vector<Polynomial> cof;
  };
  const RingPtr& R = f.ring();
  auto zero = Polynomial::zero(R);
  auto one = Polynomial::constant(R, 1);

  std::vector<Reducer> T;
  T.reserve(reducers.size());
  for (std::size_t i = 0; i < reducers.size(); ++i) {
    const auto& g = reducers[i];
    if (g.is_zero()) continue;
    auto [lm, lc] = leading_term(g, ord);
    Reducer r{g, lm, lc, ecart(g, ord), zero, {}};
    if (track) {
      r.cof.assign(reducers.size(), zero);
      r.cof[i] = one;
      r.cof[i] = -r.cof[i];  // so that poly = unit*f - sum c*g  =>  c_i = -1
    }
    T.push_back(std::move(r));
  }

  Polynomial h = f;
  Polynomial u = one;
  std::vector<Polynomial> cof;
  if (track) cof.assign(reducers.size(), zero);

  while (!h.is_zero()) {
    budget.count_reduction(static_cast<long>(h.term_count()));
    budget.check_degree(h.degree());
    auto [lm, lc] = leading_term(h, ord);
    int best = -1;
    for (std::size_t k = 0; k < T.size(); ++k) {
      if (!monomial_divides(T[k].lm, lm)) continue;
      if (best < 0 || T[k].ecart < T[best].ecart) best = static_cast<int>(k);
    }
    if (best < 0) break;
    const int eh = h.degree() - total_degree(lm);
    if (T[best].ecart > eh) {
      Reducer save{h, lm, lc, eh, u, cof};
      if (!track) save.cof.clear();
      T.push_back(std::move(save));
    }
    Monomial q = monomial_quot(lm, T[best].lm);
    Rational c = lc / T[best].lc;
    // h' = h - c x^q * T[best]; keep h = u*f - sum cof*g in sync
    h -= times_term(T[best].poly, q, c);
    if (track || !T[best].unit.is_zero()) {
      u -= times_term(T[best].unit, q, c);
    }
    if (track) {
      for (std::size_t i = 0; i < cof.size(); ++i)
        if (!T[best].cof[i].is_zero()) cof[i] -= times_term(T[best].cof[i], q, c);
    }
  }

  DivisionResult res;
  res.remainder = std::move(h);
  res.unit = std::move(u);
  if (track) {
    // h = u*f - sum cof*g, so these already satisfy
    // unit*f = sum cofactors*g + remainder
    res.cofactors = std::move(cof);
  }
  return res;
}

DivisionResult normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                           const MonomialOrdering& ord, Budget& budget, bool track) {
  if (basis.empty()) {
    DivisionResult r;
    r.remainder = f;
    r.unit = Polynomial::constant(f.ring(), 1);
    return r;
  }
  return ord.is_global() ? divide(f, basis, ord, budget, track)
                         : mora_nf(f, basis, ord, budget, track);
}

namespace {

struct SPair {
  int i, j;
  Monomial lcm;
  int deg;
  bool operator<(const SPair& o) const {
    if (deg != o.deg) return deg < o.deg;
    if (lcm != o.lcm) return lcm < o.lcm;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

// Gebauer-Moller pair update for a freshly appended basis element t.
void gm_update(const std::vector<Monomial>& lms, int t, std::set<SPair>& pairs) {
  std::vector<SPair> cand;
  for (int i = 0; i < t; ++i) {
    Monomial l = monomial_lcm(lms[i], lms[t]);
    cand.push_back({i, t, l, total_degree(l)});
  }
  // M-criterion: drop (i,t) when another (j,t) has a strictly smaller lcm
  // dividing it.
  std::vector<bool> keep(cand.size(), true);
  for (std::size_t a = 0; a < cand.size(); ++a)
    for (std::size_t b = 0; b < cand.size(); ++b) {
      if (a == b || !keep[a]) continue;
      if (cand[b].lcm != cand[a].lcm && monomial_divides(cand[b].lcm, cand[a].lcm)) {
        keep[a] = false;
        break;
      }
    }
  // F-criterion: among equal lcms keep the first; B-criterion: if some pair
  // in an lcm class is coprime, the whole class is redundant.
  for (std::size_t a = 0; a < cand.size(); ++a) {
    if (!keep[a]) continue;
    for (std::size_t b = a + 1; b < cand.size(); ++b)
      if (keep[b] && cand[b].lcm == cand[a].lcm) keep[b] = false;
    bool cls_coprime = false;
    for (std::size_t b = 0; b < cand.size(); ++b)
      if (cand[b].lcm == cand[a].lcm && coprime(lms[cand[b].i], lms[t]))
        cls_coprime = true;
    if (cls_coprime) keep[a] = false;
  }
  // chain-prune surviving old pairs
  for (auto it = pairs.begin(); it != pairs.end();) {
    const SPair& p = *it;
    if (monomial_divides(lms[t], p.lcm) &&
        monomial_lcm(lms[p.i], lms[t]) != p.lcm &&
        monomial_lcm(lms[p.j], lms[t]) != p.lcm) {
      it = pairs.erase(it);
    } else {
      ++it;
    }
  }
  for (std::size_t a = 0; a < cand.size(); ++a)
    if (keep[a]) pairs.insert(cand[a]);
}

}  // namespace

StandardBasisResult compute_standard_basis(const std::vector<Polynomial>& gens,
                                           const MonomialOrdering& ord, Budget& budget,
                                           bool track) {
  StandardBasisResult out;
  if (gens.empty()) return out;
  const RingPtr R = gens.front().ring();
  const auto zero = Polynomial::zero(R);
  const auto one = Polynomial::constant(R, 1);

  std::vector<Polynomial> G;
  std::vector<std::vector<Polynomial>> reps;
  std::vector<Monomial> lms;
  std::set<SPair> pairs;

  auto append = [&](Polynomial p, std::vector<Polynomial> rep) {
    // normalize to primitive integer form; rescale the representation to match
    Polynomial prim = p.primitive_part();
    if (track) {
      Rational scale = prim.terms().begin()->second / p.terms().begin()->second;
      for (auto& r : rep) r = r * scale;
    }
    lms.push_back(leading_monomial(prim, ord));
    G.push_back(std::move(prim));
    reps.push_back(std::move(rep));
    gm_update(lms, static_cast<int>(G.size()) - 1, pairs);
  };

  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero()) continue;
    std::vector<Polynomial> rep;
    if (track) {
      rep.assign(gens.size(), zero);
      rep[i] = one;
    }
    append(gens[i], std::move(rep));
  }

  while (!pairs.empty()) {
    budget.count_pair();
    SPair p = *pairs.begin();
    pairs.erase(pairs.begin());
    auto lti = leading_term(G[p.i], ord);
    auto ltj = leading_term(G[p.j], ord);
    Monomial qi = monomial_quot(p.lcm, lti.first);
    Monomial qj = monomial_quot(p.lcm, ltj.first);
    Polynomial s = times_term(G[p.i], qi, Rational(1) / lti.second) -
                   times_term(G[p.j], qj, Rational(1) / ltj.second);
    if (s.is_zero()) continue;
    DivisionResult nf = normal_form(s, G, ord, budget, track);
    if (nf.remainder.is_zero()) continue;
    budget.check_degree(nf.remainder.degree());
    std::vector<Polynomial> rep;
    if (track) {
      // remainder = unit*s - sum cof_k G_k; expand s and G_k over the inputs
      rep.assign(gens.size(), zero);
      auto add_mult = [&](const Polynomial& mult, const std::vector<Polynomial>& r) {
        for (std::size_t v = 0; v < rep.size(); ++v)
          if (!r[v].is_zero()) rep[v] += mult * r[v];
      };
      Polynomial ui = nf.unit * Polynomial::term(R, qi, Rational(1) / lti.second);
      Polynomial uj = nf.unit * Polynomial::term(R, qj, Rational(1) / ltj.second);
      add_mult(ui, reps[p.i]);
      add_mult(-uj, reps[p.j]);
      for (std::size_t k = 0; k < G.size(); ++k)
        if (!nf.cofactors[k].is_zero()) add_mult(-nf.cofactors[k], reps[k]);
    }
    append(std::move(nf.remainder), std::move(rep));
  }

  // minimalize: drop elements whose leading monomial another one divides
  std::vector<int> order_idx(G.size());
  for (std::size_t i = 0; i < G.size(); ++i) order_idx[i] = static_cast<int>(i);
  std::sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
    if (lms[a] != lms[b]) return ord.less(lms[a], lms[b]);
    return a < b;
  });
  std::vector<bool> drop(G.size(), false);
  for (std::size_t a = 0; a < order_idx.size(); ++a) {
    int ia = order_idx[a];
    if (drop[ia]) continue;
    for (std::size_t b = a + 1; b < order_idx.size(); ++b) {
      int ib = order_idx[b];
      if (!drop[ib] && monomial_divides(lms[ia], lms[ib])) drop[ib] = true;
    }
  }
  std::vector<Polynomial> basis;
  std::vector<std::vector<Polynomial>> brep;
  for (int idx : order_idx)
    if (!drop[idx]) {
      basis.push_back(G[idx]);
      if (track) brep.push_back(reps[idx]);
    }

  if (ord.is_global()) {
    // full interreduction -> the reduced Groebner basis (canonical)
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::vector<Polynomial> others;
      std::vector<std::size_t> omap;
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (j != i) {
          others.push_back(basis[j]);
          omap.push_back(j);
        }
      if (others.empty()) break;
      DivisionResult nf = divide(basis[i], others, ord, budget, track);
      if (track) {
        std::vector<Polynomial> r(brep[i].size(), zero);
        for (std::size_t v = 0; v < r.size(); ++v) r[v] = brep[i][v];
        for (std::size_t k = 0; k < others.size(); ++k)
          if (!nf.cofactors[k].is_zero())
            for (std::size_t v = 0; v < r.size(); ++v)
              r[v] -= nf.cofactors[k] * brep[omap[k]][v];
        brep[i] = std::move(r);
      }
      basis[i] = nf.remainder;
    }
  }
  // monic, deterministic order
  std::vector<int> fin(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) fin[i] = static_cast<int>(i);
  std::sort(fin.begin(), fin.end(), [&](int a, int b) {
    return ord.less(leading_monomial(basis[a], ord), leading_monomial(basis[b], ord));
  });
  for (int idx : fin) {
    Rational lc = leading_term(basis[idx], ord).second;
    out.basis.push_back(basis[idx] * (Rational(1) / lc));
    if (track) {
      std::vector<Polynomial> r = brep[idx];
      for (auto& q : r) q = q * (Rational(1) / lc);
      out.reps.push_back(std::move(r));
    }
  }
  return out;
}

bool buchberger_criterion_holds(const std::vector<Polynomial>& basis,
                                const MonomialOrdering& ord, Budget& budget) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      auto lti = leading_term(basis[i], ord);
      auto ltj = leading_term(basis[j], ord);
      Monomial l = monomial_lcm(lti.first, ltj.first);
      Polynomial s =
          times_term(basis[i], monomial_quot(l, lti.first), Rational(1) / lti.second) -
          times_term(basis[j], monomial_quot(l, ltj.first), Rational(1) / ltj.second);
      if (!normal_form(s, basis, ord, budget).remainder.is_zero()) return false;
    }
  return true;
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  for (auto& g : gens)
    if (!g.is_zero()) gens_.push_back(std::move(g));
}

const std::vector<Polynomial>& Ideal::standard_basis(const MonomialOrdering& ord,
                                                     Budget& budget) const {
  std::string k = ord.key();
  auto it = cache_.find(k);
  if (it != cache_.end()) return it->second;
  auto res = compute_standard_basis(gens_, ord, budget);
  return cache_.emplace(std::move(k), std::move(res.basis)).first->second;
}

bool ideal_member(const Polynomial& f, const Ideal& I, bool local, Budget& budget) {
  if (f.is_zero()) return true;
  if (I.is_zero_ideal()) return false;
  MonomialOrdering ord = local ? MonomialOrdering::local() : MonomialOrdering::degrevlex();
  const auto& basis = I.standard_basis(ord, budget);
  return normal_form(f, basis, ord, budget).remainder.is_zero();
}

std::string unique_name(const Ring& ring, const std::string& stem) {
  std::string name = stem;
  int k = 0;
  while (ring.index(name) >= 0) name = stem + std::to_string(k++);
  return name;
}

Ideal eliminate(const Ideal& I, const std::vector<int>& drop_vars, Budget& budget) {
  std::vector<std::string> keep;
  for (std::size_t i = 0; i < I.ring()->size(); ++i) {
    if (std::find(drop_vars.begin(), drop_vars.end(), static_cast<int>(i)) ==
        drop_vars.end())
      keep.push_back(I.ring()->vars[i]);
  }
  RingPtr sub = make_ring(keep);
  if (I.is_zero_ideal()) return Ideal(sub, {});
  MonomialOrdering ord = MonomialOrdering::elim(drop_vars);
  auto basis = compute_standard_basis(I.generators(), ord, budget).basis;
  std::vector<Polynomial> kept;
  for (const auto& b : basis) {
    bool uses_front = false;
    for (int v : drop_vars)
      if (b.depends_on(v)) {
        uses_front = true;
        break;
      }
    if (!uses_front) kept.push_back(b.map_to_ring(sub));
  }
  return Ideal(sub, std::move(kept));
}

namespace {

// Helper: run an elimination of one auxiliary variable appended to the ring
// and map the result back to the base ring.
Ideal eliminate_aux(const RingPtr& base, const RingPtr& ext,
                    std::vector<Polynomial> gens, Budget& budget) {
  int aux = static_cast<int>(ext->size()) - 1;
  Ideal E(ext, std::move(gens));
  Ideal sub = eliminate(E, {aux}, budget);
  std::vector<Polynomial> back;
  for (const auto& g : sub.generators()) back.push_back(g.map_to_ring(base));
  return Ideal(base, std::move(back));
}

}  // namespace

Ideal intersect(const Ideal& I, const Ideal& J, Budget& budget) {
  const RingPtr& R = I.ring();
  RingPtr ext = extend_ring(R, {unique_name(*R, "w_")});
  Polynomial w = Polynomial::variable(ext, static_cast<int>(ext->size()) - 1);
  Polynomial one_minus_w = Polynomial::constant(ext, 1) - w;
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators()) gens.push_back(w * f.map_to_ring(ext));
  for (const auto& g : J.generators()) gens.push_back(one_minus_w * g.map_to_ring(ext));
  return eliminate_aux(R, ext, std::move(gens), budget);
}

Ideal saturate(const Ideal& I, const Ideal& J, Budget& budget) {
  const RingPtr& R = I.ring();
  if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal(R, I.generators());
  Ideal acc(R, {});
  bool first = true;
  for (const auto& g : J.generators()) {
    RingPtr ext = extend_ring(R, {unique_name(*R, "w_")});
    Polynomial w = Polynomial::variable(ext, static_cast<int>(ext->size()) - 1);
    std::vector<Polynomial> gens;
    for (const auto& f : I.generators()) gens.push_back(f.map_to_ring(ext));
    gens.push_back(Polynomial::constant(ext, 1) - w * g.map_to_ring(ext));
    Ideal sat_g = eliminate_aux(R, ext, std::move(gens), budget);
    acc = first ? sat_g : intersect(acc, sat_g, budget);
    first = false;
  }
  return acc;
}

std::vector<PowerProduct> power_products(const std::vector<Polynomial>& gens, int m,
                                         Budget& budget) {
  if (m < 1) throw std::invalid_argument("ideal power requires m >= 1");
  std::vector<PowerProduct> out;
  std::vector<int> idx(m, 0);
  // nondecreasing index tuples = combinations with repetition
  while (true) {
    Polynomial v = gens[idx[0]];
    for (int k = 1; k < m; ++k) v = v * gens[idx[k]];
    out.push_back({idx, std::move(v)});
    if (static_cast<long>(out.size()) > budget.generator_cap)
      throw BudgetExceeded("generator cap exceeded in ideal power");
    int k = m - 1;
    while (k >= 0 && idx[k] == static_cast<int>(gens.size()) - 1) --k;
    if (k < 0) break;
    int v0 = idx[k] + 1;
    for (int j = k; j < m; ++j) idx[j] = v0;
  }
  return out;
}

Ideal ideal_power(const Ideal& I, int m, Budget& budget) {
  if (I.is_zero_ideal()) return Ideal(I.ring(), {});
  std::vector<Polynomial> gens;
  for (auto& p : power_products(I.generators(), m, budget))
    gens.push_back(std::move(p.value));
  // deduplicate
  std::vector<Polynomial> uniq;
  for (auto& g : gens) {
    bool seen = false;
    for (const auto& u : uniq)
      if (u == g) {
        seen = true;
        break;
      }
    if (!seen) uniq.push_back(std::move(g));
  }
  return Ideal(I.ring(), std::move(uniq));
}

bool radical_member(const Polynomial& f, const Ideal& I, Budget& budget) {
  if (f.is_zero()) return true;
  if (I.is_zero_ideal()) return false;
  const RingPtr& R = I.ring();
  RingPtr ext = extend_ring(R, {unique_name(*R, "w_")});
  Polynomial w = Polynomial::variable(ext, static_cast<int>(ext->size()) - 1);
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.map_to_ring(ext));
  gens.push_back(Polynomial::constant(ext, 1) - w * f.map_to_ring(ext));
  auto basis = compute_standard_basis(gens, MonomialOrdering::degrevlex(), budget).basis;
  for (const auto& b : basis)
    if (b.is_constant() && !b.is_zero()) return true;
  return false;
}

bool ideal_equal_radical(const Ideal& I, const Ideal& J, Budget& budget) {
  for (const auto& f : I.generators())
    if (!radical_member(f, J, budget)) return false;
  for (const auto& g : J.generators())
    if (!radical_member(g, I, budget)) return false;
  return true;
}

DimVerdict local_dim_zero(const Ideal& I, Budget& budget) {
  DimVerdict v;
  if (I.is_zero_ideal()) {
    // zero ideal in a ring with variables is positive-dimensional;
    // in the 0-variable ring it is the whole point
    v.value = I.ring()->size() == 0 ? DimVerdict::DimZeroAtOrigin
                                    : DimVerdict::PositiveDimensional;
    return v;
  }
  MonomialOrdering ord = MonomialOrdering::local();
  const auto& basis = I.standard_basis(ord, budget);
  for (const auto& b : basis) {
    if (total_degree(leading_monomial(b, ord)) == 0) {
      v.value = DimVerdict::EmptyAtOrigin;
      return v;
    }
  }
  std::vector<std::optional<Monomial>> pure(I.ring()->size());
  for (const auto& b : basis) {
    Monomial lm = leading_monomial(b, ord);
    int nz = -1;
    bool is_pure = true;
    for (std::size_t i = 0; i < lm.size(); ++i) {
      if (lm[i] == 0) continue;
      if (nz >= 0) {
        is_pure = false;
        break;
      }
      nz = static_cast<int>(i);
    }
    if (is_pure && nz >= 0) {
      if (!pure[nz] || total_degree(lm) < total_degree(*pure[nz])) pure[nz] = lm;
    }
  }
  for (const auto& p : pure) {
    if (!p) {
      v.value = DimVerdict::PositiveDimensional;
      return v;
    }
  }
  v.value = DimVerdict::DimZeroAtOrigin;
  for (const auto& p : pure) v.pure_powers.push_back(*p);
  return v;
}

}  // namespace tamecheck

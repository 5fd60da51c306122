#include "tamecheck/verdict.hpp"

namespace tamecheck {

std::string status_str(Status s) {
  switch (s) {
    case Status::Holds: return "HOLDS";
    case Status::Fails: return "FAILS";
    case Status::Undetermined: return "UNDETERMINED";
  }
  return "?";
}

std::string qualifier_str(Qualifier q) {
  switch (q) {
    case Qualifier::None: return "";
    case Qualifier::OnSample: return "on-sample";
    case Qualifier::WithCaveat: return "with-caveat";
  }
  return "?";
}

bool verify_certificate(const ClosureCertificate& c, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (c.m < 1) return fail("certificate power m < 1");
  if (c.unit.constant_term() == 0) return fail("certificate unit vanishes at the base point");
  const RingPtr& R = c.f.ring();
  Polynomial lhs = c.unit * c.f.pow(c.m);
  Polynomial rhs = Polynomial::zero(R);
  for (const auto& t : c.terms) {
    if (static_cast<int>(t.gen_indices.size()) != c.m)
      return fail("certificate term is not an m-fold product");
    Polynomial prod = t.cofactor;
    for (int gi : t.gen_indices) {
      if (gi < 0 || gi >= static_cast<int>(c.ideal_gens.size()))
        return fail("certificate generator index out of range");
      prod = prod * c.ideal_gens[gi];
    }
    rhs += prod;
  }
  if (lhs != rhs) return fail("certificate identity does not expand to unit * f^m");
  return true;
}

bool verify_arc_witness(const ArcWitness& w, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  ArcOrderResult of = arc_order(w.f, w.arc);
  if (of.order != w.ord_f) return fail("stored ord_f does not recompute");
  long oj = ORDER_INFINITY;
  for (const auto& g : w.ideal_gens) oj = std::min(oj, arc_order(g, w.arc).order);
  if (oj != w.ord_ideal) return fail("stored ideal order does not recompute");
  if (!(of.order < oj)) return fail("order inequality ord_f < ord_J fails");
  if (of.order == ORDER_INFINITY) return fail("f composes to zero along the arc");
  if (!w.avoid_gens.empty()) {
    bool leaves = false;
    for (const auto& a : w.avoid_gens)
      if (arc_order(a, w.arc).order != ORDER_INFINITY) {
        leaves = true;
        break;
      }
    if (!leaves) return fail("arc lies inside the excluded locus");
  }
  return true;
}

bool verify_point_witness(const PointWitness& w, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  bool nonzero = false;
  for (const auto& c : w.point)
    if (c != 0) nonzero = true;
  if (!nonzero) return fail("witness point is the origin");
  for (int k = 0; k <= w.scale_checks; ++k) {
    Point p = w.point;
    if (k > 0) {
      Rational s(1);
      for (int j = 0; j < k; ++j) s /= 2;
      if (w.scaled_coords.empty()) {
        for (auto& c : p) c *= s;
      } else {
        for (int idx : w.scaled_coords) p[idx] *= s;
      }
    }
    for (const auto& g : w.vanishing)
      if (g.evaluate(p) != 0) return fail("a generator does not vanish at the witness");
    if (w.separating && w.separating->evaluate(p) == 0)
      return fail("separating polynomial vanishes at a witness scaling");
  }
  return true;
}

}  // namespace tamecheck

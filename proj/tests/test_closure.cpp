#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "tamecheck/closure.hpp"

using namespace tamecheck;
using testutil::P;

TEST_CASE("arc catalog shape and determinism") {
  ArcCatalogOptions o;
  o.max_weight = 3;
  o.max_arcs = 5000;
  const auto& cat = arc_catalog(2, o);
  REQUIRE_FALSE(cat.empty());
  CHECK(static_cast<long>(cat.size()) <= o.max_arcs);
  std::set<std::string> seen;
  for (const auto& a : cat) {
    REQUIRE(a.arity() == 2);
    CHECK(a.coords_vanish_at_zero());
    for (const auto& c : a.coords)
      for (const auto& [e, q] : c) {
        CHECK(e >= 1);
        CHECK(e <= o.max_weight);
        CHECK(q != 0);
      }
    CHECK(seen.insert(a.str()).second);  // no duplicates
  }
  const auto& again = arc_catalog(2, o);
  CHECK(&cat == &again);  // cached
}

TEST_CASE("arc composition orders") {
  auto c = testutil::ctx_xy();
  auto p = P(c, "x^2 + y^3");
  Arc mu;
  mu.coords.resize(3);
  mu.coords[0][2] = Rational(1);   // x = s^2
  mu.coords[1][1] = Rational(1);   // y = s
  auto r = arc_order(p, mu);
  CHECK(r.order == 3);
  CHECK(r.leading_coeff == 1);
  CHECK(arc_order(Polynomial::zero(p.ring()), mu).order == ORDER_INFINITY);
}

TEST_CASE("monomial in the closure of the power ideal") {
  auto spatial = make_ring({"x", "y"});
  VarContext c;
  c.spatial = {"x", "y"};
  auto f = parse_polynomial("x*y", c).map_to_ring(spatial);
  Ideal I(spatial, {parse_polynomial("x^2", c).map_to_ring(spatial),
                    parse_polynomial("y^2", c).map_to_ring(spatial)});
  ClosureOptions opts;
  opts.arcs.max_weight = 3;
  Budget b;
  Point origin{Rational(0), Rational(0)};
  auto res = closure_member(f, I, origin, {}, opts, b);
  REQUIRE(res.status == Status::Holds);
  REQUIRE(res.certificate);
  CHECK(res.certificate->m == 2);  // (x*y)^2 = x^2 * y^2
  std::string why;
  CHECK(verify_certificate(*res.certificate, &why));

  // tampering is caught
  auto bad = *res.certificate;
  bad.terms[0].cofactor += Polynomial::constant(spatial, 1);
  CHECK_FALSE(verify_certificate(bad, &why));
  CHECK_FALSE(why.empty());
}

TEST_CASE("linear germ escapes the closure of its square") {
  auto spatial = make_ring({"x"});
  VarContext c;
  c.spatial = {"x"};
  auto f = parse_polynomial("x", c).map_to_ring(spatial);
  Ideal I(spatial, {parse_polynomial("x^2", c).map_to_ring(spatial)});
  ClosureOptions opts;
  Budget b;
  auto res = closure_member(f, I, Point{Rational(0)}, {}, opts, b);
  REQUIRE(res.status == Status::Fails);
  REQUIRE(res.witness);
  CHECK(res.witness->ord_f == 1);
  CHECK(res.witness->ord_ideal == 2);
  std::string why;
  CHECK(verify_arc_witness(*res.witness, &why));

  auto bad = *res.witness;
  bad.ord_f = 5;
  CHECK_FALSE(verify_arc_witness(bad, &why));
}

TEST_CASE("local unit membership is certified at power one") {
  auto spatial = make_ring({"x"});
  VarContext c;
  c.spatial = {"x"};
  auto f = parse_polynomial("x", c).map_to_ring(spatial);
  Ideal I(spatial, {parse_polynomial("x + x^2", c).map_to_ring(spatial)});
  ClosureOptions opts;
  Budget b;
  auto res = closure_member(f, I, Point{Rational(0)}, {}, opts, b);
  REQUIRE(res.status == Status::Holds);
  REQUIRE(res.certificate);
  CHECK(res.certificate->m == 1);
  CHECK(res.certificate->unit.constant_term() != 0);
  std::string why;
  CHECK(verify_certificate(*res.certificate, &why));
}

TEST_CASE("arc falsification respects the avoid set") {
  auto spatial = make_ring({"x", "y"});
  VarContext c;
  c.spatial = {"x", "y"};
  auto f = parse_polynomial("6*y^2", c).map_to_ring(spatial);
  std::vector<Polynomial> gens{parse_polynomial("2*x*y^2", c).map_to_ring(spatial),
                               parse_polynomial("2*x^2*y - 4*y^3", c).map_to_ring(spatial)};
  ArcCatalogOptions o;
  Point origin{Rational(0), Rational(0)};
  auto w = arc_falsify(f, gens, gens, origin, o);
  REQUIRE(w);
  CHECK(w->ord_f < w->ord_ideal);
  std::string why;
  CHECK(verify_arc_witness(*w, &why));
  // the diagonal arc realizes order 2 against 3
  CHECK(w->ord_f == 2);
  CHECK(w->ord_ideal == 3);
}

TEST_CASE("jacobian criterion on a plainly controlled family") {
  VarContext c;
  c.spatial = {"x"};
  auto F = parse_polynomial("x^2 + x^3*t", c);
  ClosureOptions opts;
  Budget b;
  auto res = jacobian_criterion(F, 1, opts, b);
  CHECK(res.verdict.status == Status::Holds);
  REQUIRE_FALSE(res.checks.empty());
  for (const auto& ck : res.checks) {
    CHECK(ck.j >= 1);
    CHECK(ck.verdict.status == Status::Holds);
  }
}

TEST_CASE("jacobian criterion is vacuous without the parameter") {
  VarContext c;
  c.spatial = {"x", "y"};
  auto F = parse_polynomial("x^2 + y^2", c);
  ClosureOptions opts;
  Budget b;
  auto res = jacobian_criterion(F, 2, opts, b);
  CHECK(res.verdict.status == Status::Holds);
  CHECK(res.checks.empty());
}

TEST_CASE("jacobian criterion fails on the non-tame family") {
  auto c = testutil::ctx_xyz();
  auto F = P(c, "y^2 + x^2*(t*z - x)");
  ClosureOptions opts;
  Budget b;
  auto res = jacobian_criterion(F, 3, opts, b);
  CHECK(res.verdict.status == Status::Fails);
  bool verified = false;
  for (const auto& ck : res.checks) {
    if (ck.verdict.status != Status::Fails) continue;
    auto* w = std::get_if<ArcWitness>(&ck.verdict.evidence);
    REQUIRE(w);
    std::string why;
    CHECK(verify_arc_witness(*w, &why));
    verified = true;
  }
  CHECK(verified);
}

TEST_CASE("order lemma diagnostics on the quintic pair family") {
  VarContext cz;
  cz.spatial = {"z1", "z2", "z3"};
  auto G = parse_polynomial("z1^5 + z2^5 + z1^6*z2^6*z3^2 + t*z1^3*z2^3", cz);
  Arc mu;
  mu.coords.resize(3);
  mu.coords[0][1] = Rational(1);  // z1 = s
  mu.coords[1][1] = Rational(1);  // z2 = s
  auto d = order_lemma_diagnostics(G, 3, mu);
  CHECK(d.applicable);
  CHECK(d.kappa == 4);
  REQUIRE(d.coeffs.size() == 1);
  CHECK(d.coeffs[0].j == 1);
  CHECK(d.coeffs[0].ord_fj == 6);
  CHECK(d.coeffs[0].exceeds_kappa);
}

TEST_CASE("subspace components of monomial loci") {
  auto c = testutil::ctx_xy();
  Budget b;
  Ideal I(c.ring(), {P(c, "x*y")});
  auto comps = subspace_components(I, 2);
  REQUIRE(comps.size() == 2);
  std::set<std::vector<int>> s(comps.begin(), comps.end());
  CHECK(s.count({0}));  // {y = 0}: x free
  CHECK(s.count({1}));  // {x = 0}: y free

  Ideal J(c.ring(), {P(c, "x")});
  auto comps2 = subspace_components(J, 2);
  REQUIRE(comps2.size() == 1);
  CHECK(comps2[0] == std::vector<int>{1});
}

TEST_CASE("cond fails on the product family with a verifiable witness") {
  auto c = testutil::ctx_xyz();
  auto F = P(c, "(x^2 + y^2*z)*(x - t)");
  auto loci = build_singular_loci(F, 3);
  ClosureOptions opts;
  Budget b;
  Point w{Rational(0), Rational(0), Rational(1)};
  auto v = check_cond(F, loci, {w}, opts, b);
  REQUIRE(v.status == Status::Fails);
  auto* aw = std::get_if<ArcWitness>(&v.evidence);
  REQUIRE(aw);
  std::string why;
  CHECK(verify_arc_witness(*aw, &why));
}

TEST_CASE("cond2 fails at the origin for the splitting line family") {
  auto c = testutil::ctx_xy();
  auto F = P(c, "y^2*(x^2 - (y - t)^2)");
  auto loci = build_singular_loci(F, 2);
  ClosureOptions opts;
  Budget b;
  auto v = check_cond2(F, loci, {}, opts, b);
  REQUIRE(v.status == Status::Fails);
  auto* aw = std::get_if<ArcWitness>(&v.evidence);
  REQUIRE(aw);
  std::string why;
  CHECK(verify_arc_witness(*aw, &why));
}

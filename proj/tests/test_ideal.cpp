#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "helpers.hpp"

using namespace tamecheck;
using testutil::P;

namespace {

Budget big_budget() {
  Budget b;
  b.pair_cap = 100000;
  b.degree_cap = 40;
  b.reduction_cap = 5000000;
  return b;
}

Polynomial combine(const std::vector<Polynomial>& cof, const std::vector<Polynomial>& gens) {
  Polynomial acc = Polynomial::zero(gens.front().ring());
  for (std::size_t i = 0; i < gens.size(); ++i) acc += cof[i] * gens[i];
  return acc;
}

}  // namespace

TEST_CASE("divide invariant and remainder normality") {
  std::mt19937 rng(31);
  auto ring = make_ring({"x", "y"});
  auto ord = MonomialOrdering::degrevlex();
  Budget b = big_budget();
  for (int i = 0; i < 30; ++i) {
    auto f = testutil::random_poly(ring, rng, 5, 5);
    std::vector<Polynomial> gens{testutil::random_poly(ring, rng, 3, 3),
                                 testutil::random_poly(ring, rng, 3, 3)};
    auto res = divide(f, gens, ord, b, true);
    CHECK(res.unit == Polynomial::constant(ring, 1));
    CHECK(combine(res.cofactors, gens) + res.remainder == f);
    for (const auto& [m, c] : res.remainder.terms())
      for (const auto& g : gens)
        if (!g.is_zero()) CHECK_FALSE(monomial_divides(leading_monomial(g, ord), m));
  }
}

TEST_CASE("mora invariant with an invertible unit") {
  std::mt19937 rng(37);
  auto ring = make_ring({"x", "y"});
  auto ord = MonomialOrdering::local();
  Budget b = big_budget();
  for (int i = 0; i < 30; ++i) {
    auto f = testutil::random_poly(ring, rng, 4, 4);
    std::vector<Polynomial> gens{testutil::random_poly(ring, rng, 3, 3),
                                 testutil::random_poly(ring, rng, 3, 3)};
    auto res = mora_nf(f, gens, ord, b, true);
    CHECK(res.unit.constant_term() != 0);
    CHECK(combine(res.cofactors, gens) + res.remainder == res.unit * f);
  }
}

TEST_CASE("standard basis representations reconstruct the basis") {
  auto c = testutil::ctx_xy();
  std::vector<Polynomial> gens{P(c, "x^2 + y"), P(c, "x*y + t"), P(c, "y^2 - t^2")};
  Budget b = big_budget();
  for (auto ord : {MonomialOrdering::degrevlex(), MonomialOrdering::local()}) {
    auto res = compute_standard_basis(gens, ord, b, true);
    REQUIRE(res.reps.size() == res.basis.size());
    for (std::size_t k = 0; k < res.basis.size(); ++k)
      CHECK(combine(res.reps[k], gens) == res.basis[k]);
    CHECK(buchberger_criterion_holds(res.basis, ord, b));
  }
}

TEST_CASE("well known membership facts") {
  auto c = testutil::ctx_xy();
  Budget b = big_budget();
  Ideal I(c.ring(), {P(c, "x^2"), P(c, "x*y")});
  CHECK(ideal_member(P(c, "x^2*y + x*y^2"), I, false, b));
  CHECK_FALSE(ideal_member(P(c, "x"), I, false, b));
  CHECK_FALSE(ideal_member(P(c, "y^2"), I, false, b));

  // locally x = (x + x^2) / (1 + x), so membership flips with the ordering
  Ideal J(c.ring(), {P(c, "x + x^2")});
  CHECK(ideal_member(P(c, "x"), J, true, b));
  CHECK_FALSE(ideal_member(P(c, "x"), J, false, b));
}

TEST_CASE("elimination computes the twisted cubic relation") {
  auto c = testutil::ctx_xy();
  Budget b = big_budget();
  Ideal I(c.ring(), {P(c, "x - t^2"), P(c, "y - t^3")});
  Ideal E = eliminate(I, {2}, b);
  REQUIRE_FALSE(E.generators().empty());
  VarContext sub;
  sub.spatial = {"x"};
  sub.param = "y";
  bool found = false;
  for (const auto& g : E.generators()) {
    auto h = g.primitive_part();
    if (h == parse_polynomial("x^3 - y^2", sub) ||
        h == parse_polynomial("y^2 - x^3", sub))
      found = true;
  }
  CHECK(found);
}

TEST_CASE("intersection of coordinate ideals") {
  auto c = testutil::ctx_xy();
  Budget b = big_budget();
  Ideal I(c.ring(), {P(c, "x")});
  Ideal J(c.ring(), {P(c, "y")});
  Ideal M = intersect(I, J, b);
  CHECK(ideal_member(P(c, "x*y"), M, false, b));
  CHECK_FALSE(ideal_member(P(c, "x"), M, false, b));
  CHECK_FALSE(ideal_member(P(c, "y"), M, false, b));
}

TEST_CASE("saturation removes embedded components") {
  auto c = testutil::ctx_xy();
  Budget b = big_budget();

  Ideal I(c.ring(), {P(c, "x*y")});
  Ideal S = saturate(I, Ideal(c.ring(), {P(c, "y")}), b);
  CHECK(ideal_member(P(c, "x"), S, false, b));
  CHECK_FALSE(ideal_member(P(c, "y"), S, false, b));

  // (x^2, x*y) = (x) \cap (x, y)^2, so saturating by y strips the embedded part
  Ideal I2(c.ring(), {P(c, "x^2"), P(c, "x*y")});
  Ideal S2 = saturate(I2, Ideal(c.ring(), {P(c, "y")}), b);
  CHECK(ideal_member(P(c, "x"), S2, false, b));
  CHECK_FALSE(ideal_member(P(c, "y"), S2, false, b));
  CHECK_FALSE(ideal_member(Polynomial::constant(c.ring(), 1), S2, false, b));
}

TEST_CASE("power products and ideal powers") {
  auto c = testutil::ctx_xy();
  Budget b = big_budget();
  std::vector<Polynomial> gens{P(c, "x"), P(c, "y")};
  auto prods = power_products(gens, 3, b);
  CHECK(prods.size() == 4);
  for (const auto& p : prods) {
    REQUIRE(p.indices.size() == 3);
    Polynomial expect = Polynomial::constant(c.ring(), 1);
    for (int idx : p.indices) expect = expect * gens[idx];
    CHECK(p.value == expect);
  }
  Ideal sq = ideal_power(Ideal(c.ring(), gens), 2, b);
  CHECK(ideal_member(P(c, "x^2 + 3*x*y"), sq, false, b));
  CHECK_FALSE(ideal_member(P(c, "x"), sq, false, b));
}

TEST_CASE("radical membership via Rabinowitsch") {
  auto c = testutil::ctx_xy();
  Budget b = big_budget();
  Ideal I(c.ring(), {P(c, "x^2")});
  CHECK(radical_member(P(c, "x"), I, b));
  CHECK_FALSE(radical_member(P(c, "y"), I, b));
  CHECK(radical_member(P(c, "x*y + x^3"), I, b));

  CHECK(ideal_equal_radical(Ideal(c.ring(), {P(c, "x^2"), P(c, "y")}),
                            Ideal(c.ring(), {P(c, "x"), P(c, "y^3")}), b));
  CHECK_FALSE(ideal_equal_radical(Ideal(c.ring(), {P(c, "x")}),
                                  Ideal(c.ring(), {P(c, "x"), P(c, "y")}), b));
}

TEST_CASE("local dimension classification") {
  auto c = testutil::ctx_xy();
  Budget b = big_budget();
  auto spatial = make_ring({"x", "y"});
  auto dv = local_dim_zero(Ideal(spatial, {parse_polynomial("x^2", testutil::ctx_xy()).map_to_ring(spatial),
                                           parse_polynomial("y^3", testutil::ctx_xy()).map_to_ring(spatial)}),
                           b);
  CHECK(dv.value == DimVerdict::DimZeroAtOrigin);
  CHECK(dv.pure_powers.size() == 2);

  auto dv2 = local_dim_zero(Ideal(spatial, {parse_polynomial("x*y", testutil::ctx_xy()).map_to_ring(spatial)}), b);
  CHECK(dv2.value == DimVerdict::PositiveDimensional);

  auto dv3 = local_dim_zero(Ideal(spatial, {parse_polynomial("1 + x", testutil::ctx_xy()).map_to_ring(spatial)}), b);
  CHECK(dv3.value == DimVerdict::EmptyAtOrigin);
}

TEST_CASE("unique_name avoids collisions") {
  Ring r{{"u", "u0", "t"}};
  auto n = unique_name(r, "u");
  CHECK(r.index(n) == -1);
}

TEST_CASE("budget caps raise instead of running away") {
  auto c = testutil::ctx_xy();
  Budget tiny;
  tiny.pair_cap = 1;
  tiny.reduction_cap = 5;
  std::vector<Polynomial> gens{P(c, "x^3*y + y^2"), P(c, "x*y^3 + x^2"), P(c, "x^2 + y^2 + x*y")};
  CHECK_THROWS_AS(compute_standard_basis(gens, MonomialOrdering::degrevlex(), tiny),
                  BudgetExceeded);
}

TEST_CASE("membership agrees with the linear algebra oracle") {
  std::mt19937 rng(101);
  Budget b = big_budget();
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + (trial % 2);
    std::vector<std::string> names{"x", "y", "z"};
    names.resize(n);
    auto ring = make_ring(names);
    std::vector<Polynomial> gens;
    int ng = 2 + static_cast<int>(rng() % 2);
    for (int i = 0; i < ng; ++i) {
      auto g = testutil::random_poly(ring, rng, 3, 3);
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    Ideal I(ring, gens);

    // constructed members must be recognized
    Polynomial member = Polynomial::zero(ring);
    for (const auto& g : gens) member += testutil::random_poly(ring, rng, 2, 2) * g;
    CHECK(ideal_member(member, I, false, b));

    // a solvable linear system is a genuine membership witness
    auto f = testutil::random_poly(ring, rng, 3, 3);
    bool member_gb = ideal_member(f, I, false, b);
    if (!member_gb) {
      int bound = f.degree() + 3;
      CHECK_FALSE(testutil::linear_membership(f, gens, bound));
    } else {
      CHECK(testutil::linear_membership(f, gens, f.degree() + 6));
    }
  }
}

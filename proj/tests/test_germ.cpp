#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "tamecheck/germ.hpp"

using namespace tamecheck;
using testutil::P;

namespace {

Polynomial ex61_F() { return P(testutil::ctx_xy(), "y^2*(x^2 - (y - t)^2)"); }

}  // namespace

TEST_CASE("singular loci of the splitting line family") {
  auto F = ex61_F();
  auto loci = build_singular_loci(F, 2);
  Budget b;

  CHECK(loci.n == 2);
  REQUIRE(loci.sing_F0.generators().size() == 2);
  for (const auto& g : loci.sing_F0.generators()) CHECK_FALSE(g.depends_on(2));
  CHECK(loci.sing_F.generators().size() == 3);
  CHECK(loci.sing_Ftilde.generators().size() == 2);

  // Z(Sing Ftilde) = {x=0, y=t} u {x=0, 2y=t} u {y=0}
  auto c = testutil::ctx_xy();
  Ideal L1(c.ring(), {P(c, "x"), P(c, "y - t")});
  Ideal L2(c.ring(), {P(c, "x"), P(c, "2*y - t")});
  Ideal L3(c.ring(), {P(c, "y")});
  Ideal lines = intersect(intersect(L1, L2, b), L3, b);
  CHECK(ideal_equal_radical(loci.sing_Ftilde, lines, b));
}

TEST_CASE("discriminant of the splitting line family") {
  auto F = ex61_F();
  auto loci = build_singular_loci(F, 2);
  Budget b;
  auto disc = discriminant(F, loci, b);
  CHECK_FALSE(disc.empty);
  REQUIRE(disc.uv_ring);
  REQUIRE_FALSE(disc.ideal.generators().empty());

  // the parametrization (-t^4/16, t) of the nontrivial branch
  VarContext uv;
  uv.spatial = {disc.uv_ring->vars[0]};
  uv.param = disc.uv_ring->vars[1];
  Ideal expect(disc.uv_ring,
               {parse_polynomial(uv.spatial[0] + "*(16*" + uv.spatial[0] + " + " +
                                     uv.param + "^4)",
                                 uv)});
  CHECK(ideal_equal_radical(disc.ideal, expect, b));

  // pullback generators really are the composites with (F, t)
  auto ring = F.ring();
  for (std::size_t i = 0; i < disc.ideal.generators().size(); ++i) {
    std::vector<Polynomial> images;
    for (int k = 0; k < 3; ++k) images.push_back(Polynomial::variable(ring, k));
    // u -> F, v -> t
    images.push_back(F);
    images.push_back(Polynomial::variable(ring, 2));
    auto mapped = disc.ideal.generators()[i].map_to_ring(
        extend_ring(ring, {disc.uv_ring->vars[0], disc.uv_ring->vars[1]}));
    CHECK(mapped.substitute(images) == disc.pullback[i]);
  }
}

TEST_CASE("milnor set of the product family strictly shrinks under saturation") {
  auto c = testutil::ctx_xyz();
  auto F = P(c, "(x^2 + y^2*z)*(x - t)");
  auto loci = build_singular_loci(F, 3);
  Budget b;
  auto disc = discriminant(F, loci, b);
  auto M = milnor_set(F, loci, disc, b);
  CHECK(M.minors_ideal.generators().size() == 3);  // pairs of 3 spatial vars
  CHECK(M.removed);
  for (const auto& g : M.saturated_ideal.generators()) CHECK_FALSE(g.is_zero());
}

TEST_CASE("cond0 holds for the splitting line family") {
  auto loci = build_singular_loci(ex61_F(), 2);
  Budget b;
  auto v = check_cond0(loci, b);
  CHECK(v.status == Status::Holds);
}

TEST_CASE("cond0 fails with a real witness when dF/dt cuts the slice") {
  VarContext c;
  c.spatial = {"x"};
  auto F = parse_polynomial("x*t", c);
  auto loci = build_singular_loci(F, 1);
  Budget b;
  auto v = check_cond0(loci, b);
  CHECK(v.status == Status::Fails);
  auto* w = std::get_if<PointWitness>(&v.evidence);
  REQUIRE(w);
  std::string why;
  CHECK(verify_point_witness(*w, &why));
}

TEST_CASE("tame verdicts on the corpus germs") {
  Budget b;
  {
    auto F = ex61_F();
    auto loci = build_singular_loci(F, 2);
    auto disc = discriminant(F, loci, b);
    auto M = milnor_set(F, loci, disc, b);
    auto v = check_tame(M, loci, {}, b);
    CHECK(v.status == Status::Holds);
  }
  {
    auto c = testutil::ctx_xyz();
    auto F = P(c, "y^2 + x^2*(t*z - x)");
    auto loci = build_singular_loci(F, 3);
    auto disc = discriminant(F, loci, b);
    auto M = milnor_set(F, loci, disc, b);
    Point z_axis{Rational(0), Rational(0), Rational(1)};
    auto v = check_tame(M, loci, {z_axis}, b);
    CHECK(v.status == Status::Fails);
    auto* w = std::get_if<PointWitness>(&v.evidence);
    REQUIRE(w);
    // witness on the z-axis at t = 0
    REQUIRE(w->point.size() == 4);
    CHECK(w->point[0] == 0);
    CHECK(w->point[1] == 0);
    CHECK(w->point[2] != 0);
    CHECK(w->point[3] == 0);
    std::string why;
    CHECK(verify_point_witness(*w, &why));
  }
}

TEST_CASE("coordinate subspace points are deterministic and well formed") {
  auto pts1 = coordinate_subspace_points(3);
  auto pts2 = coordinate_subspace_points(3);
  CHECK(pts1 == pts2);
  CHECK_FALSE(pts1.empty());
  for (const auto& p : pts1) {
    REQUIRE(p.size() == 3);
    int nonzero = 0;
    for (const auto& c : p) {
      if (c != 0) {
        ++nonzero;
        Rational a = c < 0 ? Rational(-c) : c;
        bool ok = (a == 1) || (a == 2) || (a == Rational(1, 2));
        CHECK(ok);
      }
    }
    CHECK(nonzero >= 1);
    CHECK(nonzero <= 2);
  }
}

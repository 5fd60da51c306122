#ifndef TAMECHECK_GERM_HPP
#define TAMECHECK_GERM_HPP

#include "tamecheck/ideal.hpp"
#include "tamecheck/verdict.hpp"

namespace tamecheck {

// All ideals live in the full (x_1..x_n, t) ring; sing_F0 generators are
// free of t.
struct SingularLoci {
  int n = 0;  // spatial arity
  Ideal sing_F0;      // spatial partials of F, sliced at t = 0
  Ideal sing_F;       // all n+1 partials of F
  Ideal sing_Ftilde;  // the n spatial partials of F
};

SingularLoci build_singular_loci(const Polynomial& F, int n);

struct Discriminant {
  RingPtr uv_ring;                  // (u, v): u tracks F's value, v tracks t
  Ideal ideal;                      // elimination ideal in (u, v)
  std::vector<Polynomial> pullback; // generators composed with (F, t), full ring
  bool empty = false;               // unit ideal: Sing Ftilde empty near 0
};

Discriminant discriminant(const Polynomial& F, const SingularLoci& loci,
                          Budget& budget);

struct MilnorSet {
  Ideal minors_ideal;     // x_i dF/dx_j - x_j dF/dx_i, i < j spatial
  Ideal saturated_ideal;  // minors saturated by the discriminant pullback
  bool removed = false;   // saturation strictly enlarged the ideal
};

MilnorSet milnor_set(const Polynomial& F, const SingularLoci& loci,
                     const Discriminant& delta, Budget& budget);

// Zariski equality of the t=0 slices of Sing F and Sing Ftilde. A complex
// separation without a real witness point near 0 yields UNDETERMINED.
Verdict check_cond0(const SingularLoci& loci, Budget& budget);

// Milnor set meets {t=0} and Sing F0 only at the origin. Unconditional
// HOLDS when even the unsaturated intersection is dim-zero at the origin;
// HOLDS with-caveat when only the saturated one is.
Verdict check_tame(const MilnorSet& M, const SingularLoci& loci,
                   const std::vector<Point>& witness_points, Budget& budget);

// Points with at most two nonzero coordinates drawn from {+-1, +-1/2, +-2},
// in deterministic order; arity-sized, excludes the origin.
std::vector<Point> coordinate_subspace_points(int arity);

}  // namespace tamecheck

#endif

#ifndef TAMECHECK_CLOSURE_HPP
#define TAMECHECK_CLOSURE_HPP

#include "tamecheck/germ.hpp"
#include "tamecheck/ideal.hpp"
#include "tamecheck/verdict.hpp"

namespace tamecheck {

// Polynomial test arcs, graded by total weight (sum of the exponents used
// across coordinates), then by the number of nonzero coordinates. Each
// coordinate is zero, a single term c*s^w, or (for at most one coordinate)
// a two-term combination c1*s^w1 + c2*s^w2 with w1 < w2 <= max_weight.
// Coefficients range over {1,-1,2,-2,1/2,-1/2,3,-3,3/2,-3/2}.
struct ArcCatalogOptions {
  int max_weight = 4;
  long max_arcs = 40000;
};

const std::vector<Arc>& arc_catalog(int arity, const ArcCatalogOptions& opts);

struct ClosureOptions {
  int max_power = 6;  // certificate sweep f^m in J^m, m = 1..max_power
  ArcCatalogOptions arcs;
};

struct ClosureResult {
  Status status = Status::Undetermined;
  std::optional<ClosureCertificate> certificate;  // Holds
  std::optional<ArcWitness> witness;              // Fails
  std::string note;
};

// Membership of f in the integral closure of I, as a germ at `base` (a point
// covering the full ring arity). HOLDS and FAILS both carry re-verifiable
// evidence; the certificate route is sound but incomplete, so the fallback
// is UNDETERMINED. When `avoid` is nonempty, falsifying arcs must leave its
// zero set.
ClosureResult closure_member(const Polynomial& f, const Ideal& I, const Point& base,
                             const std::vector<Polynomial>& avoid,
                             const ClosureOptions& opts, Budget& budget);

// First catalog arc mu at `base` with ord(f o mu) finite and strictly below
// every generator's order, escaping Z(avoid) when avoid is given.
std::optional<ArcWitness> arc_falsify(const Polynomial& f,
                                      const std::vector<Polynomial>& gens,
                                      const std::vector<Polynomial>& avoid,
                                      const Point& base,
                                      const ArcCatalogOptions& opts);

// dF/dt in the closure of the spatial-partials ideal at each base point of
// {origin} plus the qualifying supplied witness points (those on
// Sing F0 /\ {dF/dt|t=0 = 0}). Unqualified HOLDS needs the sampling to be
// exhaustive, which is certified only when that locus is the origin alone.
Verdict check_cond2(const Polynomial& F, const SingularLoci& loci,
                    const std::vector<Point>& witness_points,
                    const ClosureOptions& opts, Budget& budget);

// Same membership with arcs restricted off Sing Ftilde, at nonzero base
// points sampled from the coordinate-subspace components of Sing F0; the
// origin is excluded. HOLDS is qualified on-sample when the components
// provably cover Sing F0.
Verdict check_cond(const Polynomial& F, const SingularLoci& loci,
                   const std::vector<Point>& witness_points,
                   const ClosureOptions& opts, Budget& budget);

struct JacobianCheck {
  int var = 0;  // spatial index i
  int j = 0;    // t-expansion coefficient index, j >= 1
  Verdict verdict;
};

struct JacobianResult {
  Verdict verdict;
  std::vector<JacobianCheck> checks;
};

// d_i f_j in closure((d f_0)) at the origin of the spatial ring, for every
// j >= 1 and spatial i. All HOLDS gives HOLDS; any FAILS is a definitive
// counterexample to the Jacobian-ideal inclusion hypothesis.
JacobianResult jacobian_criterion(const Polynomial& F, int n,
                                  const ClosureOptions& opts, Budget& budget);

struct OrderDiagnostics {
  bool applicable = true;
  std::string note;
  long kappa = ORDER_INFINITY;  // min order of the d f_0 along the arc
  int min_index = -1;           // spatial index attaining kappa
  struct PerCoefficient {
    int j;
    long ord_fj;
    bool exceeds_kappa;
  };
  std::vector<PerCoefficient> coeffs;
  bool full_partial_matches = false;  // ord(dF/dx_l along the (x,t) arc) == kappa
};

// Sanity record for the order lemmas backing the Jacobian criterion. The arc
// may have arity n (then t(s) = 0) or n+1.
OrderDiagnostics order_lemma_diagnostics(const Polynomial& F, int n, const Arc& arc);

// Maximal coordinate subspaces contained in Z(I); each entry lists the free
// spatial variable indices. I lives in the (x, t) ring with t-free gens.
std::vector<std::vector<int>> subspace_components(const Ideal& I, int n);

}  // namespace tamecheck

#endif

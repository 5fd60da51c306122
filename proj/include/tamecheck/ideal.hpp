#ifndef TAMECHECK_IDEAL_HPP
#define TAMECHECK_IDEAL_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tamecheck/budget.hpp"
#include "tamecheck/ordering.hpp"
#include "tamecheck/polynomial.hpp"

namespace tamecheck {

// unit * f = sum_i cofactors[i] * reducers[i] + remainder.
// For global orderings unit == 1; for local orderings unit is invertible at
// the origin (nonzero constant term), which is what Mora reduction delivers.
struct DivisionResult {
  Polynomial remainder;
  Polynomial unit;
  std::vector<Polynomial> cofactors;  // empty unless tracking requested
};

// Classic multivariate division; global orderings only. Remainder has no
// term divisible by any reducer's leading monomial.
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& reducers,
                      const MonomialOrdering& ord, Budget& budget, bool track = false);

// Mora weak normal form: remainder's leading monomial is not divisible by
// any reducer's leading monomial. Works for any ordering; required for
// local ones. Intermediate partial remainders join the reducer set when
// their ecart drops below the current one.
DivisionResult mora_nf(const Polynomial& f, const std::vector<Polynomial>& reducers,
                       const MonomialOrdering& ord, Budget& budget, bool track = false);

// Local orderings dispatch to mora_nf, global ones to divide.
DivisionResult normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                           const MonomialOrdering& ord, Budget& budget,
                           bool track = false);

struct StandardBasisResult {
  std::vector<Polynomial> basis;
  // basis[k] = sum_i reps[k][i] * generators[i]  (when tracking requested)
  std::vector<std::vector<Polynomial>> reps;
};

// Buchberger with Gebauer-Moller pair elimination; Mora normal form when the
// ordering is local. Global results are reduced (hence canonical), local
// results are minimal, monic and deterministically sorted.
StandardBasisResult compute_standard_basis(const std::vector<Polynomial>& gens,
                                           const MonomialOrdering& ord, Budget& budget,
                                           bool track = false);

// Verifies that every S-polynomial of the basis reduces to zero.
bool buchberger_criterion_holds(const std::vector<Polynomial>& basis,
                                const MonomialOrdering& ord, Budget& budget);

class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero_ideal() const { return gens_.empty(); }

  const std::vector<Polynomial>& standard_basis(const MonomialOrdering& ord,
                                                Budget& budget) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  mutable std::map<std::string, std::vector<Polynomial>> cache_;
};

bool ideal_member(const Polynomial& f, const Ideal& I, bool local, Budget& budget);

// I intersected with the subring omitting drop_vars (indices); the returned
// ideal lives in the subring.
Ideal eliminate(const Ideal& I, const std::vector<int>& drop_vars, Budget& budget);

Ideal intersect(const Ideal& I, const Ideal& J, Budget& budget);

// I : J^infinity via per-generator Rabinowitsch elimination, intersected.
Ideal saturate(const Ideal& I, const Ideal& J, Budget& budget);

// All m-fold products of generators, with the index multiset of each product.
struct PowerProduct {
  std::vector<int> indices;  // nondecreasing, length m
  Polynomial value;
};
std::vector<PowerProduct> power_products(const std::vector<Polynomial>& gens, int m,
                                         Budget& budget);
Ideal ideal_power(const Ideal& I, int m, Budget& budget);

// f vanishes on Z(I) over the algebraic closure (Rabinowitsch trick).
bool radical_member(const Polynomial& f, const Ideal& I, Budget& budget);

// Zariski zero-set equality over the algebraic closure.
bool ideal_equal_radical(const Ideal& I, const Ideal& J, Budget& budget);

struct DimVerdict {
  enum Value { DimZeroAtOrigin, PositiveDimensional, EmptyAtOrigin };
  Value value;
  std::vector<Monomial> pure_powers;  // certificate, one per variable, iff dim-zero
};

DimVerdict local_dim_zero(const Ideal& I, Budget& budget);

// Fresh variable name not colliding with the ring's.
std::string unique_name(const Ring& ring, const std::string& stem);

}  // namespace tamecheck

#endif

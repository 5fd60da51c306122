#ifndef TAMECHECK_ORDERING_HPP
#define TAMECHECK_ORDERING_HPP

#include <string>
#include <vector>

#include "tamecheck/polynomial.hpp"

namespace tamecheck {

// Monomial orderings on a fixed ring. Global kinds are well-orderings;
// the local kind has 1 as its largest monomial, which realizes germ-at-the-
// origin semantics via Mora normal forms.
struct MonomialOrdering {
  enum Kind { GlobalDegRevLex, GlobalBlockElim, LocalNegDegRevLex };
  Kind kind = GlobalDegRevLex;
  // For GlobalBlockElim: indices of the front (eliminated) block.
  std::vector<int> front;

  static MonomialOrdering degrevlex() { return {GlobalDegRevLex, {}}; }
  static MonomialOrdering local() { return {LocalNegDegRevLex, {}}; }
  static MonomialOrdering elim(std::vector<int> front_block) {
    return {GlobalBlockElim, std::move(front_block)};
  }

  bool is_global() const { return kind != LocalNegDegRevLex; }
  // strict a < b in the ordering
  bool less(const Monomial& a, const Monomial& b) const;
  std::string key() const;  // cache key
};

// Largest term of p under ord; p must be nonzero.
std::pair<Monomial, Rational> leading_term(const Polynomial& p,
                                           const MonomialOrdering& ord);
Monomial leading_monomial(const Polynomial& p, const MonomialOrdering& ord);

// ecart(p) = deg(p) - deg(LM(p)); the Mora reducer-selection measure.
int ecart(const Polynomial& p, const MonomialOrdering& ord);

}  // namespace tamecheck

#endif

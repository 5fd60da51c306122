#ifndef TAMECHECK_ARC_HPP
#define TAMECHECK_ARC_HPP

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tamecheck/polynomial.hpp"

namespace tamecheck {

// Univariate polynomial in the arc parameter s, exponent -> coefficient.
using Univar = std::map<int, Rational>;

Univar univar_mul(const Univar& a, const Univar& b);
void univar_add(Univar& a, const Univar& b);
std::string univar_str(const Univar& u);  // in variable "s", re-parseable

inline constexpr long ORDER_INFINITY = std::numeric_limits<long>::max();

// Parametrized curve s -> (c_1(s), ..., c_k(s)), one coordinate per ring
// variable of the polynomials it is composed with. Coordinates vanish at
// s = 0; an optional base point shifts the arc away from the origin.
struct Arc {
  std::vector<Univar> coords;
  std::optional<Point> base_point;

  std::size_t arity() const { return coords.size(); }
  bool coords_vanish_at_zero() const;
  std::string str() const;
};

struct ArcOrderResult {
  long order;  // ORDER_INFINITY iff composite is identically zero
  Rational leading_coeff;
};

// p(mu(s)); when mu carries a base point, p is first translated to it.
Univar arc_compose(const Polynomial& p, const Arc& mu);
ArcOrderResult arc_order(const Polynomial& p, const Arc& mu);

}  // namespace tamecheck

#endif

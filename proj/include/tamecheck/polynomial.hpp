#ifndef TAMECHECK_POLYNOMIAL_HPP
#define TAMECHECK_POLYNOMIAL_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tamecheck/rational.hpp"

namespace tamecheck {

// Ordered list of variable names. Deformation rings put the parameter last:
// (x_1, ..., x_n, t). Derived rings append auxiliary variables after that.
struct Ring {
  std::vector<std::string> vars;

  std::size_t size() const { return vars.size(); }
  int index(const std::string& name) const;  // -1 when absent
  bool operator==(const Ring& o) const { return vars == o.vars; }
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars);
// New ring with extra names appended (names must be fresh).
RingPtr extend_ring(const RingPtr& r, const std::vector<std::string>& extra);

// Dense exponent vector, one slot per ring variable.
using Monomial = std::vector<int>;

int total_degree(const Monomial& m);
bool monomial_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial monomial_lcm(const Monomial& a, const Monomial& b);
Monomial monomial_quot(const Monomial& b, const Monomial& a);  // b / a
Monomial monomial_mul(const Monomial& a, const Monomial& b);

using Point = std::vector<Rational>;

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, int idx);
  static Polynomial term(RingPtr ring, Monomial m, const Rational& c);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int degree() const;  // total degree, -1 for zero
  std::size_t term_count() const { return terms_.size(); }

  Rational coeff(const Monomial& m) const;
  Rational constant_term() const;

  void add_term(const Monomial& m, const Rational& c);  // canonicalizing

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial pow(int k, int max_degree_cap = 0) const;
  Polynomial diff(int var) const;

  // Simultaneous substitution: images[i] replaces variable i; all images
  // share one target ring.
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  // Map by variable name into another ring (every used variable must exist).
  Polynomial map_to_ring(const RingPtr& target) const;
  // p(x + x0, t): x0 covers the leading coordinates, others untouched.
  Polynomial translate(const Point& x0) const;
  // Substitute var := value, staying in the same ring.
  Polynomial set_var(int var, const Rational& value) const;

  Rational evaluate(const Point& p) const;  // p covers all ring variables
  bool depends_on(int var) const;

  // gcd of integer contents after clearing denominators; result has
  // integer coprime coefficients and positive coefficient on the
  // lexicographically largest monomial.
  Polynomial primitive_part() const;

  std::string str() const;  // canonical, re-parseable

 private:
  void check_same_ring(const Polynomial& o) const;
  RingPtr ring_;
  TermMap terms_;
};

// F = sum_j t^j f_j with f_j free of the parameter; param is the index of t.
// Throws std::invalid_argument if some f_j has nonzero constant term.
std::vector<Polynomial> t_expansion(const Polynomial& F, int param);

}  // namespace tamecheck

#endif

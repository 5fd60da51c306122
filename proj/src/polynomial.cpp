#include "tamecheck/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tamecheck {

int Ring::index(const std::string& name) const {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return static_cast<int>(i);
  return -1;
}

RingPtr make_ring(std::vector<std::string> vars) {
  return std::make_shared<Ring>(Ring{std::move(vars)});
}

RingPtr extend_ring(const RingPtr& r, const std::vector<std::string>& extra) {
  std::vector<std::string> v = r->vars;
  for (const auto& name : extra) {
    if (r->index(name) >= 0)
      throw std::invalid_argument("extend_ring: variable already present: " + name);
    v.push_back(name);
  }
  return make_ring(std::move(v));
}

int total_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

bool monomial_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Monomial monomial_quot(const Monomial& b, const Monomial& a) {
  Monomial r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = b[i] - a[i];
  return r;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_[Monomial(p.ring_->size(), 0)] = c;
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, int idx) {
  Polynomial p(std::move(ring));
  Monomial m(p.ring_->size(), 0);
  m.at(idx) = 1;
  p.terms_[m] = 1;
  return p;
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const Rational& c) {
  Polynomial p(std::move(ring));
  if (m.size() != p.ring_->size())
    throw std::invalid_argument("term: monomial arity mismatch");
  if (c != 0) p.terms_[std::move(m)] = c;
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
  return d;
}

Rational Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const {
  return coeff(Monomial(ring_->size(), 0));
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_same_ring(const Polynomial& o) const {
  if (ring_ == o.ring_) return;
  if (!ring_ || !o.ring_ || !(*ring_ == *o.ring_))
    throw std::invalid_argument("polynomial ring mismatch");
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r -= o;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(o);
  Polynomial r(ring_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(monomial_mul(ma, mb), ca * cb);
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  for (const auto& [m, cc] : terms_) r.terms_[m] = cc * c;
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  check_same_ring(o);
  return terms_ == o.terms_;
}

Polynomial Polynomial::pow(int k, int max_degree_cap) const {
  if (k < 0) throw std::invalid_argument("negative exponent");
  Polynomial r = constant(ring_, 1);
  for (int i = 0; i < k; ++i) {
    r = r * (*this);
    if (max_degree_cap > 0 && r.degree() > max_degree_cap)
      throw std::invalid_argument("exponent cap exceeded in pow");
  }
  return r;
}

Polynomial Polynomial::diff(int var) const {
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    r.add_term(d, c * m[var]);
  }
  return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != ring_->size())
    throw std::invalid_argument("substitute: need one image per variable");
  RingPtr target = images.front().ring();
  Polynomial result(target);
  // cache powers per variable
  std::vector<std::vector<Polynomial>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i)
    powers[i].push_back(Polynomial::constant(target, 1));
  for (const auto& [m, c] : terms_) {
    Polynomial prod = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      int e = m[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[i]);
      prod = prod * pw[e];
    }
    result += prod;
  }
  return result;
}

Polynomial Polynomial::map_to_ring(const RingPtr& target) const {
  std::vector<Polynomial> images;
  images.reserve(ring_->size());
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    int j = target->index(ring_->vars[i]);
    if (j < 0) {
      if (depends_on(static_cast<int>(i)))
        throw std::invalid_argument("map_to_ring: variable " + ring_->vars[i] +
                                    " missing in target ring");
      images.push_back(Polynomial::zero(target));
    } else {
      images.push_back(Polynomial::variable(target, j));
    }
  }
  return substitute(images);
}

Polynomial Polynomial::translate(const Point& x0) const {
  if (x0.size() > ring_->size())
    throw std::invalid_argument("translate: too many coordinates");
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    Polynomial v = Polynomial::variable(ring_, static_cast<int>(i));
    if (i < x0.size() && x0[i] != 0)
      v += Polynomial::constant(ring_, x0[i]);
    images.push_back(std::move(v));
  }
  return substitute(images);
}

Polynomial Polynomial::set_var(int var, const Rational& value) const {
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) {
    int e = m[var];
    if (e == 0) {
      r.add_term(m, c);
      continue;
    }
    if (value == 0) continue;
    Rational scale = c;
    for (int k = 0; k < e; ++k) scale *= value;
    Monomial mm = m;
    mm[var] = 0;
    r.add_term(mm, scale);
  }
  return r;
}

Rational Polynomial::evaluate(const Point& p) const {
  if (p.size() != ring_->size())
    throw std::invalid_argument("evaluate: point arity mismatch");
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int k = 0; k < m[i]; ++k) v *= p[i];
    acc += v;
  }
  return acc;
}

bool Polynomial::depends_on(int var) const {
  for (const auto& [m, c] : terms_)
    if (m[var] > 0) return true;
  return false;
}

Polynomial Polynomial::primitive_part() const {
  if (terms_.empty()) return *this;
  mpz_class den(1);
  for (const auto& [m, c] : terms_) {
    mpz_class d = c.get_den();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  mpz_class content(0);
  for (const auto& [m, c] : terms_) {
    mpz_class num = mpq_class(c * den).get_num();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
  }
  Rational scale(den, content);
  scale.canonicalize();
  if (terms_.rbegin()->second * scale < 0) scale = -scale;
  return *this * scale;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  // descending by (total degree, exponent vector): stable, human-friendly
  std::vector<const TermMap::value_type*> ts;
  for (const auto& t : terms_) ts.push_back(&t);
  std::stable_sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
    int da = total_degree(a->first), db = total_degree(b->first);
    if (da != db) return da > db;
    return a->first > b->first;
  });
  bool first = true;
  for (auto* t : ts) {
    const Rational& c = t->second;
    Rational ac = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool unit_coeff = (ac == 1);
    bool any_var = total_degree(t->first) > 0;
    if (!unit_coeff || !any_var) out << ac.get_str();
    bool need_star = !unit_coeff || !any_var;
    for (std::size_t i = 0; i < t->first.size(); ++i) {
      int e = t->first[i];
      if (e == 0) continue;
      if (need_star) out << "*";
      out << ring_->vars[i];
      if (e > 1) out << "^" << e;
      need_star = true;
    }
  }
  return out.str();
}

std::vector<Polynomial> t_expansion(const Polynomial& F, int param) {
  int dmax = 0;
  for (const auto& [m, c] : F.terms()) dmax = std::max(dmax, m[param]);
  std::vector<Polynomial> fs(dmax + 1, Polynomial::zero(F.ring()));
  for (const auto& [m, c] : F.terms()) {
    Monomial mm = m;
    int j = mm[param];
    mm[param] = 0;
    fs[j].add_term(mm, c);
  }
  for (std::size_t j = 0; j < fs.size(); ++j)
    if (fs[j].constant_term() != 0)
      throw std::invalid_argument("t-expansion coefficient f_" + std::to_string(j) +
                                  " has nonzero value at the origin");
  return fs;
}

}  // namespace tamecheck

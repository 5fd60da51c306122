#include "tamecheck/ordering.hpp"

#include <sstream>
#include <stdexcept>

namespace tamecheck {

namespace {

// classic degrevlex: a < b iff deg a < deg b, or degrees tie and the last
// index where they differ has a[i] > b[i]
int cmp_degrevlex(const Monomial& a, const Monomial& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

int cmp_degrevlex_block(const Monomial& a, const Monomial& b,
                        const std::vector<int>& idx) {
  int da = 0, db = 0;
  for (int i : idx) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
    if (a[*it] != b[*it]) return a[*it] > b[*it] ? -1 : 1;
  }
  return 0;
}

}  // namespace

bool MonomialOrdering::less(const Monomial& a, const Monomial& b) const {
  switch (kind) {
    case GlobalDegRevLex:
      return cmp_degrevlex(a, b) < 0;
    case LocalNegDegRevLex: {
      int da = total_degree(a), db = total_degree(b);
      if (da != db) return da > db;  // lower degree is larger
      for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] > b[i];
      return false;
    }
    case GlobalBlockElim: {
      int c = cmp_degrevlex_block(a, b, front);
      if (c != 0) return c < 0;
      std::vector<int> back;
      for (int i = 0; i < static_cast<int>(a.size()); ++i) {
        bool in_front = false;
        for (int j : front)
          if (j == i) { in_front = true; break; }
        if (!in_front) back.push_back(i);
      }
      return cmp_degrevlex_block(a, b, back) < 0;
    }
  }
  throw std::logic_error("unreachable ordering kind");
}

std::string MonomialOrdering::key() const {
  std::ostringstream out;
  switch (kind) {
    case GlobalDegRevLex: out << "dp"; break;
    case LocalNegDegRevLex: out << "ds"; break;
    case GlobalBlockElim:
      out << "elim";
      for (int i : front) out << ":" << i;
      break;
  }
  return out.str();
}

std::pair<Monomial, Rational> leading_term(const Polynomial& p,
                                           const MonomialOrdering& ord) {
  if (p.is_zero()) throw std::invalid_argument("leading_term of zero polynomial");
  auto it = p.terms().begin();
  auto best = it;
  for (++it; it != p.terms().end(); ++it)
    if (ord.less(best->first, it->first)) best = it;
  return {best->first, best->second};
}

Monomial leading_monomial(const Polynomial& p, const MonomialOrdering& ord) {
  return leading_term(p, ord).first;
}

int ecart(const Polynomial& p, const MonomialOrdering& ord) {
  return p.degree() - total_degree(leading_monomial(p, ord));
}

}  // namespace tamecheck

#include "tamecheck/arc.hpp"

#include <sstream>
#include <stdexcept>

namespace tamecheck {

Univar univar_mul(const Univar& a, const Univar& b) {
  Univar r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      auto [it, inserted] = r.emplace(ea + eb, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) r.erase(it);
      }
    }
  return r;
}

void univar_add(Univar& a, const Univar& b) {
  for (const auto& [e, c] : b) {
    auto [it, inserted] = a.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) a.erase(it);
    }
  }
}

std::string univar_str(const Univar& u) {
  if (u.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = u.rbegin(); it != u.rend(); ++it) {
    const Rational& c = it->second;
    Rational ac = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    int e = it->first;
    if (ac != 1 || e == 0) out << ac.get_str();
    if (e > 0) {
      if (ac != 1) out << "*";
      out << "s";
      if (e > 1) out << "^" << e;
    }
  }
  return out.str();
}

bool Arc::coords_vanish_at_zero() const {
  for (const auto& c : coords)
    if (c.count(0)) return false;
  return true;
}

std::string Arc::str() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out << ", ";
    out << univar_str(coords[i]);
  }
  out << ")";
  return out.str();
}

Univar arc_compose(const Polynomial& p, const Arc& mu) {
  if (mu.arity() != p.ring()->size())
    throw std::invalid_argument("arc_compose: arity mismatch");
  if (!mu.coords_vanish_at_zero())
    throw std::invalid_argument("arc coordinates must vanish at s=0");
  const Polynomial q = mu.base_point ? p.translate(*mu.base_point) : p;
  Univar result;
  std::vector<std::vector<Univar>> powers(mu.arity());
  for (std::size_t i = 0; i < mu.arity(); ++i)
    powers[i].push_back(Univar{{0, Rational(1)}});
  for (const auto& [m, c] : q.terms()) {
    Univar prod{{0, c}};
    for (std::size_t i = 0; i < m.size(); ++i) {
      int e = m[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      while (static_cast<int>(pw.size()) <= e)
        pw.push_back(univar_mul(pw.back(), mu.coords[i]));
      if (pw[e].empty()) {
        prod.clear();
        break;
      }
      prod = univar_mul(prod, pw[e]);
    }
    univar_add(result, prod);
  }
  return result;
}

ArcOrderResult arc_order(const Polynomial& p, const Arc& mu) {
  Univar u = arc_compose(p, mu);
  if (u.empty()) return {ORDER_INFINITY, Rational(0)};
  auto it = u.begin();
  return {static_cast<long>(it->first), it->second};
}

}  // namespace tamecheck

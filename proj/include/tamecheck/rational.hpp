#ifndef TAMECHECK_RATIONAL_HPP
#define TAMECHECK_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace tamecheck {

using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Accepts "p" or "p/q", optional leading sign.
inline Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

}  // namespace tamecheck

#endif

#include "tamecheck/corpus.hpp"

namespace tamecheck {

const std::vector<CorpusEntry>& corpus_examples() {
  static const std::vector<CorpusEntry> entries = {
      {"ex6.1",
       "plane curve family with a splitting singular line",
       "vars = x y\n"
       "param = t\n"
       "F = y^2*(x^2 - (y - t)^2)\n"},
      {"ex6.2",
       "three-variable family controlled by the Jacobian criterion",
       "vars = z1 z2 z3\n"
       "param = t\n"
       "F = z1^5 + z2^5 + z1^6*z2^6*z3^2 + t*z1^3*z2^3\n"
       "witness = 0 0 1\n"},
      {"ex6.3",
       "product family, tame but violating the arc condition",
       "vars = x y z\n"
       "param = t\n"
       "F = (x^2 + y^2*z)*(x - t)\n"
       "witness = 0 0 1\n"},
      {"ex6.4",
       "non-tame family whose Milnor set contains the singular axis",
       "vars = x y z\n"
       "param = t\n"
       "F = y^2 + x^2*(t*z - x)\n"
       "witness = 0 0 1\n"},
  };
  return entries;
}

}  // namespace tamecheck

#ifndef TAMECHECK_BUDGET_HPP
#define TAMECHECK_BUDGET_HPP

#include <stdexcept>
#include <string>

namespace tamecheck {

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Caps for basis computations. Exceeding a cap raises BudgetExceeded, which
// upstream code converts to an UNDETERMINED verdict - never a wrong answer.
struct Budget {
  long pair_cap = 200000;
  int degree_cap = 60;
  long reduction_cap = 2000000;  // reduction steps across one basis run
  long generator_cap = 4000;     // e.g. ideal_power output size

  // usage counters (cumulative across the owning analysis)
  long pairs_used = 0;
  long reductions_used = 0;
  int max_degree_seen = 0;

  void count_pair() {
    if (++pairs_used > pair_cap)
      throw BudgetExceeded("pair budget exceeded (" + std::to_string(pair_cap) + ")");
  }
  // weight is the size of the polynomial being reduced, so the counter tracks
  // term operations rather than loop iterations
  void count_reduction(long weight = 1) {
    reductions_used += weight;
    if (reductions_used > reduction_cap)
      throw BudgetExceeded("reduction budget exceeded");
  }
  void check_degree(int d) {
    if (d > max_degree_seen) max_degree_seen = d;
    if (d > degree_cap)
      throw BudgetExceeded("degree budget exceeded (" + std::to_string(degree_cap) + ")");
  }

  // Sub-budget with the same caps and zeroed counters, so one blown stage
  // does not starve the rest of the analysis.
  Budget fresh() const {
    Budget b = *this;
    b.pairs_used = 0;
    b.reductions_used = 0;
    b.max_degree_seen = 0;
    return b;
  }
  // Fold a sub-budget's usage into the cumulative counters, without throwing.
  void absorb(const Budget& b) {
    pairs_used += b.pairs_used;
    reductions_used += b.reductions_used;
    if (b.max_degree_seen > max_degree_seen) max_degree_seen = b.max_degree_seen;
  }
};

}  // namespace tamecheck

#endif

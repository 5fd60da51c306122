#ifndef TESTS_HELPERS_HPP
#define TESTS_HELPERS_HPP

#include <random>
#include <vector>

#include "tamecheck/ideal.hpp"
#include "tamecheck/parser.hpp"

namespace testutil {

using namespace tamecheck;

inline VarContext ctx_xy() {
  VarContext c;
  c.spatial = {"x", "y"};
  return c;
}

inline VarContext ctx_xyz() {
  VarContext c;
  c.spatial = {"x", "y", "z"};
  return c;
}

inline Polynomial P(const VarContext& c, const std::string& s) {
  return parse_polynomial(s, c);
}

// all monomials in n variables of total degree <= d, deterministic order
inline std::vector<Monomial> monomials_up_to(int n, int d) {
  std::vector<Monomial> out;
  Monomial cur(n, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[i] = e;
      self(self, i + 1, left - e);
    }
    cur[i] = 0;
  };
  rec(rec, 0, d);
  return out;
}

// Solves sum_i h_i * g_i = f with deg h_i <= bound - deg g_i by exact
// Gaussian elimination. A solution is a genuine membership witness; failure
// only rules out cofactors within the degree bound.
inline bool linear_membership(const Polynomial& f, const std::vector<Polynomial>& gens,
                              int bound) {
  int n = static_cast<int>(f.ring()->size());
  std::vector<std::pair<int, Monomial>> unknowns;  // (gen index, cofactor monomial)
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero()) continue;
    int room = bound - gens[i].degree();
    if (room < 0) continue;
    for (auto& m : monomials_up_to(n, room)) unknowns.emplace_back(static_cast<int>(i), m);
  }
  std::map<Monomial, int> row_of;
  auto row = [&](const Monomial& m) {
    auto it = row_of.find(m);
    if (it == row_of.end()) it = row_of.emplace(m, static_cast<int>(row_of.size())).first;
    return it->second;
  };
  std::vector<std::map<int, Rational>> cols(unknowns.size());
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    const auto& g = gens[unknowns[u].first];
    for (const auto& [gm, gc] : g.terms()) {
      Monomial prod = monomial_mul(unknowns[u].second, gm);
      cols[u][row(prod)] += gc;
    }
  }
  for (const auto& [fm, fc] : f.terms()) row(fm);
  int rows = static_cast<int>(row_of.size());
  int ncols = static_cast<int>(unknowns.size());
  std::vector<std::vector<Rational>> A(rows, std::vector<Rational>(ncols + 1, 0));
  for (int u = 0; u < ncols; ++u)
    for (const auto& [r, c] : cols[u]) A[r][u] = c;
  for (const auto& [fm, fc] : f.terms()) A[row_of.at(fm)][ncols] = fc;

  int rank = 0;
  for (int col = 0; col < ncols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (A[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(A[rank], A[piv]);
    Rational inv = 1 / A[rank][col];
    for (int c = col; c <= ncols; ++c) A[rank][c] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || A[r][col] == 0) continue;
      Rational fac = A[r][col];
      for (int c = col; c <= ncols; ++c) A[r][c] -= fac * A[rank][c];
    }
    ++rank;
  }
  for (int r = rank; r < rows; ++r)
    if (A[r][ncols] != 0) return false;
  for (int r = 0; r < rank; ++r) {
    bool all_zero = true;
    for (int c = 0; c < ncols; ++c)
      if (A[r][c] != 0) {
        all_zero = false;
        break;
      }
    if (all_zero && A[r][ncols] != 0) return false;
  }
  return true;
}

inline Polynomial random_poly(const RingPtr& ring, std::mt19937& rng, int max_deg,
                              int max_terms) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> deg(0, max_deg);
  int n = static_cast<int>(ring->size());
  Polynomial p = Polynomial::zero(ring);
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    Monomial m(n, 0);
    int budget = deg(rng);
    for (int i = 0; i < n && budget > 0; ++i) {
      std::uniform_int_distribution<int> e(0, budget);
      m[i] = e(rng);
      budget -= m[i];
    }
    int c = coef(rng);
    if (c == 0) c = 1;
    p.add_term(m, Rational(c));
  }
  return p;
}

}  // namespace testutil

#endif

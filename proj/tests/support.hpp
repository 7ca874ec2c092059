#pragma once

// Shared fixtures and reference computations for the test binaries. Nothing
// here calls the inversion algorithms; the oracles are built from the raw
// matrices only.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "dgcm/braid.hpp"
#include "dgcm/cartan.hpp"
#include "dgcm/gamma_ring.hpp"

namespace testing {

using dgcm::Gcm;
using dgcm::Int;
using dgcm::IntMatrix;
using dgcm::Monomial;
using dgcm::Poly;

struct Named {
  std::string name;
  Gcm gcm;
};

inline IntMatrix f4_matrix() {
  return {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
}

inline std::vector<Named> battery() {
  return {
      {"A1", Gcm::create({{2}})},
      {"A2", Gcm::create({{2, -1}, {-1, 2}})},
      {"A3", Gcm::create({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}})},
      {"B2", Gcm::create({{2, -1}, {-2, 2}})},
      {"G2", Gcm::create({{2, -1}, {-3, 2}})},
      {"F4", Gcm::create(f4_matrix(), std::vector<int>{2, 2, 1, 1})},
      {"A1^(1)", Gcm::create({{2, -2}, {-2, 2}})},
      {"(2,-1;-4,2)", Gcm::create({{2, -1}, {-4, 2}})},
      {"(2,-6;-9,2)", Gcm::create({{2, -6}, {-9, 2}})},
  };
}

inline Poly q(int e) { return Poly(Monomial::q(e)); }
inline Poly qt(int a, int b) { return Poly(Monomial(a, b)); }

// Sum of the terms of `p` with t exponent <= n.
inline Poly cut(const Poly& p, int n) { return p.truncated(n); }

// Geometric series sum_{k >= 0} (c x)^k through t^n, for x with positive t power.
inline Poly geometric(const Monomial& x, int c, int n) {
  Poly out;
  Poly term(1);
  while (!term.is_zero() && term.begin()->first.t_exp() <= n) {
    out += term;
    term = term * x * Poly(c);
  }
  return out;
}

inline Poly bar(const Poly& p) {
  std::vector<Poly::Term> terms;
  for (const auto& [m, c] : p) terms.emplace_back(Monomial(-m.q_exp(), -m.t_exp()), c);
  return Poly::from_terms(std::move(terms));
}

// Root system by closing the simple roots under all reflections, positive and
// negative alike, then keeping the positive ones.
inline std::vector<std::vector<int>> roots_by_orbit(const IntMatrix& c) {
  const int n = static_cast<int>(c.size());
  std::set<std::vector<int>> all;
  std::vector<std::vector<int>> todo;
  for (int i = 0; i < n; ++i) {
    std::vector<int> v(n, 0);
    v[i] = 1;
    all.insert(v);
    todo.push_back(v);
  }
  while (!todo.empty()) {
    auto v = todo.back();
    todo.pop_back();
    for (int i = 0; i < n; ++i) {
      int s = 0;
      for (int j = 0; j < n; ++j) s += c[i][j] * v[j];
      auto w = v;
      w[i] -= s;
      if (all.insert(w).second) todo.push_back(w);
    }
  }
  std::vector<std::vector<int>> pos;
  for (const auto& v : all) {
    bool p = true;
    for (int x : v) p = p && x >= 0;
    if (p) pos.push_back(v);
  }
  return pos;
}

// h = 2 |Phi+| / n.
inline int coxeter_number_by_count(const IntMatrix& c) {
  return static_cast<int>(2 * roots_by_orbit(c).size() / c.size());
}

// h^vee = 1 + sum of comarks, where theta^vee = sum_i (a_i d_i / d_max) alpha_i^vee.
inline int dual_coxeter_by_comarks(const IntMatrix& c, const std::vector<int>& d) {
  auto roots = roots_by_orbit(c);
  std::vector<int> theta;
  int best = -1;
  for (const auto& v : roots) {
    int ht = 0;
    for (int x : v) ht += x;
    if (ht > best) {
      best = ht;
      theta = v;
    }
  }
  int dmax = 0;
  for (int x : d) dmax = std::max(dmax, x);
  int sum = 1;
  for (std::size_t i = 0; i < d.size(); ++i) sum += theta[i] * d[i] / dmax;
  return sum;
}

// T_i as a matrix in the alpha basis, built straight from C(q,t,mu).
inline dgcm::PolyMatrix operator_matrix(const Gcm& g, const dgcm::PolyMatrix& c, int i) {
  const int n = g.size();
  auto m = dgcm::PolyMatrix::identity(n);
  for (int j = 0; j < n; ++j) m(i, j) -= c(i, j) * Monomial(-g.d(i), 1);
  return m;
}

inline bool all_coeffs_nonnegative(const Poly& p) {
  for (const auto& [m, c] : p) {
    if (c < 0) return false;
  }
  return true;
}

}  // namespace testing

#pragma once

// Closed forms of the Euler-Poincare pairings <E_i, S_j> and <S_i, S_j>,
// Ext dimensions read off the t-specialized inverse, and the t = 1
// evaluation of inverse entries via the u = q^{-1} t regrading.

#include <string>
#include <vector>

#include "dgcm/braid.hpp"
#include "dgcm/cartan.hpp"
#include "dgcm/gamma_ring.hpp"

namespace dgcm {

enum class ExpansionDirection { t, q };
std::string to_string(ExpansionDirection d);

// A factor (1 - gamma) of a denominator, expanded as sum_k gamma^k.
struct DenominatorFactor {
  Monomial gamma;
  ExpansionDirection direction = ExpansionDirection::t;

  bool operator==(const DenominatorFactor&) const = default;
};

// numerator / prod (1 - gamma).
struct ClosedForm {
  Poly numerator;
  std::vector<DenominatorFactor> denominators;

  // Picks the direction from gamma: positive t power, else positive q power.
  void add_denominator(const Monomial& gamma);

  bool operator==(const ClosedForm&) const = default;
};

// Geometric expansion. t-direction factors are expanded exactly through
// t^t_trunc; each q-direction factor contributes its first q_terms terms.
TruncatedSeries expand(const ClosedForm& form, int t_trunc, int q_terms = 1);

ClosedForm ep_E_S(const Gcm& g, int i, int j);
ClosedForm ep_S_S(const Gcm& g, int i, int j, int ell);

// [d_i C~_ij(1, t)] at t^{(xi(i) + 2k) - (xi(j) + 2l) - 1}.
Int ext_dim(const Gcm& g, const HeightFunction& xi, int i, int k, int j, int l, int trunc);

// C~_ij(q, 1, mu) as a power series in q^{-1}; exact for q^{-s}, s <= depth.
struct QSeries {
  Poly poly;
  int depth = 0;
};

// Requires the condition f_ij = 1 or f_ji = 1 on every edge; otherwise
// PreconditionError("t-evaluation undefined").
QSeries evaluate_t_one(const Gcm& g, const TruncatedSeries& entry);

}  // namespace dgcm

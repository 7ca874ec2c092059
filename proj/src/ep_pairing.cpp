#include "dgcm/ep_pairing.hpp"

#include "dgcm/errors.hpp"
#include "dgcm/weyl.hpp"

namespace dgcm {

std::string to_string(ExpansionDirection d) { return d == ExpansionDirection::t ? "t" : "q"; }

void ClosedForm::add_denominator(const Monomial& gamma) {
  if (gamma.t_exp() > 0) {
    denominators.push_back({gamma, ExpansionDirection::t});
  } else if (gamma.t_exp() == 0 && gamma.q_exp() > 0) {
    denominators.push_back({gamma, ExpansionDirection::q});
  } else {
    throw PreconditionError("denominator factor 1 - " + gamma.str() +
                            " has no admissible expansion direction");
  }
}

TruncatedSeries expand(const ClosedForm& form, int t_trunc, int q_terms) {
  Poly acc = form.numerator.truncated(t_trunc);
  for (const auto& factor : form.denominators) {
    auto val = t_valuation(acc);
    if (!val) break;
    Poly geometric;
    if (factor.direction == ExpansionDirection::t) {
      const int step = factor.gamma.t_exp();
      for (int k = 0; *val + k * step <= t_trunc; ++k) geometric += Poly(factor.gamma.pow(k));
    } else {
      for (int k = 0; k < q_terms; ++k) geometric += Poly(factor.gamma.pow(k));
    }
    acc = poly_mul(acc, geometric, t_trunc);
  }
  return {acc, t_trunc};
}

ClosedForm ep_E_S(const Gcm& g, int i, int j) {
  if (i < 0 || j < 0 || i >= g.size() || j >= g.size()) {
    throw PreconditionError("vertex index out of range");
  }
  const PolyMatrix c = deformed_cartan(g).entries;
  const Monomial lead(-g.d(i), 1);
  ClosedForm form;
  if (!g.is_finite()) {
    form.numerator = c(i, j) * lead;
    return form;
  }
  const LongestMonomial w0 = extract_longest_monomial(g);
  const int istar = w0.nu_perm[i];
  const Monomial gamma(-w0.rh_dual, w0.h);
  form.numerator = (c(i, j) - c(istar, j) * (gamma * path_mu(g, i, istar))) * lead;
  form.add_denominator(gamma.pow(2));
  return form;
}

ClosedForm ep_S_S(const Gcm& g, int i, int j, int ell) {
  if (ell < 1) throw PreconditionError("ell must be at least 1");
  ClosedForm form = ep_E_S(g, i, j);
  form.numerator = form.numerator * (Poly(1) - Poly(Monomial::q(2 * g.d(i))));
  form.add_denominator(Monomial::q(2 * g.r() * ell));
  return form;
}

Int ext_dim(const Gcm& g, const HeightFunction& xi, int i, int k, int j, int l, int trunc) {
  check_height_function(g, xi);
  if (i < 0 || j < 0 || i >= g.size() || j >= g.size()) {
    throw PreconditionError("vertex index out of range");
  }
  if (k < 0 || l < 0) throw PreconditionError("translate indices must be nonnegative");
  const int degree = (xi[i] + 2 * k) - (xi[j] + 2 * l) - 1;
  if (g.is_finite()) {
    const int h = coxeter_data(g).h;
    if (degree < 1 || degree > h - 1) return 0;
  }
  if (degree <= 0) return 0;
  if (degree > trunc) throw PreconditionError("increase truncation");
  const InverseResult inv = invert_bipartite(g, xi, trunc);
  const Poly entry = specialize(inv.entries(i, j).poly(), Specialization::q_and_mu_one());
  const Int value = entry.coeff(Monomial::t(degree)) * g.d(i);
  if (value < 0) throw InternalError("negative Ext dimension");
  return value;
}

QSeries evaluate_t_one(const Gcm& g, const TruncatedSeries& entry) {
  if (!g.condf()) throw PreconditionError("t-evaluation undefined");
  // Under the condition every term q^a t^b has a + b <= 0, so the entry is a
  // series in u = q^{-1} t over Z[mu][q^{-1}] and q^{-s} only receives terms
  // with b <= s.
  std::vector<Poly::Term> terms;
  for (const auto& [m, c] : entry.poly()) {
    if (m.q_exp() + m.t_exp() > 0) throw InternalError("series is not regradable in q^{-1} t");
    if (-m.q_exp() <= entry.trunc()) terms.emplace_back(m.with_t(0), c);
  }
  return {Poly::from_terms(std::move(terms)), entry.trunc()};
}

}  // namespace dgcm

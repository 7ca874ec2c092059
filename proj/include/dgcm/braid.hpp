#pragma once

// Deformed braid group operators T_i on Q_Gamma and the inversion algorithms
// for C(q, t, mu).
//
// Vectors are coordinates in the alpha basis. The pairing with the dual
// basis element varpi_i^vee is "coefficient of alpha_i", so no rational
// functions are ever formed.

#include <optional>
#include <string>
#include <vector>

#include "dgcm/cartan.hpp"
#include "dgcm/gamma_ring.hpp"
#include "dgcm/matrix.hpp"

namespace dgcm {

using RootVec = std::vector<Poly>;

RootVec alpha(int n, int i);

// Precomputed C(q,t,mu) and C(q,1,mu) for repeated operator application.
class BraidOperators {
 public:
  explicit BraidOperators(const Gcm& g);

  const Gcm& gcm() const { return g_; }
  const PolyMatrix& cartan() const { return c_; }
  const PolyMatrix& cartan_t_one() const { return c_bar_; }

  // T_i alpha_j = alpha_j - q^{-d_i} t C_ij alpha_i.
  RootVec T(int i, const RootVec& v, std::optional<int> trunc = std::nullopt) const;
  // Same with t = 1 inside the operator.
  RootVec T_bar(int i, const RootVec& v) const;

  // Operator matrices in the alpha basis (column j = image of alpha_j).
  PolyMatrix matrix(int i) const;
  PolyMatrix matrix_bar(int i) const;

  // Row i of the T_i matrix: entry j is delta_ij - q^{-d_i} t C_ij.
  const std::vector<Poly>& row(int i) const { return rows_[i]; }
  const std::vector<Poly>& row_bar(int i) const { return rows_bar_[i]; }

 private:
  Gcm g_;
  PolyMatrix c_;
  PolyMatrix c_bar_;
  std::vector<std::vector<Poly>> rows_;
  std::vector<std::vector<Poly>> rows_bar_;
};

RootVec apply_T(const Gcm& g, int i, const RootVec& v);
RootVec apply_T_bar(const Gcm& g, int i, const RootVec& v);

struct BraidCheck {
  bool holds = true;
  bool required = true;  // false when c_ij c_ji >= 4: no relation to test
  std::string relation;
};

BraidCheck check_braid_relations(const Gcm& g, int i, int j);

enum class InverseMethod { series, coxeter, bipartite, word };
std::string to_string(InverseMethod m);

struct InverseResult {
  Matrix<TruncatedSeries> entries;
  InverseMethod method = InverseMethod::series;
  int trunc = 0;
  // Finite-type word input whose admissibility was not verified.
  bool unverified = false;
};

// Expansion of q^{-D} t (id - tX)^{-1} where tX = id - C q^{-D} t.
InverseResult invert_series(const Gcm& g, int trunc);

// beta_i = q^{-d_i} t T_{i_1} ... T_{i_{k-1}} alpha_{i_k} along a compatible
// ordering of omega.
std::vector<RootVec> beta_elements(const Gcm& g, const Orientation& omega);
std::vector<RootVec> beta_elements(const Gcm& g, const std::vector<int>& order);

InverseResult invert_coxeter(const Gcm& g, const Orientation& omega, int trunc);
inline InverseResult invert_coxeter(const Gcm& g, int trunc) {
  return invert_coxeter(g, g.orientation(), trunc);
}

using HeightFunction = std::vector<int>;

// Throws PreconditionError("not a height function") unless |xi(i) - xi(j)| = 1
// for every adjacent pair.
void check_height_function(const Gcm& g, const HeightFunction& xi);
// A height function (2-colouring, xi(0) = 0) if the diagram is bipartite.
std::optional<HeightFunction> find_height_function(const Gcm& g);
// Omega_xi = {(i, j) : i ~ j, xi(j) = xi(i) + 1}.
Orientation height_orientation(const Gcm& g, const HeightFunction& xi);

InverseResult invert_bipartite(const Gcm& g, const HeightFunction& xi, int trunc);

// Finite prefix followed by a block repeated forever.
struct PeriodicWord {
  std::vector<int> prefix;
  std::vector<int> period;

  int at(std::size_t k) const;
};

InverseResult invert_word(const Gcm& g, const PeriodicWord& word, int trunc);

struct LongestMonomial {
  int rh_dual = 0;
  int h = 0;
  std::vector<int> nu_perm;
  std::vector<Monomial> nu_mu;  // nu(alpha_i) = nu_mu[i] alpha_{nu_perm[i]}
};

// Reads T_{w0} = -q^{-a} t^b nu off the exact operator matrix.
LongestMonomial extract_longest_monomial(const Gcm& g);

// Product of mu's along a path i ~ ... ~ j (finite type, g_ij = 1).
Monomial path_mu(const Gcm& g, int i, int j);

// Exact product of operator matrices T_{i_1} ... T_{i_k}.
PolyMatrix word_operator(const BraidOperators& ops, const std::vector<int>& letters);

}  // namespace dgcm

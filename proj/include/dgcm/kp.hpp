#pragma once

// Mass-deformed Cartan matrices of fractional quivers and their comparison
// with C(q, t, mu) q^{-D} t under the monomial substitution
//   q1 -> q^2,  q2 -> t^{-2},  mu_e -> q^{d_ij} t^{-1} mu_ij^(g(e))  (i = target, j = source).

#include <map>
#include <string>
#include <vector>

#include "dgcm/cartan.hpp"
#include "dgcm/gamma_ring.hpp"
#include "dgcm/matrix.hpp"

namespace dgcm {

struct QuiverEdge {
  int source = 0;
  int target = 0;
};

// Laurent polynomial in q1, q2 and one mass parameter per quiver edge.
// Disjoint from Z[Gamma]; exponent layout is [q1, q2, mu_0, ..., mu_{m-1}].
class KpPoly {
 public:
  KpPoly() = default;
  explicit KpPoly(std::size_t num_edges, long long c = 0);

  static KpPoly monomial(std::size_t num_edges, int q1, int q2, int edge = -1, int edge_exp = 0);

  std::size_t num_edges() const { return num_edges_; }
  const std::map<std::vector<int>, Int>& terms() const { return terms_; }

  KpPoly& operator+=(const KpPoly& other);
  KpPoly operator-() const;
  friend KpPoly operator+(KpPoly a, const KpPoly& b) { return a += b; }
  friend KpPoly operator-(KpPoly a, const KpPoly& b) { return a += -b; }
  friend KpPoly operator*(const KpPoly& a, const KpPoly& b);

  // Sets every variable to 1.
  Int evaluate_at_one() const;
  std::string str() const;

  bool operator==(const KpPoly&) const = default;

 private:
  std::size_t num_edges_ = 0;
  std::map<std::vector<int>, Int> terms_;
};

// g_ij parallel edges i -> j for every (i, j) in the orientation.
std::vector<QuiverEdge> default_quiver(const Gcm& g);

// Throws PreconditionError unless the edge multiplicities reproduce c_ij.
void check_fractional_quiver(const Gcm& g, const std::vector<QuiverEdge>& edges);

Matrix<KpPoly> kp_matrix(const Gcm& g, const std::vector<QuiverEdge>& edges);

// Applies the monomial substitution; the g(e) labels are assigned 1, 2, ...
// in input order among the edges joining the same pair.
PolyMatrix kp_transform(const Gcm& g, const std::vector<QuiverEdge>& edges,
                        const Matrix<KpPoly>& kp);

struct KpReport {
  bool condf = false;
  PolyMatrix transformed;
  PolyMatrix reference;  // C(q, t, mu) q^{-D} t
  bool equal = false;
};

KpReport kp_compare(const Gcm& g, const std::vector<QuiverEdge>& edges);
inline KpReport kp_compare(const Gcm& g) { return kp_compare(g, default_quiver(g)); }

}  // namespace dgcm

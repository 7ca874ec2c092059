#pragma once

// Generalized Cartan matrices, their symmetrizers and orientations, and the
// (q, t, mu)-deformed matrix built from them.

#include <optional>
#include <utility>
#include <vector>

#include "dgcm/gamma_ring.hpp"
#include "dgcm/matrix.hpp"

namespace dgcm {

using IntMatrix = std::vector<std::vector<int>>;
// Ordered pairs (i, j), 0-based, meaning the edge is directed i -> j.
using Orientation = std::vector<std::pair<int, int>>;

enum class TypeClass { finite, infinite };

class Gcm {
 public:
  // Validates the zero pattern, symmetrizability and irreducibility. Without `d` the
  // minimal symmetrizer is computed; without `omega` the orientation is {(i, j) : i < j, i ~ j}.
  static Gcm create(IntMatrix c, std::optional<std::vector<int>> d = std::nullopt,
                    std::optional<Orientation> omega = std::nullopt);

  int size() const { return n_; }
  int c(int i, int j) const { return c_[i][j]; }
  const IntMatrix& matrix() const { return c_; }
  int d(int i) const { return d_[i]; }
  const std::vector<int>& symmetrizer() const { return d_; }
  int r() const { return r_; }

  bool adjacent(int i, int j) const { return i != j && c_[i][j] < 0; }
  const std::vector<int>& neighbors(int i) const { return neighbors_[i]; }
  // Derived constants; only meaningful for adjacent i, j.
  int g(int i, int j) const { return g_[i][j]; }
  int f(int i, int j) const { return f_[i][j]; }
  int d_pair(int i, int j) const;

  const Orientation& orientation() const { return omega_; }
  bool oriented(int i, int j) const { return oriented_[i][j]; }
  TypeClass type_class() const { return type_; }
  bool is_finite() const { return type_ == TypeClass::finite; }
  bool is_symmetric() const;

  // mu_ij^(g) in orientation-normal form (i ~ j, 1 <= g <= g_ij).
  Monomial mu(int i, int j, int g) const;

  // For every adjacent pair, f_ij = 1 or f_ji = 1.
  bool condf() const;

 private:
  int n_ = 0;
  IntMatrix c_;
  std::vector<int> d_;
  int r_ = 1;
  std::vector<std::vector<int>> neighbors_;
  std::vector<std::vector<int>> g_;
  std::vector<std::vector<int>> f_;
  Orientation omega_;
  std::vector<std::vector<bool>> oriented_;
  TypeClass type_ = TypeClass::finite;
};

// Minimal symmetrizer (gcd 1); throws PreconditionError if none exists.
std::vector<int> minimal_symmetrizer(const IntMatrix& c);

// Checks that `omega` is acyclic and covers each adjacent pair exactly once.
void validate_orientation(const Gcm& g, const Orientation& omega);

// Total ordering compatible with `omega`; ties go to the smaller index.
std::vector<int> topological_order(const Gcm& g, const Orientation& omega);
inline std::vector<int> topological_order(const Gcm& g) {
  return topological_order(g, g.orientation());
}

// Every acyclic orientation of g (exponential; for small test matrices).
std::vector<Orientation> all_acyclic_orientations(const Gcm& g);

struct DeformedMatrix {
  PolyMatrix entries;
  Gcm gcm;
};

// C(q, t, mu).
DeformedMatrix deformed_cartan(const Gcm& g);
// C(q, 1, mu); entries live in Z[Gamma_0].
PolyMatrix deformed_cartan_t_one(const Gcm& g);

}  // namespace dgcm

#pragma once

// Root-lattice combinatorics of the (undeformed) Weyl group.

#include <vector>

#include "dgcm/cartan.hpp"
#include "dgcm/gamma_ring.hpp"

namespace dgcm {

// Coordinates in the simple-root basis. Coefficients grow exponentially for
// indefinite types, hence arbitrary precision.
using IntRoot = std::vector<Int>;
using IntLinearMap = std::vector<std::vector<Int>>;  // column j = image of alpha_j

IntRoot simple_root(int n, int i);
bool is_nonnegative(const IntRoot& v);
bool is_nonpositive(const IntRoot& v);

// s_i v = v - (sum_j c_ij v_j) alpha_i.
IntRoot reflect(const Gcm& g, int i, const IntRoot& v);

// Symmetrized form (u, v) = sum_ij u_i d_i c_ij v_j.
Int root_pairing(const Gcm& g, const IntRoot& u, const IntRoot& v);

class WeylWord {
 public:
  WeylWord() = default;
  WeylWord(const Gcm& g, std::vector<int> letters);

  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool reduced() const { return reduced_; }

 private:
  std::vector<int> letters_;
  bool reduced_ = true;
};

// True iff s_{i_1} ... s_{i_{k-1}} alpha_{i_k} >= 0 for every k.
bool is_reduced_prefixwise(const Gcm& g, const std::vector<int>& letters);

// Incremental form of the same test, for words consumed one letter at a time.
class ReducedWordChecker {
 public:
  explicit ReducedWordChecker(const Gcm& g);
  // Returns false (and leaves the state untouched) if appending `i` breaks
  // reducedness.
  bool push(int i);
  std::size_t length() const { return length_; }

 private:
  const Gcm* g_;
  IntLinearMap w_;  // current element acting on the lattice
  std::size_t length_ = 0;
};

// Positive roots of a finite-type GCM; PreconditionError otherwise.
std::vector<IntRoot> positive_roots(const Gcm& g);

struct LongestElement {
  WeylWord word;
  std::vector<int> star;  // w0 alpha_i = -alpha_{star[i]}
};

LongestElement longest_and_star(const Gcm& g);

struct CoxeterData {
  int h = 0;
  int h_dual = 0;
};

CoxeterData coxeter_data(const Gcm& g, const Orientation& omega);
inline CoxeterData coxeter_data(const Gcm& g) { return coxeter_data(g, g.orientation()); }

}  // namespace dgcm

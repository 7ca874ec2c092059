#pragma once

// Exact arithmetic in the group ring Z[Gamma], Gamma = q^Z x t^Z x mu^Z.
//
// Mass parameters mu_ij^(g) are stored in orientation-normal form: only keys
// (i, j, g) with (i, j) in the fixed orientation appear, and mu_ji^(g) is the
// exponent -1 on key (i, j, g). The ring itself does not know the
// orientation; Gcm::mu() produces normalized generators.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace dgcm {

using Int = boost::multiprecision::cpp_int;

// Edge of the orientation, 0-based vertices, 1-based multiplicity index g.
struct EdgeKey {
  int i = 0;
  int j = 0;
  int g = 1;

  auto operator<=>(const EdgeKey&) const = default;
};

class Monomial {
 public:
  struct MuFactor {
    EdgeKey key;
    int exp = 0;

    auto operator<=>(const MuFactor&) const = default;
  };
  using MuList = boost::container::small_vector<MuFactor, 3>;

  Monomial() = default;
  Monomial(int q_exp, int t_exp) : q_(q_exp), t_(t_exp) {}

  static Monomial q(int e = 1) { return {e, 0}; }
  static Monomial t(int e = 1) { return {0, e}; }
  static Monomial mu(EdgeKey key, int e = 1);

  int q_exp() const { return q_; }
  int t_exp() const { return t_; }
  const MuList& mu_factors() const { return mu_; }
  int mu_exp(const EdgeKey& key) const;
  bool is_one() const { return q_ == 0 && t_ == 0 && mu_.empty(); }
  bool is_mu_free() const { return mu_.empty(); }

  Monomial operator*(const Monomial& other) const;
  Monomial inverse() const;
  Monomial pow(int e) const;

  Monomial with_q(int e) const;
  Monomial with_t(int e) const;
  Monomial without_mu() const { return {q_, t_}; }

  // Canonical rendering `q^a t^b u[i,j,g]^e ...`, 1-based vertices.
  std::string str() const;

  std::size_t hash() const;

  bool operator==(const Monomial&) const = default;
  // Global term order: t exponent, then q exponent, then mu lexicographic.
  std::strong_ordering operator<=>(const Monomial& other) const;

 private:
  int q_ = 0;
  int t_ = 0;
  MuList mu_;  // sorted by key, exponents nonzero
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Sparse Laurent polynomial with arbitrary-precision coefficients.
class Poly {
 public:
  using Term = std::pair<Monomial, Int>;

  Poly() = default;
  Poly(long long c);  // NOLINT(google-explicit-constructor)
  Poly(const Int& c);  // NOLINT(google-explicit-constructor)
  Poly(Monomial m, Int c = 1);  // NOLINT(google-explicit-constructor)

  // Sums duplicate monomials and drops zeros.
  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Int coeff(const Monomial& m) const;
  std::optional<int> max_t_exp() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  Poly operator*(const Monomial& m) const;

  // Drops every term with t exponent above `trunc`.
  Poly truncated(int trunc) const;

  std::string str() const;

  bool operator==(const Poly&) const = default;

 private:
  std::vector<Term> terms_;  // strictly increasing monomials, nonzero coeffs
};

Poly poly_mul(const Poly& a, const Poly& b, std::optional<int> trunc = std::nullopt);

// phi: mu_ij -> mu_ji, i.e. every mu exponent is negated.
Monomial apply_phi(const Monomial& m);
Poly apply_phi(const Poly& a);

struct Specialization {
  bool mu = false;
  bool q = false;
  bool t = false;

  static Specialization mu_one() { return {true, false, false}; }
  static Specialization q_one() { return {false, true, false}; }
  static Specialization t_one() { return {false, false, true}; }
  static Specialization q_and_mu_one() { return {true, true, false}; }
};

Poly specialize(const Poly& a, Specialization spec);

// [k]_{q^d} = q^{d(k-1)} + q^{d(k-3)} + ... + q^{-d(k-1)}.
Poly q_integer(int k, int d = 1);

// Minimal t exponent; nullopt stands for +infinity (zero polynomial).
std::optional<int> t_valuation(const Poly& a);

// A finite window of a formal Laurent series in t: exact up to t^trunc.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  TruncatedSeries(Poly poly, int trunc);

  const Poly& poly() const { return poly_; }
  int trunc() const { return trunc_; }

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  // Multiplication by an exact polynomial keeps the series' truncation only
  // when the polynomial has no negative t powers; otherwise it is lowered.
  friend TruncatedSeries operator*(const Poly& a, const TruncatedSeries& b);

  TruncatedSeries retruncated(int trunc) const;

  bool operator==(const TruncatedSeries&) const = default;

 private:
  Poly poly_;
  int trunc_ = 0;
};

TruncatedSeries apply_phi(const TruncatedSeries& a);
// Throws PreconditionError("t-evaluation undefined") when spec.t is set:
// evaluating a t-series at t = 1 needs the regrading path instead.
TruncatedSeries specialize(const TruncatedSeries& a, Specialization spec);
std::optional<int> t_valuation(const TruncatedSeries& a);

}  // namespace dgcm

template <>
struct std::hash<dgcm::Monomial> {
  std::size_t operator()(const dgcm::Monomial& m) const { return m.hash(); }
};

#include "dgcm/gamma_ring.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "dgcm/errors.hpp"

namespace dgcm {

namespace {

void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

// Merge two sorted mu factor lists, adding exponents.
Monomial::MuList merge_mu(const Monomial::MuList& a, const Monomial::MuList& b) {
  Monomial::MuList out;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->key < ib->key)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->key < ia->key) {
      out.push_back(*ib++);
    } else {
      int e = ia->exp + ib->exp;
      if (e != 0) out.push_back({ia->key, e});
      ++ia;
      ++ib;
    }
  }
  return out;
}

void append_factor(std::ostringstream& os, bool& first, const std::string& name, int e) {
  if (e == 0) return;
  if (!first) os << ' ';
  first = false;
  os << name;
  if (e != 1) os << '^' << e;
}

}  // namespace

// --- Monomial ---------------------------------------------------------------

Monomial Monomial::mu(EdgeKey key, int e) {
  Monomial m;
  if (e != 0) m.mu_.push_back({key, e});
  return m;
}

int Monomial::mu_exp(const EdgeKey& key) const {
  auto it = std::lower_bound(mu_.begin(), mu_.end(), key,
                             [](const MuFactor& f, const EdgeKey& k) { return f.key < k; });
  return (it != mu_.end() && it->key == key) ? it->exp : 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m(q_ + other.q_, t_ + other.t_);
  if (other.mu_.empty()) {
    m.mu_ = mu_;
  } else if (mu_.empty()) {
    m.mu_ = other.mu_;
  } else {
    m.mu_ = merge_mu(mu_, other.mu_);
  }
  return m;
}

Monomial Monomial::inverse() const { return pow(-1); }

Monomial Monomial::pow(int e) const {
  Monomial m(q_ * e, t_ * e);
  if (e != 0) {
    m.mu_ = mu_;
    for (auto& f : m.mu_) f.exp *= e;
  }
  return m;
}

Monomial Monomial::with_q(int e) const {
  Monomial m = *this;
  m.q_ = e;
  return m;
}

Monomial Monomial::with_t(int e) const {
  Monomial m = *this;
  m.t_ = e;
  return m;
}

std::string Monomial::str() const {
  if (is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  append_factor(os, first, "q", q_);
  append_factor(os, first, "t", t_);
  for (const auto& f : mu_) {
    std::ostringstream name;
    name << "u[" << f.key.i + 1 << ',' << f.key.j + 1 << ',' << f.key.g << ']';
    append_factor(os, first, name.str(), f.exp);
  }
  return os.str();
}

std::size_t Monomial::hash() const {
  std::size_t seed = std::hash<int>{}(q_);
  hash_combine(seed, std::hash<int>{}(t_));
  for (const auto& f : mu_) {
    hash_combine(seed, static_cast<std::size_t>(f.key.i) * 1000003u + f.key.j * 1009u + f.key.g);
    hash_combine(seed, std::hash<int>{}(f.exp));
  }
  return seed;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (auto c = t_ <=> other.t_; c != 0) return c;
  if (auto c = q_ <=> other.q_; c != 0) return c;
  return std::lexicographical_compare_three_way(mu_.begin(), mu_.end(), other.mu_.begin(),
                                                other.mu_.end());
}

// --- Poly -------------------------------------------------------------------

Poly::Poly(long long c) : Poly(Int(c)) {}

Poly::Poly(const Int& c) {
  if (c != 0) terms_.emplace_back(Monomial(), c);
}

Poly::Poly(Monomial m, Int c) {
  if (c != 0) terms_.emplace_back(std::move(m), std::move(c));
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  Poly p;
  for (auto& term : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == term.first) {
      p.terms_.back().second += term.second;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (term.second != 0) {
      p.terms_.push_back(std::move(term));
    }
  }
  return p;
}

Int Poly::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& a, const Monomial& b) { return a.first < b; });
  return (it != terms_.end() && it->first == m) ? it->second : Int(0);
}

std::optional<int> Poly::max_t_exp() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.back().first.t_exp();
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& term : p.terms_) term.second = -term.second;
  return p;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) return *this = other;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto ia = terms_.begin();
  auto ib = other.terms_.begin();
  while (ia != terms_.end() || ib != other.terms_.end()) {
    if (ib == other.terms_.end() || (ia != terms_.end() && ia->first < ib->first)) {
      out.push_back(std::move(*ia++));
    } else if (ia == terms_.end() || ib->first < ia->first) {
      out.push_back(*ib++);
    } else {
      Int c = ia->second + ib->second;
      if (c != 0) out.emplace_back(std::move(ia->first), std::move(c));
      ++ia;
      ++ib;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) { return *this += -other; }

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly operator*(const Poly& a, const Poly& b) { return poly_mul(a, b); }

Poly Poly::operator*(const Monomial& m) const {
  Poly p;
  p.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the relative order only for the q, t
  // part; mu may reorder, so sort again in general.
  for (const auto& term : terms_) p.terms_.emplace_back(term.first * m, term.second);
  if (!m.is_mu_free()) {
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const Term& x, const Term& y) { return x.first < y.first; });
  }
  return p;
}

Poly Poly::truncated(int trunc) const {
  Poly p;
  for (const auto& term : terms_) {
    if (term.first.t_exp() > trunc) break;
    p.terms_.push_back(term);
  }
  return p;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << ' ';
      os << m.str();
    }
  }
  return os.str();
}

Poly poly_mul(const Poly& a, const Poly& b, std::optional<int> trunc) {
  if (a.is_zero() || b.is_zero()) return {};
  std::unordered_map<Monomial, Int, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      // b is sorted by t first, so the remaining terms exceed the window too.
      if (trunc && ma.t_exp() + mb.t_exp() > *trunc) break;
      acc[ma * mb] += ca * cb;
    }
  }
  std::vector<Poly::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) terms.emplace_back(m, std::move(c));
  }
  return Poly::from_terms(std::move(terms));
}

Monomial apply_phi(const Monomial& m) {
  Monomial out(m.q_exp(), m.t_exp());
  for (const auto& f : m.mu_factors()) out = out * Monomial::mu(f.key, -f.exp);
  return out;
}

Poly apply_phi(const Poly& a) {
  std::vector<Poly::Term> terms;
  terms.reserve(a.size());
  for (const auto& [m, c] : a) terms.emplace_back(apply_phi(m), c);
  return Poly::from_terms(std::move(terms));
}

Poly specialize(const Poly& a, Specialization spec) {
  std::vector<Poly::Term> terms;
  terms.reserve(a.size());
  for (const auto& [m, c] : a) {
    Monomial out = spec.mu ? m.without_mu() : m;
    if (spec.q) out = out.with_q(0);
    if (spec.t) out = out.with_t(0);
    terms.emplace_back(std::move(out), c);
  }
  return Poly::from_terms(std::move(terms));
}

Poly q_integer(int k, int d) {
  if (k <= 0 || d <= 0) throw PreconditionError("q_integer requires k >= 1 and d >= 1");
  std::vector<Poly::Term> terms;
  for (int e = k - 1; e >= -(k - 1); e -= 2) terms.emplace_back(Monomial::q(d * e), 1);
  return Poly::from_terms(std::move(terms));
}

std::optional<int> t_valuation(const Poly& a) {
  if (a.is_zero()) return std::nullopt;
  return a.terms().front().first.t_exp();
}

// --- TruncatedSeries --------------------------------------------------------

TruncatedSeries::TruncatedSeries(Poly poly, int trunc)
    : poly_(poly.truncated(trunc)), trunc_(trunc) {}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  trunc_ = std::min(trunc_, other.trunc_);
  poly_ = (poly_ + other.poly_).truncated(trunc_);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  trunc_ = std::min(trunc_, other.trunc_);
  poly_ = (poly_ - other.poly_).truncated(trunc_);
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  // Unknown tails start at t^{trunc+1}; the product is exact below the
  // smaller of trunc_a + val_b and trunc_b + val_a.
  // An empty window only bounds the valuation by trunc + 1.
  const int va = t_valuation(a.poly_).value_or(a.trunc_ + 1);
  const int vb = t_valuation(b.poly_).value_or(b.trunc_ + 1);
  const int trunc = std::min(a.trunc_ + std::min(vb, 0), b.trunc_ + std::min(va, 0));
  return {poly_mul(a.poly_, b.poly_, trunc), trunc};
}

TruncatedSeries operator*(const Poly& a, const TruncatedSeries& b) {
  auto va = t_valuation(a);
  int trunc = b.trunc_ + (va ? std::min(*va, 0) : 0);
  return {poly_mul(a, b.poly_, trunc), trunc};
}

TruncatedSeries TruncatedSeries::retruncated(int trunc) const {
  if (trunc > trunc_) throw PreconditionError("cannot raise the truncation of a series");
  return {poly_, trunc};
}

TruncatedSeries apply_phi(const TruncatedSeries& a) { return {apply_phi(a.poly()), a.trunc()}; }

TruncatedSeries specialize(const TruncatedSeries& a, Specialization spec) {
  if (spec.t) throw PreconditionError("t-evaluation undefined");
  return {specialize(a.poly(), spec), a.trunc()};
}

std::optional<int> t_valuation(const TruncatedSeries& a) { return t_valuation(a.poly()); }

}  // namespace dgcm

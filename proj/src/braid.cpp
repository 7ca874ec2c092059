#include "dgcm/braid.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include "dgcm/errors.hpp"
#include "dgcm/weyl.hpp"

namespace dgcm {

namespace {

RootVec truncated(RootVec v, int trunc) {
  for (auto& x : v) x = x.truncated(trunc);
  return v;
}

bool is_zero(const RootVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Poly& p) { return p.is_zero(); });
}

std::optional<int> valuation(const RootVec& v) {
  std::optional<int> out;
  for (const auto& x : v) {
    auto val = t_valuation(x);
    if (val && (!out || *val < *out)) out = val;
  }
  return out;
}

RootVec scaled(const Poly& a, const RootVec& v, std::optional<int> trunc) {
  RootVec out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_zero()) out[k] = poly_mul(a, v[k], trunc);
  }
  return out;
}

void add_to(RootVec& acc, const RootVec& v) {
  for (std::size_t k = 0; k < v.size(); ++k) acc[k] += v[k];
}

PolyMatrix power(const PolyMatrix& m, int k) {
  PolyMatrix out = PolyMatrix::identity(m.rows());
  for (int e = 0; e < k; ++e) out = out * m;
  return out;
}

void check_index(const Gcm& g, int i) {
  if (i < 0 || i >= g.size()) throw PreconditionError("vertex index out of range");
}

Matrix<TruncatedSeries> to_series(const PolyMatrix& m, int trunc) {
  Matrix<TruncatedSeries> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = TruncatedSeries(m(i, j), trunc);
  }
  return out;
}

}  // namespace

RootVec alpha(int n, int i) {
  RootVec v(n);
  v[i] = Poly(1);
  return v;
}

BraidOperators::BraidOperators(const Gcm& g)
    : g_(g), c_(deformed_cartan(g).entries), c_bar_(deformed_cartan_t_one(g)) {
  const int n = g.size();
  rows_.assign(n, std::vector<Poly>(n));
  rows_bar_.assign(n, std::vector<Poly>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Poly delta = i == j ? Poly(1) : Poly();
      rows_[i][j] = delta - c_(i, j) * Monomial(-g.d(i), 1);
      rows_bar_[i][j] = delta - c_bar_(i, j) * Monomial::q(-g.d(i));
    }
  }
}

RootVec BraidOperators::T(int i, const RootVec& v, std::optional<int> trunc) const {
  RootVec out = v;
  Poly coord;
  for (int j = 0; j < g_.size(); ++j) {
    if (!v[j].is_zero() && !rows_[i][j].is_zero()) coord += poly_mul(rows_[i][j], v[j], trunc);
  }
  out[i] = std::move(coord);
  return out;
}

RootVec BraidOperators::T_bar(int i, const RootVec& v) const {
  RootVec out = v;
  Poly coord;
  for (int j = 0; j < g_.size(); ++j) {
    if (!v[j].is_zero() && !rows_bar_[i][j].is_zero()) coord += rows_bar_[i][j] * v[j];
  }
  out[i] = std::move(coord);
  return out;
}

PolyMatrix BraidOperators::matrix(int i) const {
  PolyMatrix m = PolyMatrix::identity(g_.size());
  for (int j = 0; j < g_.size(); ++j) m(i, j) = rows_[i][j];
  return m;
}

PolyMatrix BraidOperators::matrix_bar(int i) const {
  PolyMatrix m = PolyMatrix::identity(g_.size());
  for (int j = 0; j < g_.size(); ++j) m(i, j) = rows_bar_[i][j];
  return m;
}

RootVec apply_T(const Gcm& g, int i, const RootVec& v) {
  check_index(g, i);
  return BraidOperators(g).T(i, v);
}

RootVec apply_T_bar(const Gcm& g, int i, const RootVec& v) {
  check_index(g, i);
  return BraidOperators(g).T_bar(i, v);
}

BraidCheck check_braid_relations(const Gcm& g, int i, int j) {
  check_index(g, i);
  check_index(g, j);
  if (i == j) throw PreconditionError("braid relation needs two distinct vertices");
  BraidOperators ops(g);
  const PolyMatrix ti = ops.matrix(i);
  const PolyMatrix tj = ops.matrix(j);
  const int m = g.c(i, j) * g.c(j, i);
  BraidCheck out;
  std::ostringstream rel;
  const std::string a = "T" + std::to_string(i + 1);
  const std::string b = "T" + std::to_string(j + 1);
  switch (m) {
    case 0:
      rel << a << b << " = " << b << a;
      out.holds = ti * tj == tj * ti;
      break;
    case 1:
      rel << a << b << a << " = " << b << a << b;
      out.holds = ti * tj * ti == tj * ti * tj;
      break;
    case 2:
    case 3:
      rel << '(' << a << b << ")^" << m << " = (" << b << a << ")^" << m;
      out.holds = power(ti * tj, m) == power(tj * ti, m);
      break;
    default:
      rel << "no relation required (c_ij c_ji = " << m << ')';
      out.required = false;
      out.holds = true;
      break;
  }
  out.relation = rel.str();
  return out;
}

std::string to_string(InverseMethod m) {
  switch (m) {
    case InverseMethod::series:
      return "series";
    case InverseMethod::coxeter:
      return "coxeter";
    case InverseMethod::bipartite:
      return "bipartite";
    case InverseMethod::word:
      return "word";
  }
  return "?";
}

InverseResult invert_series(const Gcm& g, int trunc) {
  if (trunc < 1) throw PreconditionError("truncation must be at least 1");
  const int n = g.size();
  const PolyMatrix c = deformed_cartan(g).entries;
  // tX = id - C q^{-D} t has t-valuation >= 1 entrywise.
  PolyMatrix tx(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      tx(i, j) = (i == j ? Poly(1) : Poly()) - c(i, j) * Monomial(-g.d(j), 1);
    }
  }
  // sum_k (tX)^k is needed through t^{trunc-1}.
  const int inner = trunc - 1;
  PolyMatrix term = PolyMatrix::identity(n);
  PolyMatrix sum = term;
  for (int k = 1; k <= inner; ++k) {
    term = multiply(tx, term, inner);
    bool zero = true;
    for (int i = 0; i < n && zero; ++i) {
      for (int j = 0; j < n && zero; ++j) zero = term(i, j).is_zero();
    }
    if (zero) break;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) sum(i, j) += term(i, j);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) sum(i, j) = sum(i, j) * Monomial(-g.d(i), 1);
  }
  return {to_series(sum, trunc), InverseMethod::series, trunc, false};
}

std::vector<RootVec> beta_elements(const Gcm& g, const std::vector<int>& order) {
  const int n = g.size();
  BraidOperators ops(g);
  std::vector<RootVec> beta(n);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const int i = order[k];
    RootVec v = alpha(n, i);
    for (std::size_t m = k; m-- > 0;) v = ops.T(order[m], v);
    beta[i] = scaled(Poly(Monomial(-g.d(i), 1)), v, std::nullopt);
  }
  return beta;
}

std::vector<RootVec> beta_elements(const Gcm& g, const Orientation& omega) {
  validate_orientation(g, omega);
  return beta_elements(g, topological_order(g, omega));
}

InverseResult invert_coxeter(const Gcm& g, const Orientation& omega, int trunc) {
  if (trunc < 1) throw PreconditionError("truncation must be at least 1");
  validate_orientation(g, omega);
  const int n = g.size();
  const std::vector<int> order = topological_order(g, omega);
  std::vector<std::vector<bool>> in_omega(n, std::vector<bool>(n, false));
  for (auto [a, b] : omega) in_omega[a][b] = true;
  BraidOperators ops(g);
  const PolyMatrix& c = ops.cartan();

  std::vector<RootVec> current = beta_elements(g, order);
  for (auto& v : current) v = truncated(std::move(v), trunc);
  std::vector<RootVec> sums(n, RootVec(n));

  for (int k = 0;; ++k) {
    bool all_zero = true;
    for (int j = 0; j < n; ++j) {
      add_to(sums[j], current[j]);
      all_zero = all_zero && is_zero(current[j]);
    }
    if (all_zero) break;
    if (k > trunc) throw InternalError("Coxeter iteration failed to terminate");
    // T^{k+1} beta_i = -q^{-2d_i} t^2 T^k beta_i
    //                  - q^{-d_i} t sum_{j~i} C_ji T^{k + [(j,i) in omega]} beta_j
    std::vector<RootVec> next(n);
    for (int i : order) {
      RootVec v = scaled(Poly(Monomial(-2 * g.d(i), 2), -1), current[i], trunc);
      for (int j : g.neighbors(i)) {
        const RootVec& src = in_omega[j][i] ? next[j] : current[j];
        add_to(v, scaled(-(c(j, i) * Monomial(-g.d(i), 1)), src, trunc));
      }
      auto val = valuation(v);
      if (val && *val < k + 2) {
        throw InternalError("valuation growth violated in the Coxeter recursion");
      }
      next[i] = std::move(v);
    }
    current = std::move(next);
  }

  Matrix<TruncatedSeries> entries(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) entries(i, j) = TruncatedSeries(sums[j][i], trunc);
  }
  return {std::move(entries), InverseMethod::coxeter, trunc, false};
}

void check_height_function(const Gcm& g, const HeightFunction& xi) {
  if (static_cast<int>(xi.size()) != g.size()) throw PreconditionError("not a height function");
  for (int i = 0; i < g.size(); ++i) {
    for (int j : g.neighbors(i)) {
      if (std::abs(xi[i] - xi[j]) != 1) throw PreconditionError("not a height function");
    }
  }
}

std::optional<HeightFunction> find_height_function(const Gcm& g) {
  const int n = g.size();
  HeightFunction xi(n, -1);
  xi[0] = 0;
  std::queue<int> todo;
  todo.push(0);
  while (!todo.empty()) {
    int i = todo.front();
    todo.pop();
    for (int j : g.neighbors(i)) {
      if (xi[j] < 0) {
        xi[j] = 1 - xi[i];
        todo.push(j);
      } else if (xi[j] == xi[i]) {
        return std::nullopt;
      }
    }
  }
  return xi;
}

Orientation height_orientation(const Gcm& g, const HeightFunction& xi) {
  check_height_function(g, xi);
  Orientation omega;
  for (int i = 0; i < g.size(); ++i) {
    for (int j : g.neighbors(i)) {
      if (xi[j] == xi[i] + 1) omega.emplace_back(i, j);
    }
  }
  return omega;
}

InverseResult invert_bipartite(const Gcm& g, const HeightFunction& xi, int trunc) {
  if (trunc < 1) throw PreconditionError("truncation must be at least 1");
  const Orientation omega = height_orientation(g, xi);
  const int n = g.size();
  const std::vector<int> order = topological_order(g, omega);
  BraidOperators ops(g);
  const PolyMatrix& cbar = ops.cartan_t_one();

  const int xi_min = *std::min_element(xi.begin(), xi.end());
  const int xi_max = *std::max_element(xi.begin(), xi.end());
  // Phi(j, u) contributes t^{u - xi(i) + 1}; nothing beyond u_max survives.
  const int u_max = trunc + xi_max - 1;
  std::map<std::pair<int, int>, RootVec> phi;
  auto get = [&](int i, int u) -> const RootVec* {
    auto it = phi.find({i, u});
    return it == phi.end() ? nullptr : &it->second;
  };

  for (std::size_t k = 0; k < order.size(); ++k) {
    const int i = order[k];
    RootVec v = alpha(n, i);
    for (std::size_t m = k; m-- > 0;) v = ops.T_bar(order[m], v);
    phi[{i, xi[i]}] = scaled(Poly(Monomial::q(-g.d(i))), v, std::nullopt);
  }
  // q^{-d_i} Phi(i,u-1) + q^{d_i} Phi(i,u+1) + sum_{j~i} C_ji(q,1,mu) Phi(j,u) = 0, u > xi(i).
  for (int u_new = xi_min + 2; u_new <= u_max; ++u_new) {
    for (int i : order) {
      if (u_new < xi[i] + 2 || (u_new - xi[i]) % 2 != 0) continue;
      RootVec v(n);
      if (const RootVec* prev = get(i, u_new - 2)) {
        v = scaled(Poly(Monomial::q(-2 * g.d(i)), -1), *prev, std::nullopt);
      }
      for (int j : g.neighbors(i)) {
        if (const RootVec* src = get(j, u_new - 1)) {
          add_to(v, scaled(-(cbar(j, i) * Monomial::q(-g.d(i))), *src, std::nullopt));
        }
      }
      phi[{i, u_new}] = std::move(v);
    }
  }

  std::vector<std::vector<std::vector<Poly::Term>>> terms(n, std::vector<std::vector<Poly::Term>>(n));
  for (const auto& [key, v] : phi) {
    const auto [j, u] = key;
    for (int i = 0; i < n; ++i) {
      const int t_exp = u - xi[i] + 1;
      if (v[i].is_zero() || t_exp > trunc) continue;
      if (t_exp < 1) throw InternalError("bipartite recursion produced a term of t-degree < 1");
      for (const auto& [m, coeff] : v[i]) terms[i][j].emplace_back(m.with_t(t_exp), coeff);
    }
  }
  Matrix<TruncatedSeries> entries(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      entries(i, j) = TruncatedSeries(Poly::from_terms(std::move(terms[i][j])), trunc);
    }
  }
  return {std::move(entries), InverseMethod::bipartite, trunc, false};
}

int PeriodicWord::at(std::size_t k) const {
  if (k < prefix.size()) return prefix[k];
  return period[(k - prefix.size()) % period.size()];
}

InverseResult invert_word(const Gcm& g, const PeriodicWord& word, int trunc) {
  if (trunc < 1) throw PreconditionError("truncation must be at least 1");
  const int n = g.size();
  if (word.period.empty()) throw PreconditionError("periodic part of the word is empty");
  for (int a : word.prefix) check_index(g, a);
  for (int a : word.period) check_index(g, a);
  for (int i = 0; i < n; ++i) {
    if (std::find(word.period.begin(), word.period.end(), i) == word.period.end()) {
      throw PreconditionError("index " + std::to_string(i + 1) +
                              " does not occur in the periodic part of the word");
    }
  }

  BraidOperators ops(g);
  std::optional<ReducedWordChecker> checker;
  if (!g.is_finite()) checker.emplace(g);

  // P = T_{i_1} ... T_{i_{k-1}}, known through t^{trunc-1}.
  const int inner = trunc - 1;
  PolyMatrix p = PolyMatrix::identity(n);
  std::vector<std::vector<Poly>> sums(n, std::vector<Poly>(n));
  const std::size_t max_steps = static_cast<std::size_t>(200) * n * (trunc + 2);
  for (std::size_t k = 0;; ++k) {
    bool zero = true;
    for (int r = 0; r < n && zero; ++r) {
      for (int m = 0; m < n && zero; ++m) zero = p(r, m).is_zero();
    }
    if (zero) break;
    if (k >= max_steps) throw PreconditionError("word iteration did not reach the truncation order");
    const int a = word.at(k);
    if (checker && !checker->push(a)) {
      std::ostringstream os;
      os << "word is not reduced: prefix (";
      for (std::size_t m = 0; m <= k; ++m) os << (m ? " " : "") << word.at(m) + 1;
      os << ") fails";
      throw PreconditionError(os.str());
    }
    const Poly scale(Monomial(-g.d(a), 1));
    for (int i = 0; i < n; ++i) {
      if (!p(i, a).is_zero()) sums[i][a] += p(i, a) * scale;
    }
    // P <- P T_a: column m gains P(., a) (row_a[m] - delta_am).
    const auto& row = ops.row(a);
    std::vector<Poly> col_a(n);
    for (int r = 0; r < n; ++r) col_a[r] = p(r, a);
    for (int m = 0; m < n; ++m) {
      Poly factor = row[m] - (m == a ? Poly(1) : Poly());
      if (factor.is_zero()) continue;
      for (int r = 0; r < n; ++r) {
        if (!col_a[r].is_zero()) p(r, m) += poly_mul(col_a[r], factor, inner);
      }
    }
  }

  Matrix<TruncatedSeries> entries(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) entries(i, j) = TruncatedSeries(sums[i][j], trunc);
  }
  return {std::move(entries), InverseMethod::word, trunc, g.is_finite()};
}

PolyMatrix word_operator(const BraidOperators& ops, const std::vector<int>& letters) {
  PolyMatrix m = PolyMatrix::identity(ops.gcm().size());
  for (int a : letters) m = m * ops.matrix(a);
  return m;
}

Monomial path_mu(const Gcm& g, int i, int j) {
  check_index(g, i);
  check_index(g, j);
  if (!g.is_finite()) throw PreconditionError("path_mu is defined for finite type only");
  const int n = g.size();
  std::vector<int> parent(n, -2);
  parent[i] = -1;
  std::queue<int> todo;
  todo.push(i);
  while (!todo.empty()) {
    int a = todo.front();
    todo.pop();
    for (int b : g.neighbors(a)) {
      if (parent[b] == -2) {
        parent[b] = a;
        todo.push(b);
      }
    }
  }
  Monomial out;
  for (int b = j; parent[b] >= 0; b = parent[b]) out = g.mu(parent[b], b, 1) * out;
  return out;
}

LongestMonomial extract_longest_monomial(const Gcm& g) {
  const LongestElement w0 = longest_and_star(g);
  const int n = g.size();
  BraidOperators ops(g);
  const PolyMatrix m = word_operator(ops, w0.word.letters());

  LongestMonomial out;
  out.nu_perm = w0.star;
  std::optional<Monomial> gamma;
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < n; ++a) {
      const Poly& entry = m(a, i);
      if (a != w0.star[i]) {
        if (!entry.is_zero()) throw InternalError("T_w0 is not monomial in the expected pattern");
        continue;
      }
      if (entry.size() != 1 || entry.terms().front().second != -1) {
        throw InternalError("T_w0 entry is not minus a single monomial");
      }
      const Monomial& mono = entry.terms().front().first;
      const Monomial scalar = mono.without_mu();
      if (gamma && *gamma != scalar) throw InternalError("T_w0 is not a scalar multiple of nu");
      gamma = scalar;
      Monomial mu_part = mono * scalar.inverse();
      if (mu_part != path_mu(g, w0.star[i], i)) {
        throw InternalError("nu does not carry the path mass parameter");
      }
      out.nu_mu.push_back(mu_part);
    }
  }
  out.rh_dual = -gamma->q_exp();
  out.h = gamma->t_exp();
  return out;
}

}  // namespace dgcm

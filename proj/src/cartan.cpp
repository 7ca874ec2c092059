#include "dgcm/cartan.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>

#include "dgcm/errors.hpp"

namespace dgcm {

namespace {

// Leading principal minors of a symmetric integer matrix, fraction-free
// (Bareiss). Returns true iff every minor is positive.
bool positive_definite(const std::vector<std::vector<Int>>& a_in) {
  auto a = a_in;
  const auto n = a.size();
  Int prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    // a[k][k] is now the (k+1)-th leading principal minor.
    if (a[k][k] <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return true;
}

std::string describe(int i, int j) {
  std::ostringstream os;
  os << '(' << i + 1 << ',' << j + 1 << ')';
  return os.str();
}

}  // namespace

std::vector<int> minimal_symmetrizer(const IntMatrix& c) {
  const int n = static_cast<int>(c.size());
  // d as rationals num/den along a BFS spanning tree from vertex 0.
  std::vector<long long> num(n, 0), den(n, 1);
  std::vector<bool> seen(n, false);
  num[0] = 1;
  seen[0] = true;
  std::queue<int> todo;
  todo.push(0);
  while (!todo.empty()) {
    int i = todo.front();
    todo.pop();
    for (int j = 0; j < n; ++j) {
      if (j == i || c[i][j] == 0 || seen[j]) continue;
      // d_i c_ij = d_j c_ji  =>  d_j = d_i c_ij / c_ji
      long long nn = num[i] * c[i][j];
      long long dd = den[i] * c[j][i];
      if (dd < 0) {
        nn = -nn;
        dd = -dd;
      }
      long long gg = std::gcd(nn, dd);
      num[j] = nn / gg;
      den[j] = dd / gg;
      seen[j] = true;
      todo.push(j);
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw PreconditionError("matrix is reducible (adjacency graph not connected)");
  }
  long long l = 1;
  for (int i = 0; i < n; ++i) l = std::lcm(l, den[i]);
  std::vector<long long> d(n);
  long long gg = 0;
  for (int i = 0; i < n; ++i) {
    d[i] = num[i] * (l / den[i]);
    gg = std::gcd(gg, d[i]);
  }
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) {
    if (d[i] <= 0) throw PreconditionError("no positive symmetrizer exists");
    out[i] = static_cast<int>(d[i] / gg);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (static_cast<long long>(out[i]) * c[i][j] != static_cast<long long>(out[j]) * c[j][i]) {
        throw PreconditionError("matrix is not symmetrizable (fails at " +
                                describe(i, j) + ")");
      }
    }
  }
  return out;
}

Gcm Gcm::create(IntMatrix c, std::optional<std::vector<int>> d, std::optional<Orientation> omega) {
  const int n = static_cast<int>(c.size());
  if (n == 0) throw PreconditionError("empty Cartan matrix");
  for (const auto& row : c) {
    if (static_cast<int>(row.size()) != n) throw PreconditionError("Cartan matrix is not square");
  }
  for (int i = 0; i < n; ++i) {
    if (c[i][i] != 2) throw PreconditionError("diagonal entry " + describe(i, i) + " is not 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (c[i][j] > 0) {
        throw PreconditionError("positive off-diagonal entry at " + describe(i, j));
      }
      if ((c[i][j] == 0) != (c[j][i] == 0)) {
        throw PreconditionError("c" + describe(i, j) + " and c" +
                                describe(j, i) + " must vanish together");
      }
    }
  }

  Gcm g;
  g.n_ = n;
  g.c_ = std::move(c);
  std::vector<int> minimal = minimal_symmetrizer(g.c_);
  if (d) {
    if (static_cast<int>(d->size()) != n) throw PreconditionError("symmetrizer has wrong length");
    for (int i = 0; i < n; ++i) {
      if ((*d)[i] <= 0) throw PreconditionError("symmetrizer entries must be positive");
      for (int j = 0; j < n; ++j) {
        if ((*d)[i] * g.c_[i][j] != (*d)[j] * g.c_[j][i]) {
          throw PreconditionError("supplied symmetrizer fails condition C2 at " + describe(i, j));
        }
      }
    }
    g.d_ = *d;
  } else {
    g.d_ = minimal;
  }
  g.r_ = 1;
  for (int di : g.d_) g.r_ = std::lcm(g.r_, di);

  g.neighbors_.assign(n, {});
  g.g_.assign(n, std::vector<int>(n, 0));
  g.f_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!g.adjacent(i, j)) continue;
      g.neighbors_[i].push_back(j);
      g.g_[i][j] = std::gcd(-g.c_[i][j], -g.c_[j][i]);
      g.f_[i][j] = -g.c_[i][j] / g.g_[i][j];
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j : g.neighbors_[i]) {
      if (g.f_[i][j] != g.d_[j] / g.d_pair(i, j)) {
        throw InternalError("f_ij = d_j / d_ij failed at " + describe(i, j));
      }
    }
  }

  if (!omega) {
    omega.emplace();
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (g.adjacent(i, j)) omega->emplace_back(i, j);
      }
    }
  }
  validate_orientation(g, *omega);
  g.omega_ = std::move(*omega);
  g.oriented_.assign(n, std::vector<bool>(n, false));
  for (auto [i, j] : g.omega_) g.oriented_[i][j] = true;

  std::vector<std::vector<Int>> dc(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) dc[i][j] = Int(g.d_[i]) * g.c_[i][j];
  }
  g.type_ = positive_definite(dc) ? TypeClass::finite : TypeClass::infinite;
  return g;
}

int Gcm::d_pair(int i, int j) const { return std::gcd(d_[i], d_[j]); }

bool Gcm::is_symmetric() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (c_[i][j] != c_[j][i]) return false;
    }
  }
  return true;
}

Monomial Gcm::mu(int i, int j, int g) const {
  if (!adjacent(i, j) || g < 1 || g > g_[i][j]) {
    throw PreconditionError("no mass parameter mu" + describe(i, j) + "^(" + std::to_string(g) +
                            ")");
  }
  if (oriented_[i][j]) return Monomial::mu({i, j, g}, 1);
  return Monomial::mu({j, i, g}, -1);
}

bool Gcm::condf() const {
  for (int i = 0; i < n_; ++i) {
    for (int j : neighbors_[i]) {
      if (f_[i][j] != 1 && f_[j][i] != 1) return false;
    }
  }
  return true;
}

void validate_orientation(const Gcm& g, const Orientation& omega) {
  const int n = g.size();
  std::vector<std::vector<int>> count(n, std::vector<int>(n, 0));
  for (auto [i, j] : omega) {
    if (i < 0 || j < 0 || i >= n || j >= n) throw PreconditionError("orientation index out of range");
    if (!g.adjacent(i, j)) {
      throw PreconditionError("orientation contains non-adjacent pair " + describe(i, j));
    }
    ++count[std::min(i, j)][std::max(i, j)];
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j) && count[i][j] != 1) {
        throw PreconditionError("orientation must contain exactly one of " + describe(i, j) +
                                " and " + describe(j, i));
      }
    }
  }
  // Kahn's algorithm consumes every vertex iff the orientation is acyclic.
  std::vector<int> indeg(n, 0);
  for (auto [i, j] : omega) ++indeg[j];
  std::vector<int> ready;
  for (int i = 0; i < n; ++i) {
    if (indeg[i] == 0) ready.push_back(i);
  }
  int visited = 0;
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    ++visited;
    for (auto [i, j] : omega) {
      if (i == v && --indeg[j] == 0) ready.push_back(j);
    }
  }
  if (visited != n) throw PreconditionError("orientation has a directed cycle");
}

std::vector<int> topological_order(const Gcm& g, const Orientation& omega) {
  const int n = g.size();
  std::vector<int> indeg(n, 0);
  for (auto [i, j] : omega) ++indeg[j];
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int i = 0; i < n; ++i) {
    if (indeg[i] == 0) ready.push(i);
  }
  std::vector<int> order;
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (auto [i, j] : omega) {
      if (i == v && --indeg[j] == 0) ready.push(j);
    }
  }
  if (static_cast<int>(order.size()) != n) throw PreconditionError("orientation has a directed cycle");
  return order;
}

std::vector<Orientation> all_acyclic_orientations(const Gcm& g) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < g.size(); ++i) {
    for (int j = i + 1; j < g.size(); ++j) {
      if (g.adjacent(i, j)) edges.emplace_back(i, j);
    }
  }
  std::vector<Orientation> out;
  for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
    Orientation omega;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [i, j] = edges[e];
      if (mask & (1u << e)) {
        omega.emplace_back(j, i);
      } else {
        omega.emplace_back(i, j);
      }
    }
    try {
      validate_orientation(g, omega);
      out.push_back(std::move(omega));
    } catch (const PreconditionError&) {
    }
  }
  return out;
}

DeformedMatrix deformed_cartan(const Gcm& g) {
  const int n = g.size();
  PolyMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = Poly(Monomial(g.d(i), -1)) + Poly(Monomial(-g.d(i), 1));
    for (int j : g.neighbors(i)) {
      Poly masses;
      for (int k = 1; k <= g.g(i, j); ++k) masses += Poly(g.mu(i, j, k));
      m(i, j) = -(q_integer(g.f(i, j), g.d(i)) * masses);
    }
  }
  return {std::move(m), g};
}

PolyMatrix deformed_cartan_t_one(const Gcm& g) {
  PolyMatrix m = deformed_cartan(g).entries;
  for (int i = 0; i < g.size(); ++i) {
    for (int j = 0; j < g.size(); ++j) m(i, j) = specialize(m(i, j), Specialization::t_one());
  }
  return m;
}

}  // namespace dgcm

#include "dgcm/weyl.hpp"

#include <algorithm>
#include <set>

#include "dgcm/errors.hpp"

namespace dgcm {

namespace {

void require_finite(const Gcm& g) {
  if (!g.is_finite()) throw PreconditionError("root system not finite");
}

IntLinearMap identity_map(int n) {
  IntLinearMap m(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntRoot apply_map(const IntLinearMap& w, const IntRoot& v) {
  const auto n = v.size();
  IntRoot out(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    if (v[j] == 0) continue;
    for (std::size_t i = 0; i < n; ++i) out[i] += w[i][j] * v[j];
  }
  return out;
}

// w -> w s_i, using (w s_i)(alpha_j) = w(alpha_j) - c_ij w(alpha_i).
void right_multiply(const Gcm& g, IntLinearMap& w, int i) {
  const int n = g.size();
  std::vector<Int> col_i(n);
  for (int a = 0; a < n; ++a) col_i[a] = w[a][i];
  for (int j = 0; j < n; ++j) {
    const int c = g.c(i, j);
    if (c == 0) continue;
    for (int a = 0; a < n; ++a) w[a][j] -= c * col_i[a];
  }
}

}  // namespace

IntRoot simple_root(int n, int i) {
  IntRoot v(n, 0);
  v[i] = 1;
  return v;
}

bool is_nonnegative(const IntRoot& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x >= 0; });
}

bool is_nonpositive(const IntRoot& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x <= 0; });
}

IntRoot reflect(const Gcm& g, int i, const IntRoot& v) {
  Int pairing = 0;
  for (int j = 0; j < g.size(); ++j) pairing += Int(g.c(i, j)) * v[j];
  IntRoot out = v;
  out[i] -= pairing;
  return out;
}

Int root_pairing(const Gcm& g, const IntRoot& u, const IntRoot& v) {
  Int sum = 0;
  for (int i = 0; i < g.size(); ++i) {
    for (int j = 0; j < g.size(); ++j) sum += u[i] * Int(g.d(i) * g.c(i, j)) * v[j];
  }
  return sum;
}

WeylWord::WeylWord(const Gcm& g, std::vector<int> letters)
    : letters_(std::move(letters)), reduced_(is_reduced_prefixwise(g, letters_)) {}

bool is_reduced_prefixwise(const Gcm& g, const std::vector<int>& letters) {
  ReducedWordChecker checker(g);
  for (int i : letters) {
    if (!checker.push(i)) return false;
  }
  return true;
}

ReducedWordChecker::ReducedWordChecker(const Gcm& g) : g_(&g), w_(identity_map(g.size())) {}

bool ReducedWordChecker::push(int i) {
  if (i < 0 || i >= g_->size()) throw PreconditionError("word letter out of range");
  IntRoot image(g_->size());
  for (int a = 0; a < g_->size(); ++a) image[a] = w_[a][i];
  if (!is_nonnegative(image)) return false;
  right_multiply(*g_, w_, i);
  ++length_;
  return true;
}

std::vector<IntRoot> positive_roots(const Gcm& g) {
  require_finite(g);
  const int n = g.size();
  std::set<IntRoot> found;
  std::vector<IntRoot> todo;
  for (int i = 0; i < n; ++i) {
    found.insert(simple_root(n, i));
    todo.push_back(simple_root(n, i));
  }
  // Every positive root other than alpha_i is reached from a smaller positive
  // root by some reflection, so closing the positive part suffices.
  while (!todo.empty()) {
    IntRoot v = std::move(todo.back());
    todo.pop_back();
    for (int i = 0; i < n; ++i) {
      IntRoot w = reflect(g, i, v);
      if (is_nonnegative(w) && found.insert(w).second) todo.push_back(std::move(w));
    }
  }
  return {found.begin(), found.end()};
}

LongestElement longest_and_star(const Gcm& g) {
  require_finite(g);
  const int n = g.size();
  IntLinearMap w = identity_map(n);
  std::vector<int> letters;
  for (;;) {
    int next = -1;
    for (int i = 0; i < n && next < 0; ++i) {
      IntRoot image(n);
      for (int a = 0; a < n; ++a) image[a] = w[a][i];
      if (is_nonnegative(image)) next = i;
    }
    if (next < 0) break;
    right_multiply(g, w, next);
    letters.push_back(next);
  }
  LongestElement out;
  out.word = WeylWord(g, letters);
  out.star.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < n; ++a) {
      if (w[a][i] == -1) {
        out.star[i] = a;
      } else if (w[a][i] != 0) {
        throw InternalError("w0 does not map simple roots to negative simple roots");
      }
    }
    if (out.star[i] < 0) throw InternalError("w0 does not map simple roots to negative simple roots");
  }
  return out;
}

CoxeterData coxeter_data(const Gcm& g, const Orientation& omega) {
  require_finite(g);
  validate_orientation(g, omega);
  const int n = g.size();
  IntLinearMap tau = identity_map(n);
  for (int i : topological_order(g, omega)) right_multiply(g, tau, i);

  CoxeterData out;
  const IntLinearMap id = identity_map(n);
  IntLinearMap power = tau;
  out.h = 1;
  while (power != id) {
    IntLinearMap next(n, std::vector<Int>(n, 0));
    for (int j = 0; j < n; ++j) {
      IntRoot col(n);
      for (int a = 0; a < n; ++a) col[a] = power[a][j];
      IntRoot image = apply_map(tau, col);
      for (int a = 0; a < n; ++a) next[a][j] = image[a];
    }
    power = std::move(next);
    if (++out.h > 1000) throw InternalError("Coxeter element order did not converge");
  }

  // h^vee - 1 is the height of the highest short root.
  auto roots = positive_roots(g);
  Int min_norm = -1;
  for (const auto& v : roots) {
    Int norm = root_pairing(g, v, v);
    if (min_norm < 0 || norm < min_norm) min_norm = norm;
  }
  Int best = 0;
  for (const auto& v : roots) {
    if (root_pairing(g, v, v) != min_norm) continue;
    Int height = 0;
    for (const auto& x : v) height += x;
    best = std::max(best, height);
  }
  out.h_dual = static_cast<int>(best) + 1;
  return out;
}

}  // namespace dgcm

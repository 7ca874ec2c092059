#include "dgcm/kp.hpp"

#include <algorithm>
#include <sstream>

#include "dgcm/errors.hpp"

namespace dgcm {

KpPoly::KpPoly(std::size_t num_edges, long long c) : num_edges_(num_edges) {
  if (c != 0) terms_[std::vector<int>(num_edges + 2, 0)] = c;
}

KpPoly KpPoly::monomial(std::size_t num_edges, int q1, int q2, int edge, int edge_exp) {
  KpPoly p(num_edges);
  std::vector<int> exps(num_edges + 2, 0);
  exps[0] = q1;
  exps[1] = q2;
  if (edge >= 0) exps[2 + edge] = edge_exp;
  p.terms_[exps] = 1;
  return p;
}

KpPoly& KpPoly::operator+=(const KpPoly& other) {
  for (const auto& [e, c] : other.terms_) {
    auto& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
  }
  return *this;
}

KpPoly KpPoly::operator-() const {
  KpPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

KpPoly operator*(const KpPoly& a, const KpPoly& b) {
  KpPoly out(a.num_edges_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      std::vector<int> e(ea.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      auto& slot = out.terms_[e];
      slot += ca * cb;
      if (slot == 0) out.terms_.erase(e);
    }
  }
  return out;
}

Int KpPoly::evaluate_at_one() const {
  Int sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

std::string KpPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Int mag = c < 0 ? Int(-c) : c;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    std::ostringstream mono;
    bool mfirst = true;
    auto factor = [&](const std::string& name, int x) {
      if (x == 0) return;
      if (!mfirst) mono << ' ';
      mfirst = false;
      mono << name;
      if (x != 1) mono << '^' << x;
    };
    factor("q1", e[0]);
    factor("q2", e[1]);
    for (std::size_t k = 2; k < e.size(); ++k) factor("m[" + std::to_string(k - 1) + "]", e[k]);
    if (mfirst) {
      os << mag;
    } else {
      if (mag != 1) os << mag << ' ';
      os << mono.str();
    }
  }
  return os.str();
}

std::vector<QuiverEdge> default_quiver(const Gcm& g) {
  std::vector<QuiverEdge> edges;
  for (auto [i, j] : g.orientation()) {
    for (int k = 0; k < g.g(i, j); ++k) edges.push_back({i, j});
  }
  return edges;
}

void check_fractional_quiver(const Gcm& g, const std::vector<QuiverEdge>& edges) {
  const int n = g.size();
  std::vector<std::vector<int>> count(n, std::vector<int>(n, 0));
  for (const auto& e : edges) {
    if (e.source < 0 || e.target < 0 || e.source >= n || e.target >= n) {
      throw PreconditionError("quiver edge index out of range");
    }
    if (e.source == e.target) throw PreconditionError("quiver has a loop");
    ++count[e.source][e.target];
    ++count[e.target][e.source];
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      int expected = -(g.d(j) / g.d_pair(i, j)) * count[i][j];
      if (expected != g.c(i, j)) {
        throw PreconditionError("quiver is not of type C: edge count between " +
                                std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                " does not reproduce c_ij");
      }
    }
  }
}

Matrix<KpPoly> kp_matrix(const Gcm& g, const std::vector<QuiverEdge>& edges) {
  check_fractional_quiver(g, edges);
  const int n = g.size();
  const std::size_t m = edges.size();
  Matrix<KpPoly> out(n, n, KpPoly(m));
  for (int i = 0; i < n; ++i) {
    out(i, i) = KpPoly(m, 1) + KpPoly::monomial(m, -g.d(i), -1);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || !g.adjacent(i, j)) continue;
      const int dij = g.d_pair(i, j);
      // (1 - q1^{-d_j}) / (1 - q1^{-d_ij}) = sum_{k < d_j/d_ij} q1^{-k d_ij}
      KpPoly ratio(m);
      for (int k = 0; k < g.d(j) / dij; ++k) ratio += KpPoly::monomial(m, -k * dij, 0);
      KpPoly masses(m);
      for (std::size_t e = 0; e < m; ++e) {
        if (edges[e].source == i && edges[e].target == j) {
          masses += KpPoly::monomial(m, 0, 0, static_cast<int>(e), -1);
        } else if (edges[e].source == j && edges[e].target == i) {
          masses += KpPoly::monomial(m, -dij, -1, static_cast<int>(e), 1);
        }
      }
      out(i, j) = -(ratio * masses);
    }
  }
  return out;
}

PolyMatrix kp_transform(const Gcm& g, const std::vector<QuiverEdge>& edges,
                        const Matrix<KpPoly>& kp) {
  // Image of each edge parameter; the label g(e) counts edges per vertex pair.
  std::vector<Monomial> edge_image;
  std::vector<std::vector<int>> seen(g.size(), std::vector<int>(g.size(), 0));
  for (const auto& e : edges) {
    const int i = e.target;
    const int j = e.source;
    const int label = ++seen[std::min(i, j)][std::max(i, j)];
    edge_image.push_back(Monomial(g.d_pair(i, j), -1) * g.mu(i, j, label));
  }
  PolyMatrix out(kp.rows(), kp.cols());
  for (std::size_t r = 0; r < kp.rows(); ++r) {
    for (std::size_t c = 0; c < kp.cols(); ++c) {
      std::vector<Poly::Term> terms;
      for (const auto& [exps, coeff] : kp(r, c).terms()) {
        Monomial m(2 * exps[0], -2 * exps[1]);
        for (std::size_t e = 0; e < edge_image.size(); ++e) {
          if (exps[2 + e] != 0) m = m * edge_image[e].pow(exps[2 + e]);
        }
        terms.emplace_back(std::move(m), coeff);
      }
      out(r, c) = Poly::from_terms(std::move(terms));
    }
  }
  return out;
}

KpReport kp_compare(const Gcm& g, const std::vector<QuiverEdge>& edges) {
  KpReport report;
  report.condf = g.condf();
  report.transformed = kp_transform(g, edges, kp_matrix(g, edges));
  const auto c = deformed_cartan(g).entries;
  const int n = g.size();
  report.reference = PolyMatrix(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) report.reference(i, j) = c(i, j) * Monomial(-g.d(j), 1);
  }
  report.equal = report.transformed == report.reference;
  return report;
}

}  // namespace dgcm

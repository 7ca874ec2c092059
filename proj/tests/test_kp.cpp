#include <doctest.h>

#include "dgcm/errors.hpp"
#include "dgcm/kp.hpp"
#include "support.hpp"

using namespace dgcm;

TEST_CASE("mass-deformed matrix specializes to C") {
  for (const auto& b : testing::battery()) {
    CAPTURE(b.name);
    const auto kp = kp_matrix(b.gcm, default_quiver(b.gcm));
    for (int i = 0; i < b.gcm.size(); ++i) {
      for (int j = 0; j < b.gcm.size(); ++j) CHECK(kp(i, j).evaluate_at_one() == b.gcm.c(i, j));
    }
  }
}

TEST_CASE("comparison with the deformed matrix") {
  SUBCASE("B2 agrees") {
    const KpReport r = kp_compare(Gcm::create({{2, -1}, {-2, 2}}));
    CHECK(r.condf);
    CHECK(r.equal);
  }
  SUBCASE("symmetric matrices agree") {
    const Gcm g = Gcm::create({{2, -3, 0}, {-3, 2, -1}, {0, -1, 2}});
    CHECK(g.is_symmetric());
    CHECK(kp_compare(g).equal);
  }
  SUBCASE("(2,-6;-9,2) differs in both off-diagonal entries") {
    const Gcm g = Gcm::create({{2, -6}, {-9, 2}});
    const KpReport r = kp_compare(g);
    CHECK_FALSE(r.condf);
    CHECK_FALSE(r.equal);
    CHECK(r.transformed(0, 0) == r.reference(0, 0));
    CHECK(r.transformed(1, 1) == r.reference(1, 1));
    CHECK(r.transformed(0, 0).str() == "1 + q^-6 t^2");
    Poly mu12, mu21;
    for (int k = 1; k <= 3; ++k) {
      mu12 += Poly(g.mu(0, 1, k));
      mu21 += Poly(g.mu(1, 0, k));
    }
    // q^{-d_j} t [f_ij]_{q^{d_ij}}.
    CHECK(r.transformed(0, 1) == -((testing::qt(-1, 1) + testing::qt(-3, 1)) * mu12));
    CHECK(r.transformed(1, 0) ==
          -((testing::qt(-1, 1) + testing::qt(-3, 1) + testing::qt(-5, 1)) * mu21));
    CHECK(r.reference(0, 1) == -((testing::qt(1, 1) + testing::qt(-5, 1)) * mu12));
    CHECK(r.reference(1, 0) ==
          -((testing::qt(1, 1) + testing::qt(-3, 1) + testing::qt(-7, 1)) * mu21));
  }
}

TEST_CASE("reversed and mixed quivers") {
  const Gcm g = Gcm::create({{2, -2}, {-2, 2}});
  // One arrow each way: the edge labels still run through g = 1, 2.
  const std::vector<QuiverEdge> mixed = {{0, 1}, {1, 0}};
  const auto r = kp_compare(g, mixed);
  CHECK(r.condf);
  CHECK(r.equal);
}

TEST_CASE("quiver validation") {
  const Gcm g = Gcm::create({{2, -1}, {-2, 2}});
  CHECK_NOTHROW(check_fractional_quiver(g, {{0, 1}}));
  CHECK_THROWS_AS(check_fractional_quiver(g, {}), PreconditionError);
  CHECK_THROWS_AS(check_fractional_quiver(g, {{0, 1}, {0, 1}}), PreconditionError);
  CHECK_THROWS_AS(check_fractional_quiver(g, {{0, 0}}), PreconditionError);
  CHECK_THROWS_AS(check_fractional_quiver(g, {{0, 2}}), PreconditionError);
}

TEST_CASE("KP polynomial rendering") {
  const auto p = KpPoly(1, 1) + KpPoly::monomial(1, -2, -1) - KpPoly::monomial(1, 0, 0, 0, -1);
  CHECK(p.str() == "q1^-2 q2^-1 - m[1]^-1 + 1");
  CHECK(KpPoly(2).str() == "0");
}

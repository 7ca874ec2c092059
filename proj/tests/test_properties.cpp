#include <doctest.h>

#include "property_checks.hpp"

TEST_CASE("ring laws (property)") {
  const auto rep = testing::check_ring_laws(1, 2000);
  CHECK(rep.cases == 2000);
  CHECK_MESSAGE(rep.ok(), rep.first_failure);
}

TEST_CASE("phi is an involutive ring automorphism (property)") {
  const auto rep = testing::check_phi_involution(3, 2000);
  CHECK_MESSAGE(rep.ok(), rep.first_failure);
}

TEST_CASE("series product matches exact product (property)") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> cut(-3, 5);
  for (int k = 0; k < 1000; ++k) {
    const dgcm::Poly a = testing::random_poly(rng);
    const dgcm::Poly b = testing::random_poly(rng);
    const int na = cut(rng), nb = cut(rng);
    const dgcm::TruncatedSeries prod = dgcm::TruncatedSeries(a, na) * dgcm::TruncatedSeries(b, nb);
    // Whatever tail the inputs drop, the product's declared window is exact.
    const dgcm::Poly exact = (a.truncated(na) * b.truncated(nb)).truncated(prod.trunc());
    const dgcm::Poly full = (a * b).truncated(prod.trunc());
    CHECK(prod.poly() == exact);
    CHECK(prod.poly() == full);
  }
}

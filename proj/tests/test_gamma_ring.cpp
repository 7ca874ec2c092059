#include <doctest.h>

#include "dgcm/errors.hpp"
#include "dgcm/gamma_ring.hpp"
#include "support.hpp"

using namespace dgcm;
using testing::qt;

namespace {

const EdgeKey k12{0, 1, 1};
const EdgeKey k12b{0, 1, 2};

}  // namespace

TEST_CASE("monomial rendering") {
  CHECK(Monomial().str() == "1");
  CHECK(Monomial(1, -1).str() == "q t^-1");
  CHECK(Monomial(-3, 2).str() == "q^-3 t^2");
  CHECK(Monomial::t(1).str() == "t");
  CHECK(Monomial::mu(k12, -1).str() == "u[1,2,1]^-1");
  CHECK((Monomial(2, 0) * Monomial::mu(k12b) * Monomial::mu(k12)).str() == "q^2 u[1,2,1] u[1,2,2]");
}

TEST_CASE("monomial group law") {
  const Monomial a = Monomial(2, -1) * Monomial::mu(k12, 3);
  const Monomial b = Monomial(-1, 4) * Monomial::mu(k12, -3) * Monomial::mu(k12b);
  CHECK((a * b).q_exp() == 1);
  CHECK((a * b).t_exp() == 3);
  CHECK((a * b).mu_exp(k12) == 0);
  CHECK((a * b).mu_factors().size() == 1);
  CHECK((a * a.inverse()).is_one());
  CHECK(a.pow(0).is_one());
  CHECK(a.pow(2) == a * a);
  CHECK(a.pow(-1) == a.inverse());
  CHECK(a.without_mu() == Monomial(2, -1));
  CHECK(Monomial::mu(k12, 0).is_one());
}

TEST_CASE("term order is t, then q, then mu") {
  CHECK(Monomial(5, 0) < Monomial(-5, 1));
  CHECK(Monomial(-1, 1) < Monomial(1, 1));
  CHECK(Monomial(0, 0) < Monomial::mu(k12));
  CHECK(Monomial::mu(k12, -1) < Monomial::mu(k12, 1));
}

TEST_CASE("polynomial rendering is canonical") {
  CHECK(Poly().str() == "0");
  CHECK(Poly(1).str() == "1");
  CHECK(Poly(-7).str() == "-7");
  const Poly p = qt(1, -1) + qt(-1, 1) - Poly(2) * Poly(Monomial::mu(k12));
  CHECK(p.str() == "q t^-1 - 2 u[1,2,1] + q^-1 t");
  // Insertion order does not matter.
  const Poly r = qt(-1, 1) - Poly(2) * Poly(Monomial::mu(k12)) + qt(1, -1);
  CHECK(p == r);
  CHECK(p.str() == r.str());
}

TEST_CASE("from_terms merges and drops zeros") {
  const Poly p = Poly::from_terms({{Monomial(1, 0), 2}, {Monomial(1, 0), -2}, {Monomial(0, 1), 3}});
  CHECK(p.size() == 1);
  CHECK(p.coeff(Monomial(0, 1)) == 3);
  CHECK(p.coeff(Monomial(1, 0)) == 0);
  CHECK(Poly(0).is_zero());
  CHECK(Poly(Monomial(1, 1), 0).is_zero());
}

TEST_CASE("arithmetic") {
  const Poly a = qt(1, 0) + qt(-1, 0);
  CHECK((a * a).str() == "q^-2 + 2 + q^2");
  CHECK((a - a).is_zero());
  CHECK((-a + a).is_zero());
  CHECK((a * Monomial(0, 2)).str() == "q^-1 t^2 + q t^2");
  Poly b = a;
  b *= a;
  CHECK(b == a * a);
}

TEST_CASE("coefficients grow beyond machine integers") {
  Poly p = Poly(1) + Poly(1);
  for (int k = 0; k < 7; ++k) p = p * p;  // 2^128
  Int expected = 1;
  expected <<= 128;
  CHECK(p.coeff(Monomial()) == expected);
}

TEST_CASE("truncation and truncated products") {
  const Poly p = qt(0, -1) + qt(0, 0) + qt(3, 2) + qt(0, 5);
  CHECK(p.truncated(2).size() == 3);
  CHECK(p.truncated(-2).is_zero());
  CHECK(*p.max_t_exp() == 5);
  CHECK_FALSE(Poly().max_t_exp().has_value());
  CHECK(poly_mul(p, p, 3) == (p * p).truncated(3));
  CHECK(poly_mul(p, Poly(), 3).is_zero());
}

TEST_CASE("q-integers") {
  CHECK(q_integer(1).str() == "1");
  CHECK(q_integer(2).str() == "q^-1 + q");
  CHECK(q_integer(3, 2).str() == "q^-4 + 1 + q^4");
  CHECK_THROWS_AS(q_integer(0), PreconditionError);
  CHECK_THROWS_AS(q_integer(2, 0), PreconditionError);
}

TEST_CASE("t-valuation") {
  CHECK_FALSE(t_valuation(Poly()).has_value());
  CHECK(*t_valuation(qt(4, 3) + qt(-9, 1)) == 1);
  CHECK(*t_valuation(qt(0, -2)) == -2);
}

TEST_CASE("phi inverts every mass parameter") {
  const Poly p = Poly(Monomial(1, 2) * Monomial::mu(k12, 2) * Monomial::mu(k12b, -1)) + Poly(3);
  const Poly phi = apply_phi(p);
  CHECK(phi.coeff(Monomial(1, 2) * Monomial::mu(k12, -2) * Monomial::mu(k12b, 1)) == 1);
  CHECK(phi.coeff(Monomial()) == 3);
  CHECK(apply_phi(phi) == p);
}

TEST_CASE("specializations") {
  const Poly p = Poly(Monomial(2, 1) * Monomial::mu(k12)) + Poly(Monomial(2, 1) * Monomial::mu(k12b)) +
                 qt(-1, 3);
  CHECK(specialize(p, Specialization::mu_one()).str() == "2 q^2 t + q^-1 t^3");
  CHECK(specialize(p, Specialization::q_and_mu_one()).str() == "2 t + t^3");
  CHECK(specialize(p, Specialization::t_one()).coeff(Monomial(-1, 0)) == 1);
  CHECK(specialize(p, Specialization::q_one()).coeff(Monomial::t(1) * Monomial::mu(k12)) == 1);
}

TEST_CASE("truncated series") {
  const TruncatedSeries a(qt(0, 1) + qt(0, 2) + qt(0, 9), 4);
  CHECK(a.poly().size() == 2);
  CHECK(a.trunc() == 4);
  const TruncatedSeries b(qt(0, 0) + qt(0, 1), 6);
  CHECK((a + b).trunc() == 4);
  const TruncatedSeries prod = a * b;
  CHECK(prod.trunc() == 4);
  CHECK(prod.poly() == (qt(0, 1) + Poly(2) * qt(0, 2) + qt(0, 3)));
  // A t^-1 factor shortens the window by one.
  const TruncatedSeries shifted = qt(1, -1) * a;
  CHECK(shifted.trunc() == 3);
  CHECK(shifted.poly() == (qt(1, 0) + qt(1, 1)));
  // Likewise when the series operand is known to be zero.
  const TruncatedSeries zero(Poly(), 5);
  CHECK((TruncatedSeries(qt(0, -2), 10) * zero).trunc() == 3);
  CHECK(a.retruncated(2).poly() == qt(0, 1) + qt(0, 2));
  CHECK_THROWS_AS(a.retruncated(5), PreconditionError);
}

TEST_CASE("t-evaluation of a series is refused") {
  const TruncatedSeries a(qt(-1, 1), 3);
  CHECK_THROWS_WITH_AS(specialize(a, Specialization::t_one()), "t-evaluation undefined",
                       PreconditionError);
  CHECK(specialize(a, Specialization::q_one()).poly() == qt(0, 1));
}

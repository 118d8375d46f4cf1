#include <doctest.h>

#include <random>

#include "polyalg.hpp"

using namespace ucp;

namespace {

Poly x() { return Poly::variable(0); }
Poly y() { return Poly::variable(1); }

Poly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<unsigned> expn(0, 4);
  std::uniform_int_distribution<int> nterms(1, 6);
  Poly p;
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    int c = coeff(rng);
    if (c == 0) c = 1;
    p = p + Poly::xy_term(c, expn(rng), expn(rng));
  }
  return p;
}

}  // namespace

TEST_SUITE_BEGIN("polyalg");

TEST_CASE("basic arithmetic") {
  const Poly u = y() - x() * x();
  CHECK((u + x() * x()) == y());
  CHECK(u.total_degree() == 2);
  CHECK(Poly().total_degree() == -1);
  CHECK(Poly().str() == "0");
  CHECK(kashiwara_seed_p(0).total_degree() == 5);
  CHECK(pow(u, 0) == Poly::constant(1));
  CHECK(pow(u, 3) == u * u * u);
}

TEST_CASE("substitution") {
  // G(x, x^2) = x*x^2 - x^3 - x^6 = -x^6
  const Poly g = kashiwara_g();
  CHECK(substitute(g, 1, x() * x()) == -Poly::variable(0, 6));
  CHECK(substitute(kashiwara_seed_p(0), 1, x() * x()) == Poly::variable(0, 10));
}

TEST_CASE("canonical text form") {
  CHECK(kashiwara_g().str() == "-x^3 - y^3 + x*y");
  CHECK(kashiwara_seed_p(0).str() ==
        "2*x^3*y^2 + y^5 + x^4 - 2*x*y^3 - 2*x^2*y + y^2");
  CHECK(kashiwara_seed_q(0).str() == "-x^2 + y");
  CHECK(Poly::constant(Rational(-3, 2)).str() == "-3/2");
}

TEST_CASE("exact division") {
  const Poly u = y() - x() * x();
  const Poly q = exact_divide(y() * y() - Poly::variable(0, 4), u);
  CHECK(q == y() + x() * x());
  CHECK(q.str() == "x^2 + y");

  const Poly g = kashiwara_g();
  const Poly p0 = kashiwara_seed_p(0);
  const Poly big = pow(g, 5) + p0 * p0 * p0;
  const Poly quot = exact_divide(big, u);
  CHECK(quot.total_degree() == 13);

  const Poly bad = pow(g, 2) + p0 * p0 * p0;
  CHECK_THROWS_AS(exact_divide(bad, u), NotDivisibleError);
  try {
    exact_divide(bad, u);
  } catch (const NotDivisibleError& e) {
    CHECK_FALSE(e.remainder.is_zero());
    // substituting y -> x^2 into the numerator gives x^12 + x^30 != 0
    CHECK(substitute(bad, 1, x() * x()) ==
          Poly::variable(0, 12) + Poly::variable(0, 30));
  }
  CHECK_THROWS_AS(divide(u, Poly()), std::invalid_argument);
}

TEST_CASE("division round-trips on random inputs") {
  std::mt19937_64 rng(987654321);
  int done = 0;
  while (done < 500) {
    const Poly p = random_poly(rng);
    const Poly q = random_poly(rng);
    if (p.is_zero()) continue;
    ++done;
    CHECK(exact_divide(q * p, p) == q);
  }
}

TEST_CASE("kashiwara sequence") {
  const auto seq = kashiwara_sequence(2);
  REQUIRE(seq.size() == 4);
  CHECK(seq[0].s == -1);
  CHECK(seq[0].p == y() - x() * x());
  CHECK(seq[0].q == y());
  CHECK(seq[1].s == 0);
  CHECK(seq[1].q == y() - x() * x());
  CHECK(seq[1].degree == 5);

  CHECK(seq[2].degree == 13);
  CHECK(seq[2].exponent_default == 2);
  CHECK(seq[2].exponent_used == 5);
  CHECK_FALSE(seq[2].default_exact);
  CHECK(seq[2].q == seq[1].p);
  CHECK(seq[2].p.coefficient({13}) == 1);

  CHECK(seq[3].degree == 34);
  CHECK(seq[3].exponent_used == 13);
  CHECK_FALSE(seq[3].default_exact);

  CHECK_THROWS_AS(kashiwara_sequence(0), std::invalid_argument);
}

TEST_CASE("family (b) parametrization") {
  for (long long d = 4; d <= 20; d += 2) CHECK(verify_family_b_parametrization(d));
  CHECK_THROWS_AS(verify_family_b_parametrization(5), std::invalid_argument);
  CHECK_THROWS_AS(verify_family_b_parametrization(2), std::invalid_argument);
}

TEST_CASE("pencil degree identities") {
  const auto seq = kashiwara_sequence(2);
  for (int s = 0; s <= 5; ++s) {
    const PencilCheck pc = pencil_degree_check(s, s <= 2 ? &seq : nullptr);
    CHECK(pc.index_identity);
    CHECK(pc.measured_identity);
    CHECK(pc.measured_degrees_ok);
  }
  CHECK(pencil_degree_check(0).fiber_degree == 10);   // 5 * 2 = 3^2 + 1
  CHECK(pencil_degree_check(1).fiber_degree == 65);   // 13 * 5 = 8^2 + 1
  CHECK(pencil_degree_check(2).fiber_degree == 442);  // 34 * 13 = 21^2 + 1
}

TEST_SUITE_END();

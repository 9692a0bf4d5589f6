#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bc/scalar_io.hpp>

#include <random>

using namespace bc;

namespace {

// Deterministic generators for the property checks.
Cyclotomic random_cyc(std::mt19937_64& rng, long conductor) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  Cyclotomic c = Cyclotomic::zero(conductor);
  for (long k = 0; k < euler_phi(conductor); ++k) {
    c += make_rational(num(rng), den(rng)) *
         Cyclotomic::root_of_unity(conductor, k);
  }
  return c;
}

Polynomial random_poly(std::mt19937_64& rng, unsigned vars, long conductor) {
  std::uniform_int_distribution<int> terms(0, 3);
  std::uniform_int_distribution<unsigned> expo(0, 2);
  Polynomial p;
  int n = terms(rng);
  for (int t = 0; t <= n; ++t) {
    Monomial m(vars, 0);
    for (unsigned v = 0; v < vars; ++v) m[v] = expo(rng);
    p += Polynomial::term(m, random_cyc(rng, conductor));
  }
  return p;
}

ParamScalar random_scalar(std::mt19937_64& rng, unsigned vars, long conductor) {
  Polynomial num = random_poly(rng, vars, conductor);
  Polynomial den;
  while (den.is_zero()) den = random_poly(rng, vars, conductor);
  return ParamScalar::fraction(num, den);
}

}  // namespace

TEST_CASE("cyclotomic basics") {
  // zeta_4^2 = -1
  Cyclotomic i4 = Cyclotomic::root_of_unity(4, 1);
  CHECK(i4 * i4 == Cyclotomic::from_rational(Rational(-1)));
  // 1 + z + z^2 + z^3 = 0 at conductor 4
  Cyclotomic sum = Cyclotomic::zero(4);
  for (int k = 0; k < 4; ++k) sum += i4.pow(k);
  CHECK(sum.is_zero());
  // the same sum with zeta = 1 is 4
  Cyclotomic one = Cyclotomic::one();
  Cyclotomic sum1 = Cyclotomic::zero();
  for (int k = 0; k < 4; ++k) sum1 += one.pow(k);
  CHECK(sum1 == Cyclotomic::from_rational(Rational(4)));
  CHECK_THROWS_AS(Cyclotomic::root_of_unity(0, 1), InvalidInput);
}

TEST_CASE("cyclotomic field axioms on random elements") {
  std::mt19937_64 rng(42);
  for (int iter = 0; iter < 60; ++iter) {
    long n = 1 + static_cast<long>(rng() % 12);
    Cyclotomic a = random_cyc(rng, n), b = random_cyc(rng, n),
               c = random_cyc(rng, n);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic::one(n));
  }
}

TEST_CASE("conductor promotion is coherent") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 40; ++iter) {
    long n = 1 + static_cast<long>(rng() % 8);
    long m = n * (1 + static_cast<long>(rng() % 4));
    Cyclotomic a = random_cyc(rng, n);
    CHECK(a.promoted(m) == a);
    Cyclotomic b = random_cyc(rng, n);
    CHECK(a.promoted(m) * b.promoted(m) == (a * b).promoted(m));
  }
}

TEST_CASE("polynomial cancellation in fractions") {
  // (d^2 - d) / d = d - 1
  Polynomial d = Polynomial::variable(0);
  Polynomial one = Polynomial::constant(Cyclotomic::one());
  ParamScalar q = ParamScalar::fraction(d * d - d, d);
  CHECK(q == ParamScalar::from_polynomial(d - one));
  // commutativity: d*m + m*d - 2 d m = 0
  Polynomial m = Polynomial::variable(1);
  CHECK((d * m + m * d - Polynomial::constant(Rational(2)) * d * m).is_zero());
}

TEST_CASE("specialization") {
  ParamRing ring(1, 1, 0);
  ParamScalar d = ParamScalar::variable(ring.delta_var());
  ParamScalar m = ParamScalar::variable(ring.mu_var(0));
  std::map<unsigned, Cyclotomic> two{{0u, Cyclotomic::from_rational(2)}};
  // substitute d -> 2 in (d^2-1)/(d-1) gives 3
  ParamScalar f = (d * d - ParamScalar::one()) / (d - ParamScalar::one());
  CHECK(f.specialized(two) == ParamScalar::from_rational(3));
  // d*m at d=2 -> 2m
  CHECK((d * m).specialized(two) ==
        m * ParamScalar::from_rational(2));
  // 1/(d-1) at d=1 is a pole
  ParamScalar g = ParamScalar::one() / (d - ParamScalar::one());
  std::map<unsigned, Cyclotomic> onev{{0u, Cyclotomic::one()}};
  CHECK_THROWS_AS(g.specialized(onev), PoleError);
  // empty assignment is the identity
  CHECK(d.specialized({}) == d);
}

TEST_CASE("specialize commutes with arithmetic") {
  std::mt19937_64 rng(11);
  ParamRing ring(4, 2, 1);
  for (int iter = 0; iter < 40; ++iter) {
    ParamScalar a = random_scalar(rng, ring.variable_count(), 4);
    ParamScalar b = random_scalar(rng, ring.variable_count(), 4);
    std::map<unsigned, Cyclotomic> assign;
    for (unsigned v = 0; v < ring.variable_count(); ++v)
      if (rng() % 2)
        assign.emplace(v, Cyclotomic::from_rational(
                              Rational(1 + static_cast<long>(rng() % 5))));
    auto ok = [&](const ParamScalar& s) {
      try {
        s.specialized(assign);
        return true;
      } catch (const PoleError&) {
        return false;
      }
    };
    if (!ok(a) || !ok(b)) continue;
    CHECK((a + b).specialized(assign) ==
          a.specialized(assign) + b.specialized(assign));
    CHECK((a - b).specialized(assign) ==
          a.specialized(assign) - b.specialized(assign));
    CHECK((a * b).specialized(assign) ==
          a.specialized(assign) * b.specialized(assign));
    if (!b.is_zero() && ok(b.inverse()))
      CHECK((a / b).specialized(assign) ==
            a.specialized(assign) / b.specialized(assign));
  }
}

TEST_CASE("scalar field axioms on random fractions") {
  std::mt19937_64 rng(5);
  ParamRing ring(3, 1, 1);
  for (int iter = 0; iter < 25; ++iter) {
    ParamScalar a = random_scalar(rng, 3, 3);
    ParamScalar b = random_scalar(rng, 3, 3);
    ParamScalar c = random_scalar(rng, 3, 3);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    if (!a.is_zero()) CHECK(a * a.inverse() == ParamScalar::one());
    if (!a.is_zero()) CHECK(a / a == ParamScalar::one());
  }
}

TEST_CASE("division by zero is a distinct error") {
  ParamScalar d = ParamScalar::variable(0);
  CHECK_THROWS_AS(d / ParamScalar::zero(), DivisionByZero);
  CHECK_THROWS_AS(ParamScalar::zero().inverse(), DivisionByZero);
}

TEST_CASE("scalar rendering round-trips") {
  std::mt19937_64 rng(99);
  ParamRing ring(4, 2, 1);
  for (int iter = 0; iter < 50; ++iter) {
    ParamScalar s = random_scalar(rng, ring.variable_count(), 4);
    std::string text = render_scalar(s, ring);
    CHECK(parse_scalar(text, ring) == s);
  }
  CHECK(render_scalar(ParamScalar::zero(), ring) == "0");
  CHECK(parse_scalar("(1 + z)*d - m0^2/2", ring) ==
        parse_scalar("d + z*d - 1/2*m0*m0", ring));
}

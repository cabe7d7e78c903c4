#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "orbindex/cyclotomic.hpp"
#include "orbindex/errors.hpp"

using namespace orbindex;

namespace {

Cyclotomic zeta(unsigned n, long k = 1) { return Cyclotomic::root(n, k); }

// random element of Q(zeta_n) with small numerators/denominators
Cyclotomic random_cyclotomic(std::mt19937& rng, unsigned n) {
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  std::uniform_int_distribution<unsigned> exp(0, n - 1);
  Cyclotomic acc(0);
  for (int i = 0; i < 3; ++i) {
    acc += Cyclotomic(Rational(num(rng), den(rng))) * zeta(n, exp(rng));
  }
  return acc;
}

}  // namespace

TEST_CASE("rational basics") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(1, -2).str() == "-1/2");
  CHECK(Rational(6, 3).str() == "2");
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), DivisionByZero);
  CHECK(Rational::parse("-7/3") == Rational(-7, 3));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational(7, 1).fits_long());
  CHECK(Rational(7, 1).to_long() == 7);
}

TEST_CASE("roots of unity reduce to canonical form") {
  CHECK(zeta(4, 2) == Cyclotomic(-1));     // zeta_4^2 = -1
  CHECK(zeta(1, 0) == Cyclotomic(1));
  CHECK(zeta(3, 1) + zeta(3, 2) == Cyclotomic(-1));  // 1 + z + z^2 = 0
  CHECK(zeta(4) * zeta(4) == Cyclotomic(-1));
  CHECK(zeta(2).promoted(6) == zeta(6, 3));
  CHECK(Cyclotomic(1) / (Cyclotomic(1) - zeta(2)) == Cyclotomic(Rational(1, 2)));
  CHECK(zeta(5, 7) == zeta(5, 2));  // exponents mod n
}

TEST_CASE("conjugation") {
  CHECK(zeta(4).conj() == -zeta(4));
  CHECK(Cyclotomic(Rational(3, 5)).conj() == Cyclotomic(Rational(3, 5)));
  CHECK((Cyclotomic(1) + zeta(3)).conj() == Cyclotomic(1) + zeta(3, 2));
  std::mt19937 rng(7);
  for (unsigned n : {3u, 4u, 5u, 8u, 12u}) {
    Cyclotomic a = random_cyclotomic(rng, n);
    Cyclotomic b = random_cyclotomic(rng, n);
    CHECK(a.conj().conj() == a);
    CHECK((a + b).conj() == a.conj() + b.conj());
    CHECK((a * b).conj() == a.conj() * b.conj());
  }
}

TEST_CASE("rationality detection") {
  CHECK((zeta(5, 1) + zeta(5, 2) + zeta(5, 3) + zeta(5, 4)).to_rational() == Rational(-1));
  CHECK_THROWS_AS(zeta(8).to_rational(), NotRational);
  CHECK(Cyclotomic(Rational(7, 3)).to_rational() == Rational(7, 3));
  CHECK(zeta(6, 3).is_rational());  // = -1
}

TEST_CASE("field axioms on random samples") {
  std::mt19937 rng(42);
  for (unsigned n : {2u, 3u, 4u, 6u, 8u, 12u}) {
    for (int trial = 0; trial < 8; ++trial) {
      Cyclotomic a = random_cyclotomic(rng, n);
      Cyclotomic b = random_cyclotomic(rng, n);
      Cyclotomic c = random_cyclotomic(rng, n);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - a).is_zero());  // canonical zero
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == Cyclotomic(1).promoted(a.order()));
        CHECK(a / a == Cyclotomic(1).promoted(a.order()));
      }
    }
  }
  CHECK_THROWS_AS(Cyclotomic(0).inverse(), DivisionByZero);
}

TEST_CASE("embedding into a bigger field commutes with arithmetic") {
  std::mt19937 rng(5);
  for (unsigned n : {2u, 3u, 4u, 6u}) {
    for (unsigned m : {2u, 3u}) {
      Cyclotomic a = random_cyclotomic(rng, n);
      Cyclotomic b = random_cyclotomic(rng, n);
      unsigned big = n * m;
      CHECK((a + b).promoted(big) == a.promoted(big) + b.promoted(big));
      CHECK((a * b).promoted(big) == a.promoted(big) * b.promoted(big));
      CHECK(a.promoted(big).conj() == a.conj().promoted(big));
      if (!a.is_zero()) CHECK(a.promoted(big).inverse() == a.inverse().promoted(big));
    }
  }
}

TEST_CASE("order minimization finds the conductor") {
  CHECK(zeta(4, 2).minimized().order() == 1);
  CHECK(zeta(6).minimized().order() == 3);  // zeta_6 = -zeta_3^2 lives in Q(zeta_3)
  CHECK(zeta(8).minimized().order() == 8);
  CHECK(zeta(12, 4).minimized().order() == 3);
  Cyclotomic sqrt2 = zeta(8) + zeta(8, 7);  // 2 cos(pi/4)
  CHECK(sqrt2.minimized().order() == 8);    // Q(sqrt 2) has conductor 8
  CHECK(sqrt2 * sqrt2 == Cyclotomic(2));
}

TEST_CASE("string form round-trips and is canonical") {
  CHECK(Cyclotomic(Rational(3, 5)).str() == "3/5");
  CHECK(zeta(4, 2).str() == "-1");
  CHECK((Cyclotomic(1) + zeta(3)).str() == "1 + 1*z^1 (z = zeta_3)");
  std::mt19937 rng(11);
  for (unsigned n : {1u, 2u, 5u, 8u, 12u}) {
    for (int trial = 0; trial < 6; ++trial) {
      Cyclotomic a = random_cyclotomic(rng, n);
      CHECK(Cyclotomic::parse(a.str()) == a);
    }
  }
  CHECK(Cyclotomic::parse("1/2*z^1 (z = zeta_8)") == Cyclotomic(Rational(1, 2)) * zeta(8));
  CHECK_THROWS_AS(Cyclotomic::parse(""), ParseError);
}

TEST_CASE("galois substitution permutes roots") {
  CHECK(zeta(5).galois(2) == zeta(5, 2));
  Cyclotomic a = Cyclotomic(2) + zeta(7, 3);
  CHECK(a.galois(3) == Cyclotomic(2) + zeta(7, 2));
  CHECK_THROWS_AS(zeta(6).galois(2), UnsupportedParams);  // 2 not coprime to 6
}

TEST_CASE("powers") {
  CHECK(zeta(5).pow(5) == Cyclotomic(1).promoted(5));
  CHECK(zeta(5).pow(-1) == zeta(5, 4));
  CHECK((Cyclotomic(1) + zeta(4)).pow(2) == Cyclotomic(2) * zeta(4));
}

TEST_CASE("root-of-unity exponent arithmetic") {
  RootOfUnity l(1, 4);
  CHECK(l.pow(2) == RootOfUnity(1, 2));
  CHECK(l.pow(4).is_one());
  CHECK((l * l.inverse()).is_one());
  auto [s1, s2] = RootOfUnity(1, 2).sqrts();
  CHECK(s1.pow(2) == RootOfUnity(1, 2));
  CHECK(s2.pow(2) == RootOfUnity(1, 2));
  CHECK(s1 != s2);
  CHECK(s1.to_cyclotomic() == zeta(4));
  CHECK(RootOfUnity(3, 6) == RootOfUnity(1, 2));  // reduced form
  CHECK(RootOfUnity::parse("2/3").str() == "2/3");
}

TEST_CASE("order cap guards runaway promotion") {
  CHECK_NOTHROW(Cyclotomic::root(360, 1));
  CHECK_THROWS_AS(Cyclotomic::root(361, 1), OrderLimitExceeded);
}

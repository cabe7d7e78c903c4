#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbindex/charform.hpp"
#include "orbindex/errors.hpp"
#include "orbindex/series.hpp"

using namespace orbindex;

namespace {

// Taylor oracle from the Bernoulli recursion sum_{j<=m} C(m+1,j) B_j = 0,
// independent of the series-reciprocal route used by the library.
std::vector<Rational> bernoulli(unsigned top) {
  std::vector<Rational> b(top + 1, Rational(0));
  b[0] = Rational(1);
  auto choose = [](unsigned n, unsigned k) {
    Rational c(1);
    for (unsigned i = 0; i < k; ++i) {
      c *= Rational(static_cast<long>(n - i));
      c /= Rational(static_cast<long>(i + 1));
    }
    return c;
  };
  for (unsigned m = 1; m <= top; ++m) {
    Rational acc(0);
    for (unsigned j = 0; j < m; ++j) acc += choose(m + 1, j) * b[j];
    b[m] = -acc / choose(m + 1, m);
  }
  return b;
}

Rational factorial(unsigned n) {
  Rational f(1);
  for (unsigned i = 2; i <= n; ++i) f *= Rational(static_cast<long>(i));
  return f;
}

GradedClass sym(unsigned nsym, unsigned dim, unsigned i) {
  return GradedClass::symbol(nsym, dim, i);
}

}  // namespace

TEST_CASE("todd root series against the Bernoulli oracle") {
  std::vector<Rational> b = bernoulli(8);
  Series todd = todd_root_series(8);
  for (unsigned n = 0; n <= 7; ++n) {
    Rational want = n == 1 ? Rational(1, 2) : b[n] / factorial(n);
    CHECK(todd.c[n] == Cyclotomic(want));
  }
  // pinned: 1 + x/2 + x^2/12 + 0 x^3 - x^4/720
  CHECK(todd.c[0] == Cyclotomic(1));
  CHECK(todd.c[1] == Cyclotomic(Rational(1, 2)));
  CHECK(todd.c[2] == Cyclotomic(Rational(1, 12)));
  CHECK(todd.c[3] == Cyclotomic(0));
  CHECK(todd.c[4] == Cyclotomic(Rational(-1, 720)));
}

TEST_CASE("ahat root series against the Bernoulli oracle") {
  std::vector<Rational> b = bernoulli(8);
  Series ahat = ahat_root_series(8);
  for (unsigned n = 0; n <= 7; ++n) {
    Rational want(0);
    if (n % 2 == 0) {
      Rational two_2k(1), four_k(1);
      for (unsigned i = 0; i < n; ++i) two_2k *= Rational(2);
      for (unsigned i = 0; i < n / 2; ++i) four_k *= Rational(4);
      want = (Rational(2) - two_2k) * b[n] / (four_k * factorial(n));
    }
    CHECK(ahat.c[n] == Cyclotomic(want));
  }
  CHECK(ahat.c[2] == Cyclotomic(Rational(-1, 24)));
  CHECK(ahat.c[4] == Cyclotomic(Rational(7, 5760)));
  CHECK(ahat.c[6] == Cyclotomic(Rational(-31, 967680)));
}

TEST_CASE("normal factors") {
  RootOfUnity minus_one(1, 2);
  Series d = dolbeault_normal_series(minus_one, 3);
  CHECK(d.c[0] == Cyclotomic(Rational(1, 2)));  // 1/(1 - (-1)^{-1})
  CHECK_THROWS_AS(dolbeault_normal_series(RootOfUnity(0, 1), 3), SingularSeries);

  // spin factor with both lifts of -1: constant 1/(s - s^{-1}) = -+ i/2
  auto [i_lift, minus_i_lift] = minus_one.sqrts();
  Series sp = spin_normal_series(i_lift, 3);
  Cyclotomic i = Cyclotomic::root(4, 1);
  CHECK(sp.c[0] == Cyclotomic(1) / (i + i));
  CHECK_THROWS_AS(spin_normal_series(RootOfUnity(1, 2), 3), SingularSeries);  // s^2 = 1
}

TEST_CASE("dolbeault factor equals the spin factor times the half twist") {
  unsigned len = 7;
  for (unsigned n : {2u, 3u, 4u, 5u, 6u, 8u, 12u}) {
    for (unsigned k = 1; k < n; ++k) {
      RootOfUnity lambda(k, n);
      if (lambda.is_one()) continue;
      Series dolb = dolbeault_normal_series(lambda, len);
      auto [s1, s2] = lambda.sqrts();
      for (const RootOfUnity& s : {s1, s2}) {
        Series sc = Series::zero(len);
        sc.c[0] = s.to_cyclotomic();
        Series lhs = series_mul(series_mul(spin_normal_series(s, len),
                                           series_exp(Rational(1, 2), len)),
                                sc);
        for (unsigned i = 0; i < len; ++i) CHECK(lhs.c[i] == dolb.c[i]);
      }
    }
  }
}

TEST_CASE("graded algebra arithmetic") {
  unsigned nsym = 2, dim = 4;
  GradedClass x = sym(nsym, dim, 0), y = sym(nsym, dim, 1);
  CHECK(x * y == y * x);
  CHECK((x + y) * (x + y) == x * x + (x * y).scaled(Cyclotomic(2)) + y * y);
  // truncation: degree-6 monomials vanish at dim 4
  CHECK((x * x * y).is_zero());
  GradedClass mixed = GradedClass::constant(nsym, dim, Cyclotomic(1)) + x;
  CHECK(mixed.degree_part(2) == x);
  CHECK(mixed.constant_term() == Cyclotomic(1));
  CHECK_THROWS_AS(x + sym(1, 2, 0), BasisMismatch);
}

TEST_CASE("computing high then truncating equals computing low") {
  Series todd = todd_root_series(4);
  GradedClass x_high = GradedClass::symbol(1, 6, 0);
  GradedClass x_low = GradedClass::symbol(1, 2, 0);
  GradedClass high = series_apply(todd, x_high);
  GradedClass low = series_apply(todd, x_low);
  CHECK(high.truncated(2) == low);
}

TEST_CASE("series substitution needs a nilpotent argument") {
  GradedClass c = GradedClass::constant(1, 2, Cyclotomic(1));
  CHECK_THROWS_AS(series_apply(todd_root_series(2), c), SingularSeries);
}

TEST_CASE("equivariant chern character on football data") {
  ManifoldModel m = instantiate({"football", 3, "", {}});
  // trivial bundle: constant 1 on every component
  EquivariantBundle triv = m.bundle(TwistSpec::trivial());
  for (size_t ci = 0; ci < m.strata.size(); ++ci) {
    for (size_t yi = 0; yi < m.strata[ci].size(); ++yi) {
      const FixedComponent& y = m.strata[ci][yi];
      unsigned k = m.group.cyclic_classes()[ci].gen_exponents[0];
      CHECK(equiv_chern(triv, ci, yi, k, y) == y.constant(Cyclotomic(1)));
    }
  }
  // O(4) at the pole with tangent eigenvalue zeta_3: mu = zeta_3^4 = zeta_3
  EquivariantBundle o4 = m.bundle(TwistSpec::parse("O:4"));
  const FixedComponent& pole_a = m.strata[1][0];
  CHECK(equiv_chern(o4, 1, 0, 1, pole_a) ==
        pole_a.constant(Cyclotomic::root(3, 1)));
  // rank-2 sum of weights (1, -1) at an order-2 element, dim 0: 1 + (-1) = 0
  ManifoldModel m2 = instantiate({"football", 2, "", {}});
  EquivariantBundle pm = m2.bundle(TwistSpec::parse("sum:wt:0,wt:1"));
  const FixedComponent& pole2 = m2.strata[1][0];
  CHECK(equiv_chern(pm, 1, 0, 1, pole2).is_zero());
}

TEST_CASE("chern character is multiplicative and additive") {
  ManifoldModel m = instantiate({"football", 4, "", {}});
  EquivariantBundle a = m.bundle(TwistSpec::parse("O:1"));
  EquivariantBundle b = m.bundle(TwistSpec::parse("O:2*wt:1"));
  EquivariantBundle ab = m.bundle(TwistSpec::parse("O:3*wt:1"));
  EquivariantBundle sum = m.bundle(TwistSpec::parse("sum:O:1,O:2*wt:1"));
  const auto& classes = m.group.cyclic_classes();
  for (size_t ci = 0; ci < classes.size(); ++ci) {
    for (unsigned k : classes[ci].gen_exponents) {
      for (size_t yi = 0; yi < m.strata[ci].size(); ++yi) {
        const FixedComponent& y = m.strata[ci][yi];
        GradedClass cha = equiv_chern(a, ci, yi, k, y);
        GradedClass chb = equiv_chern(b, ci, yi, k, y);
        CHECK(equiv_chern(ab, ci, yi, k, y) == cha * chb);
        CHECK(equiv_chern(sum, ci, yi, k, y) == cha + chb);
      }
    }
  }
}

TEST_CASE("local densities at pinned points") {
  // dolbeault at an isolated point with eigenvalue -1: constant 1/2
  ManifoldModel f2 = instantiate({"football", 2, "", {}});
  GradedClass d = local_density(Operator::Dolbeault, f2, 1, 0, 1, nullptr);
  CHECK(d == f2.strata[1][0].constant(Cyclotomic(Rational(1, 2))));
  // deRham at an isolated point: 1
  GradedClass dr = local_density(Operator::DeRham, f2, 1, 0, 1, nullptr);
  CHECK(dr == f2.strata[1][0].constant(Cyclotomic(1)));
  EquivariantBundle twisted = f2.bundle(TwistSpec::trivial());
  CHECK_THROWS_AS(local_density(Operator::DeRham, f2, 1, 0, 1, &twisted),
                  UnsupportedTwist);
  // the diagonal sphere inside the product: Td(u)/(1+e^{-u}) = 1/2 + u/2,
  // which integrates to 1 over a sphere of volume 2
  ManifoldModel sp = instantiate({"symprod_s2", 0, "", {}});
  GradedClass diag = local_density(Operator::Dolbeault, sp, 1, 0, 1, nullptr);
  const FixedComponent& y = sp.strata[1][0];
  GradedClass want = y.constant(Cyclotomic(Rational(1, 2))) +
                     GradedClass::symbol(1, 2, 0).scaled(Cyclotomic(Rational(1, 2)));
  CHECK(diag == want);
  CHECK(integrate(y, diag) == Cyclotomic(1));
}

TEST_CASE("densities at the identity reduce to todd and ahat classes") {
  ManifoldModel m = instantiate({"football", 5, "", {}});
  const FixedComponent& s2 = m.strata[0][0];
  GradedClass x = GradedClass::symbol(1, 2, 0);
  CHECK(local_density(Operator::Dolbeault, m, 0, 0, 0, nullptr) ==
        series_apply(todd_root_series(2), x));
  CHECK(local_density(Operator::Spin, m, 0, 0, 0, nullptr) ==
        series_apply(ahat_root_series(2), x));
  CHECK(integrate(s2, local_density(Operator::Dolbeault, m, 0, 0, 0, nullptr)) ==
        Cyclotomic(1));
}

TEST_CASE("integration rules") {
  ManifoldModel m = instantiate({"football", 2, "", {}});
  const FixedComponent& s2 = m.strata[0][0];
  GradedClass e = GradedClass::symbol(1, 2, 0);
  CHECK(integrate(s2, e) == Cyclotomic(2));  // the stored fundamental class
  CHECK(integrate(s2, s2.constant(Cyclotomic(5))) == Cyclotomic(0));  // no top part
  const FixedComponent& pole = m.strata[1][0];
  CHECK(integrate(pole, pole.constant(Cyclotomic::root(8, 1))) == Cyclotomic::root(8, 1));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbindex/oracle.hpp"

using namespace orbindex;

namespace {

Cyclotomic weight_sum(unsigned n, long j, int k) {
  // sum of lambda^i for i = 0..k at lambda = zeta_n^j, written out directly
  Cyclotomic acc(0);
  for (long i = 0; i <= k; ++i) acc += Cyclotomic::root(n, i * j);
  return acc;
}

}  // namespace

TEST_CASE("kernel characters of twisted sphere operators") {
  ManifoldModel f3 = instantiate({"football", 3, "", {}});
  ClassFunction chi = kernel_character(f3, Operator::Dolbeault, TwistSpec::parse("O:4"));
  // generator value: 1 + zeta_3 + zeta_3^2 + 1 + zeta_3 = 1 + zeta_3
  CHECK(chi.at_element(1) == Cyclotomic(1) + Cyclotomic::root(3, 1));
  CHECK(chi.at_element(1) == weight_sum(3, 1, 4));
  CHECK(chi.at_element(0) == Cyclotomic(5));

  // no cohomology at k = -1
  ClassFunction zero = kernel_character(f3, Operator::Dolbeault, TwistSpec::parse("O:-1"));
  for (unsigned g = 0; g < 3; ++g) CHECK(zero.at_element(g) == Cyclotomic(0));
  // dual weights at k <= -2
  ClassFunction dual = kernel_character(f3, Operator::Dolbeault, TwistSpec::parse("O:-2"));
  CHECK(dual.at_element(0) == Cyclotomic(-1));
  CHECK(dual.at_element(1) == -Cyclotomic::root(3, -1));
}

TEST_CASE("torus deRham character from the rotation on cohomology") {
  ManifoldModel t4 = instantiate({"torusrot", 4, "", {}});
  ClassFunction chi = kernel_character(t4, Operator::DeRham, TwistSpec::trivial());
  // 1 - (zeta_4 + zeta_4^{-1}) + 1 = 2 at the quarter turn
  CHECK(chi.at_element(1) == Cyclotomic(2));
  CHECK(chi.at_element(2) == Cyclotomic(4));  // 1 - (-1 + -1) + 1
  CHECK(chi.at_element(0) == Cyclotomic(0));
}

TEST_CASE("averages realize the invariant-subspace index") {
  ManifoldModel f3 = instantiate({"football", 3, "", {}});
  // (1/3)(5 + (1 + zeta_3) + (1 + zeta_3^2)) = 2
  CHECK(lefschetz_average(f3, Operator::Dolbeault, TwistSpec::parse("O:4"),
                          f3.group.rho_by_name("trivial")) == Rational(2));
  ManifoldModel sp = instantiate({"symprod_s2", 0, "", {}});
  CHECK(lefschetz_average(sp, Operator::Dolbeault, TwistSpec::trivial(),
                          sp.group.rho_by_name("trivial")) == Rational(1));
  ManifoldModel f2 = instantiate({"football", 2, "", {}});
  CHECK(lefschetz_average(f2, Operator::DeRham, TwistSpec::trivial(),
                          f2.group.rho_by_name("trivial")) == Rational(2));
  CHECK(lefschetz_average(f2, Operator::Spin, TwistSpec::trivial(),
                          f2.group.rho_by_name("w:1")) == Rational(0));
}

TEST_CASE("averaging the regular representation recovers the identity value") {
  for (const ModelSpec& spec :
       {ModelSpec{"football", 4, "", {}}, ModelSpec{"torusrot", 6, "", {}},
        ModelSpec{"symprod_s2", 0, "", {}}}) {
    ManifoldModel m = instantiate(spec);
    for (Operator op : {Operator::DeRham, Operator::Dolbeault}) {
      if (!m.supports(op)) continue;
      Rational avg = lefschetz_average(m, op, TwistSpec::trivial(),
                                       m.group.rho_by_name("regular"));
      Cyclotomic at_e = closed_form_L(m, op, TwistSpec::trivial(), 0);
      CHECK(Cyclotomic(avg) == at_e);
    }
  }
}

TEST_CASE("deRham averages give the euler characteristic of the quotient") {
  // every football and torus quotient in the catalog is a sphere; the p1
  // quotient is the torus itself
  for (unsigned n = 1; n <= 6; ++n) {
    ManifoldModel m = instantiate({"football", n, "", {}});
    CHECK(lefschetz_average(m, Operator::DeRham, TwistSpec::trivial(),
                            m.group.rho_by_name("trivial")) == Rational(2));
  }
  for (unsigned n : {2u, 3u, 4u, 6u}) {
    ManifoldModel m = instantiate({"torusrot", n, "", {}});
    CHECK(lefschetz_average(m, Operator::DeRham, TwistSpec::trivial(),
                            m.group.rho_by_name("trivial")) == Rational(2));
  }
  ManifoldModel p1 = instantiate({"wallpaper", 0, "p1", {}});
  CHECK(lefschetz_average(p1, Operator::DeRham, TwistSpec::trivial(),
                          p1.group.rho_by_name("trivial")) == Rational(0));
}

TEST_CASE("classical lefschetz values count fixed sets") {
  ManifoldModel f5 = instantiate({"football", 5, "", {}});
  for (unsigned g = 1; g < 5; ++g) {
    CHECK(closed_form_L(f5, Operator::DeRham, TwistSpec::trivial(), g) == Cyclotomic(2));
  }
  CHECK(closed_form_L(f5, Operator::DeRham, TwistSpec::trivial(), 0) == Cyclotomic(2));
  // identity value of the twisted sphere operator: dim H^0 = k + 1
  CHECK(closed_form_L(f5, Operator::Dolbeault, TwistSpec::parse("O:4"), 0) == Cyclotomic(5));
  ManifoldModel t3 = instantiate({"torusrot", 3, "", {}});
  CHECK(closed_form_L(t3, Operator::DeRham, TwistSpec::trivial(), 0) == Cyclotomic(0));
}

TEST_CASE("character values are galois-coherent in the weight lists") {
  ManifoldModel f5 = instantiate({"football", 5, "", {}});
  ClassFunction chi = kernel_character(f5, Operator::Dolbeault, TwistSpec::parse("O:3"));
  for (unsigned k = 2; k < 5; ++k) {
    CHECK(chi.at_element(k) == chi.at_element(1).galois(k));
  }
}

TEST_CASE("oracle scope") {
  ManifoldModel f2 = instantiate({"football", 2, "", {}});
  CHECK_THROWS_AS(kernel_character(f2, Operator::DeRham, TwistSpec::parse("wt:1")),
                  UnsupportedTwist);
  ManifoldModel custom = f2;
  custom.family = "custom";
  custom.id = "custom";
  CHECK_THROWS_AS(kernel_character(custom, Operator::DeRham, TwistSpec::trivial()),
                  UnsupportedModel);
}

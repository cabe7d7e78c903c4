#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbindex/model_io.hpp"
#include "orbindex/oracle.hpp"
#include "orbindex/report.hpp"

using namespace orbindex;

namespace {

IndexReport run(const ManifoldModel& m, Operator op, const std::string& twist,
                const std::string& rho) {
  return index_by_elements(m, op, TwistSpec::parse(twist), m.group.rho_by_name(rho), {});
}

}  // namespace

TEST_CASE("pinned index values, element grouping") {
  ManifoldModel f2 = instantiate({"football", 2, "", {}});
  // averaging oracle written out by hand: (1/2)(chi(S^2) + chi(2 points)) = 2
  CHECK(Rational(1, 2) * (Rational(2) + Rational(2)) == Rational(2));
  IndexReport r = run(f2, Operator::DeRham, "O:0", "trivial");
  CHECK(r.total_integer == 2);
  REQUIRE(r.contributions.size() == 2);
  CHECK(r.contributions[0].value == Cyclotomic(1));  // (1/2) chi(S^2)
  CHECK(r.contributions[1].value == Cyclotomic(1));  // (1/2) chi({poles})

  CHECK(run(instantiate({"torusrot", 4, "", {}}), Operator::DeRham, "O:0", "trivial")
            .total_integer == 2);
  CHECK(run(instantiate({"football", 3, "", {}}), Operator::Dolbeault, "O:4", "trivial")
            .total_integer == 2);
}

TEST_CASE("pinned index values, cyclic grouping") {
  ManifoldModel p4 = instantiate({"wallpaper", 0, "p4", {}});
  IndexReport r = index_by_cyclic(p4, Operator::DeRham, TwistSpec::trivial(),
                                  p4.group.rho_by_name("trivial"), {});
  CHECK(r.total_integer == 2);
  ManifoldModel f6 = instantiate({"football", 6, "", {}});
  CHECK(index_by_cyclic(f6, Operator::Dolbeault, TwistSpec::trivial(),
                        f6.group.rho_by_name("trivial"), {})
            .total_integer == 1);
}

TEST_CASE("regular representation recovers the index upstairs") {
  ManifoldModel f2 = instantiate({"football", 2, "", {}});
  CHECK(run(f2, Operator::DeRham, "O:0", "regular").total_integer == 2);  // chi(S^2)
  ManifoldModel f3 = instantiate({"football", 3, "", {}});
  CHECK(run(f3, Operator::Dolbeault, "O:4", "regular").total_integer == 5);  // k + 1
}

TEST_CASE("spin indices vanish on the sphere for both lifts") {
  for (unsigned n = 1; n <= 6; ++n) {
    for (SpinLiftVariant lift : {SpinLiftVariant::Plus, SpinLiftVariant::Minus}) {
      ManifoldModel m = instantiate({"football", n, "", lift});
      for (const Representation& rho : m.group.irreducibles()) {
        IndexReport r = index_by_elements(m, Operator::Spin, TwistSpec::trivial(), rho, {});
        CHECK(r.total_integer == 0);
        // per-class contributions already vanish: both poles cancel
        for (const auto& c : r.contributions) CHECK(c.value.is_zero());
      }
    }
  }
}

TEST_CASE("grouping cross-check and oracle agreement") {
  for (const ModelSpec& spec :
       {ModelSpec{"football", 5, "", {}}, ModelSpec{"torusrot", 6, "", {}},
        ModelSpec{"wallpaper", 0, "p3", {}}, ModelSpec{"symprod_s2", 0, "", {}}}) {
    ManifoldModel m = instantiate(spec);
    for (const Representation& rho : m.group.irreducibles()) {
      IndexReport r = compute_checked(m, Operator::Dolbeault, TwistSpec::trivial(), rho,
                                      "byElements", {});
      CHECK(r.grouping_consistent == true);
      CHECK(r.is_integral);
      Rational oracle = lefschetz_average(m, Operator::Dolbeault, TwistSpec::trivial(), rho);
      CHECK(r.total_rational == oracle);
      CHECK_NOTHROW(r.require_verified());
    }
  }
}

TEST_CASE("uhat functionals carry the pinned stacky weights") {
  ManifoldModel f2 = instantiate({"football", 2, "", {}});
  // order-2 class: constants on the two poles, each 1/2
  UhatClass u = uhat_class(f2, Operator::Dolbeault, 1);
  REQUIRE(u.per_generator.count(1) == 1);
  const auto& comps = u.per_generator.at(1);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].at(Monomial{}) == Cyclotomic(Rational(1, 2)));
  CHECK(comps[1].at(Monomial{}) == Cyclotomic(Rational(1, 2)));
  // trivial class: the todd functional with stacky weight 1/2
  UhatClass u0 = uhat_class(f2, Operator::Dolbeault, 0);
  const auto& s2 = u0.per_generator.at(0)[0];
  CHECK(s2.at(Monomial{0}) == Cyclotomic(Rational(1, 2)));  // (1/2) integral of todd
  CHECK(s2.at(Monomial{1}) == Cyclotomic(1));               // (1/2) integral of t
}

TEST_CASE("uhat functionals on the product diagonal") {
  // density (1/2 + u/2) with reduced weight |C|/w = 1: both basis values 1
  ManifoldModel sp = instantiate({"symprod_s2", 0, "", {}});
  UhatClass u = uhat_class(sp, Operator::Dolbeault, 1);
  const auto& diag = u.per_generator.at(1)[0];
  CHECK(diag.at(Monomial{0}) == Cyclotomic(1));
  CHECK(diag.at(Monomial{1}) == Cyclotomic(1));
  // pairing with ch(O) = 1 picks the first value; the class total is half of
  // it, and the trivial class supplies the other 1/2 of the index 1
  IndexReport via_pairing = pair_twist(sp, Operator::Dolbeault, TwistSpec::trivial(),
                                       sp.group.rho_by_name("trivial"), {});
  CHECK(via_pairing.total_integer == 1);
  CHECK(via_pairing.contributions[0].value == Cyclotomic(Rational(1, 2)));
  CHECK(via_pairing.contributions[1].value == Cyclotomic(Rational(1, 2)));
}

TEST_CASE("pairing route agrees with direct twisting") {
  ManifoldModel f2 = instantiate({"football", 2, "", {}});
  IndexReport p = pair_twist(f2, Operator::Dolbeault, TwistSpec::trivial(),
                             f2.group.rho_by_name("trivial"), {});
  CHECK(p.total_integer == 1);
  // contribution split 1/2 + 1/2 between the trivial and order-2 classes
  CHECK(p.contributions[0].value == Cyclotomic(Rational(1, 2)));
  CHECK(p.contributions[1].value == Cyclotomic(Rational(1, 2)));

  ManifoldModel f3 = instantiate({"football", 3, "", {}});
  CHECK(pair_twist(f3, Operator::Dolbeault, TwistSpec::parse("O:4"),
                   f3.group.rho_by_name("trivial"), {})
            .total_integer == 2);
  // additivity: O(k) + O(k) doubles the answer
  IndexReport doubled = pair_twist(f3, Operator::Dolbeault, TwistSpec::parse("sum:O:4,O:4"),
                                   f3.group.rho_by_name("trivial"), {});
  CHECK(doubled.total_integer == 4);
  for (const ModelSpec& spec :
       {ModelSpec{"football", 4, "", {}}, ModelSpec{"torusrot", 3, "", {}}}) {
    ManifoldModel m = instantiate(spec);
    for (const std::string& twist : {"O:0", "wt:1"}) {
      for (const Representation& rho : m.group.irreducibles()) {
        TwistSpec t = TwistSpec::parse(twist);
        CHECK(pair_twist(m, Operator::Dolbeault, t, rho, {}).total_value ==
              index_by_elements(m, Operator::Dolbeault, t, rho, {}).total_value);
      }
    }
  }
}

TEST_CASE("abstract pairing over a finite group") {
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  auto cf = [&](const FiniteGroup& g, std::vector<Cyclotomic> values) {
    ClassFunction f;
    f.group = &g;
    f.by_class = std::move(values);
    return f;
  };
  ClassFunction a = cf(z2, {Cyclotomic(1), Cyclotomic(-1)});
  ClassFunction e = cf(z2, {Cyclotomic(1), Cyclotomic(1)});
  CHECK(pair_inform(z2, {a}, {e}, Representation::trivial(z2)) == Cyclotomic(0));
  CHECK(pair_inform(z2, {a}, {e}, Representation::character_of_cyclic(z2, 1)) ==
        Cyclotomic(1));
  FiniteGroup z1 = FiniteGroup::cyclic(1);
  ClassFunction three = cf(z1, {Cyclotomic(3)});
  ClassFunction five = cf(z1, {Cyclotomic(5)});
  CHECK(pair_inform(z1, {three}, {five}, Representation::trivial(z1)) == Cyclotomic(15));
  CHECK_THROWS_AS(pair_inform(z2, {a, a}, {e}, Representation::trivial(z2)), BasisMismatch);
}

TEST_CASE("decomposition reconstructs the catalog models") {
  ManifoldModel f2 = instantiate({"football", 2, "", {}});
  DecomposeResult d = decompose(f2, Operator::Dolbeault, {});
  CHECK(d.classes.size() == 2);
  CHECK(d.reconstruction_ok);
  CHECK(d.spanning_ok);
  CHECK(d.weyl_equivariant);
  // the family includes the degree bundles through |k| <= 2
  bool has_o2 = false;
  for (const auto& f : d.family) has_o2 |= (f == "O:2");
  CHECK(has_o2);

  // one class per subgroup of Z/4: trivial, the half turn, the full group
  ManifoldModel t4 = instantiate({"torusrot", 4, "", {}});
  DecomposeResult dt = decompose(t4, Operator::DeRham, {});
  CHECK(dt.classes.size() == 3);
  CHECK(dt.reconstruction_ok);

  ManifoldModel sp = instantiate({"symprod_s2", 0, "", {}});
  DecomposeResult ds = decompose(sp, Operator::Dolbeault, {});
  CHECK(ds.classes.size() == 2);
  CHECK(ds.reconstruction_ok);
  CHECK(ds.spanning_ok);
}

TEST_CASE("fourier inversion against the closed-form values") {
  ManifoldModel f4 = instantiate({"football", 4, "", {}});
  const FiniteGroup& h = f4.group.comparison_group();
  std::vector<Representation> irreps = f4.group.irreducibles();
  TwistSpec t = TwistSpec::parse("O:2");
  std::vector<Rational> idx;
  for (const Representation& rho : irreps) {
    idx.push_back(index_by_elements(f4, Operator::Dolbeault, t, rho, {}).total_rational);
  }
  for (unsigned g = 0; g < h.order(); ++g) {
    Cyclotomic recovered(0);
    for (size_t i = 0; i < irreps.size(); ++i) {
      recovered += Cyclotomic(idx[i]) * irreps[i].trace(h.inv(g));
    }
    CHECK(recovered == closed_form_L(f4, Operator::Dolbeault, t, g));
  }
}

TEST_CASE("alarms fire on corrupted custom models") {
  // halving one pole weight breaks integrality
  std::string bad_weight =
      "orbindex-model 1\n"
      "id corrupted\n"
      "group cyclic 2\n"
      "dim 2\n"
      "operators dolbeault\n"
      "class Z1 order 1 embed 0\n"
      "component S2 dim 2 weight 2\n"
      "symbols t\n"
      "tangent t\n"
      "integral t=2\n"
      "class Z2 order 2 embed 1\n"
      "component poleA dim 0 weight 4\n"
      "normal - 1/2\n"
      "integral 1=1\n"
      "component poleB dim 0 weight 2\n"
      "normal - 1/2\n"
      "integral 1=1\n";
  ManifoldModel m = parse_model(bad_weight);
  IndexReport r = index_by_elements(m, Operator::Dolbeault, TwistSpec::trivial(),
                                    m.group.rho_by_name("trivial"), {});
  CHECK(!r.is_integral);
  CHECK(r.status == "alarm:NonIntegral");
  CHECK_THROWS_AS(r.require_verified(), NonIntegral);

  // a falsely merged generator orbit keeps the conjugate contribution from
  // cancelling the imaginary part: the total stays irrational
  std::string bad_eigen =
      "orbindex-model 1\n"
      "id irrational\n"
      "group cyclic 3\n"
      "dim 2\n"
      "operators dolbeault\n"
      "class Z1 order 1 embed 0\n"
      "component S2 dim 2 weight 3\n"
      "symbols t\n"
      "tangent t\n"
      "integral t=2\n"
      "class Z3 order 3 embed 1\n"
      "worbit 1 2\n"
      "component lonely dim 0 weight 3\n"
      "normal - 1/3\n"
      "integral 1=1\n";
  ManifoldModel m2 = parse_model(bad_eigen);
  IndexReport r2 = index_by_elements(m2, Operator::Dolbeault, TwistSpec::trivial(),
                                     m2.group.rho_by_name("trivial"), {});
  CHECK(!r2.is_rational);
  CHECK(r2.status == "alarm:NotRational");
  CHECK_THROWS_AS(r2.require_verified(), NotRational);
}

TEST_CASE("reports serialize deterministically and round-trip") {
  ManifoldModel f3 = instantiate({"football", 3, "", {}});
  IndexReport r = compute_checked(f3, Operator::Dolbeault, TwistSpec::parse("O:4"),
                                  f3.group.rho_by_name("trivial"), "byElements", {});
  r.oracle = 2;
  r.matches_oracle = true;
  std::string a = report_to_json(r);
  std::string b = report_to_json(r);
  CHECK(a == b);  // byte-identical
  IndexReport parsed = report_from_json(a);
  CHECK(parsed.model_id == r.model_id);
  CHECK(parsed.total_value == r.total_value);
  CHECK(parsed.contributions.size() == r.contributions.size());
  for (size_t i = 0; i < r.contributions.size(); ++i) {
    CHECK(parsed.contributions[i].label == r.contributions[i].label);
    CHECK(parsed.contributions[i].value == r.contributions[i].value);
  }
  CHECK(parsed.oracle == r.oracle);
  CHECK(report_to_json(parsed) == a);  // emit(parse(emit)) = emit
}

TEST_CASE("unsupported combinations are rejected") {
  ManifoldModel t4 = instantiate({"torusrot", 4, "", {}});
  CHECK_THROWS_AS(run(t4, Operator::Spin, "O:0", "trivial"), UnsupportedParams);
  ManifoldModel f2 = instantiate({"football", 2, "", {}});
  CHECK_THROWS_AS(run(f2, Operator::DeRham, "wt:1", "trivial"), UnsupportedTwist);
  CHECK_THROWS_AS(run(f2, Operator::Spin, "O:1", "trivial"), UnsupportedTwist);
  CHECK_THROWS_AS(run(t4, Operator::Dolbeault, "O:2", "trivial"), UnsupportedTwist);
}

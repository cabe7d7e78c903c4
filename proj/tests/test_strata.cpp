#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "orbindex/engine.hpp"
#include "orbindex/model_io.hpp"

using namespace orbindex;

namespace {

const FixedComponent* find_component(const ManifoldModel& m, unsigned ci,
                                     const std::string& label) {
  for (const auto& y : m.strata[ci]) {
    if (y.label == label) return &y;
  }
  return nullptr;
}

unsigned class_of_order(const ManifoldModel& m, unsigned d) {
  const auto& classes = m.group.cyclic_classes();
  for (unsigned i = 0; i < classes.size(); ++i) {
    if (classes[i].order == d) return i;
  }
  REQUIRE(false);
  return 0;
}

}  // namespace

TEST_CASE("catalog lists the model families") {
  auto entries = catalog();
  std::set<std::string> families;
  for (const auto& e : entries) families.insert(e.family);
  CHECK(families.count("football") == 1);
  CHECK(families.count("torusrot") == 1);
  CHECK(families.count("symprod_s2") == 1);
  CHECK(families.count("wallpaper") == 1);
  CHECK_NOTHROW(instantiate({"football", 12, "", {}}));
  CHECK_THROWS_AS(instantiate({"football", 13, "", {}}), UnsupportedParams);
  CHECK_THROWS_AS(instantiate({"torusrot", 5, "", {}}), UnsupportedParams);
  CHECK_THROWS_AS(instantiate({"nonsense", 1, "", {}}), UnsupportedParams);
}

TEST_CASE("every catalog model validates") {
  std::vector<ManifoldModel> all;
  for (unsigned n = 1; n <= 12; ++n) {
    all.push_back(instantiate({"football", n, "", SpinLiftVariant::Plus}));
    all.push_back(instantiate({"football", n, "", SpinLiftVariant::Minus}));
  }
  for (unsigned n : {2u, 3u, 4u, 6u}) all.push_back(instantiate({"torusrot", n, "", {}}));
  all.push_back(instantiate({"symprod_s2", 0, "", SpinLiftVariant::Plus}));
  all.push_back(instantiate({"symprod_s2", 0, "", SpinLiftVariant::Minus}));
  for (const std::string& w : WallpaperGroup::names()) {
    all.push_back(instantiate({"wallpaper", 0, w, {}}));
  }
  for (const auto& m : all) {
    auto bad = validate_model(m);
    for (const auto& b : bad) INFO(b);
    CHECK(bad.empty());
  }
}

TEST_CASE("torus fixed point counts") {
  // the element of order 2 fixes 4 points, order 3: 3, order 4: 2, order 6: 1
  std::map<unsigned, unsigned> want = {{2, 4}, {3, 3}, {4, 2}, {6, 1}};
  for (const auto& [n, count] : want) {
    ManifoldModel m = instantiate({"torusrot", n, "", {}});
    unsigned ci = class_of_order(m, n);
    unsigned total = 0;
    for (const auto& y : m.strata[ci]) {
      // one representative per orbit; recover the orbit size from the weight
      total += n / y.weight;
    }
    CHECK(total == count);
  }
  // torusrot(2): the involution fixes 4 points, each its own orbit
  ManifoldModel t2 = instantiate({"torusrot", 2, "", {}});
  CHECK(t2.strata[class_of_order(t2, 2)].size() == 4);
  // torusrot(4): the quarter turn fixes 2 points
  ManifoldModel t4 = instantiate({"torusrot", 4, "", {}});
  CHECK(t4.strata[class_of_order(t4, 4)].size() == 2);
}

TEST_CASE("football pole eigenvalues") {
  ManifoldModel m = instantiate({"football", 4, "", {}});
  unsigned ci = class_of_order(m, 4);
  const FixedComponent* a = find_component(m, ci, "poleA");
  const FixedComponent* b = find_component(m, ci, "poleB");
  REQUIRE(a != nullptr);
  REQUIRE(b != nullptr);
  CHECK(a->normal[0].eigenvalue == RootOfUnity(1, 4));
  CHECK(b->normal[0].eigenvalue == RootOfUnity(3, 4));
  CHECK(a->weight == 4);
  // eigenvalues for g^k are the k-th powers
  CHECK(a->normal[0].eigenvalue.pow(3) == b->normal[0].eigenvalue);
}

TEST_CASE("strata refine along subgroup inclusion") {
  ManifoldModel m = instantiate({"torusrot", 6, "", {}});
  WallpaperGroup w = WallpaperGroup::by_name("p6");
  const auto& classes = m.group.cyclic_classes();
  for (unsigned i = 0; i < classes.size(); ++i) {
    for (unsigned j = 0; j < classes.size(); ++j) {
      unsigned di = classes[i].order, dj = classes[j].order;
      if (dj < 2 || di <= dj || di % dj != 0) continue;
      std::set<Vec2q> smaller;
      for (const Vec2q& p : w.centers_of(6 / dj)) smaller.insert(p);
      for (const auto& y : m.strata[i]) {
        REQUIRE(y.point.has_value());
        CHECK(smaller.count(*y.point) == 1);
      }
      // eigenvalue data restricts by powers: zeta_di^(di/dj) = zeta_dj
      CHECK(RootOfUnity(1, di).pow(di / dj) == RootOfUnity(1, dj));
    }
  }
}

TEST_CASE("symprod swap stratum") {
  ManifoldModel m = instantiate({"symprod_s2", 0, "", {}});
  unsigned ci = class_of_order(m, 2);
  REQUIRE(m.strata[ci].size() == 1);
  const FixedComponent& diag = m.strata[ci][0];
  CHECK(diag.dim == 2);
  // normal bundle is the tangent line with the swap acting by -1
  CHECK(diag.normal.size() == 1);
  CHECK(diag.normal[0].symbol == 0);
  CHECK(diag.normal[0].eigenvalue == RootOfUnity(1, 2));
  CHECK(diag.integral_of(Monomial{1}) == Rational(2));
}

TEST_CASE("line bundle data matches the holomorphic weight count") {
  // sum_p mu_p / (1 - lambda_p^{-1}) = sum_{j=0}^{k} lambda^j on every football
  for (unsigned n : {2u, 3u, 5u, 6u}) {
    ManifoldModel m = instantiate({"football", n, "", {}});
    for (int k = 0; k <= 4; ++k) {
      TwistSpec t;
      t.atoms.push_back(TwistAtom{k, 0});
      EquivariantBundle bundle = m.bundle(t);
      const auto& classes = m.group.cyclic_classes();
      for (unsigned ci = 0; ci < classes.size(); ++ci) {
        if (classes[ci].order == 1) continue;
        for (unsigned exp : classes[ci].gen_exponents) {
          Cyclotomic fixed_point_sum(0);
          for (unsigned yi = 0; yi < m.strata[ci].size(); ++yi) {
            const auto& y = m.strata[ci][yi];
            Cyclotomic mu = bundle.roots[ci][yi][0].mu.pow(exp).to_cyclotomic();
            Cyclotomic lam = y.normal[0].eigenvalue.pow(exp).to_cyclotomic();
            fixed_point_sum += mu / (Cyclotomic(1) - lam.inverse());
          }
          Cyclotomic lambda_a =
              m.strata[ci][0].normal[0].eigenvalue.pow(exp).to_cyclotomic();
          Cyclotomic weights(0);
          for (int j = 0; j <= k; ++j) weights += lambda_a.pow(j);
          CHECK(fixed_point_sum == weights);
        }
      }
    }
  }
}

TEST_CASE("bundle rules") {
  ManifoldModel f3 = instantiate({"football", 3, "", {}});
  // k = 0: trivial bundle, all mu = 1
  EquivariantBundle o0 = f3.bundle(TwistSpec::trivial());
  for (const auto& per_class : o0.roots) {
    for (const auto& per_comp : per_class) {
      for (const auto& r : per_comp) CHECK(r.mu.is_one());
    }
  }
  // direct sums concatenate root data
  EquivariantBundle pm = f3.bundle(TwistSpec::parse("sum:O:1,O:-1"));
  CHECK(pm.rank == 2);
  CHECK(pm.roots[0][0].size() == 2);
  CHECK(pm.roots[0][0][0].coeffs[0] == Rational(1, 2));
  CHECK(pm.roots[0][0][1].coeffs[0] == Rational(-1, 2));
  // degree twists are rejected where undefined
  ManifoldModel t4 = instantiate({"torusrot", 4, "", {}});
  CHECK_THROWS_AS(t4.bundle(TwistSpec::parse("O:1")), UnsupportedTwist);
  CHECK_NOTHROW(t4.bundle(TwistSpec::parse("wt:3")));
}

TEST_CASE("twist grammar") {
  CHECK(TwistSpec::parse("O:4").atoms.size() == 1);
  CHECK(TwistSpec::parse("O:4").atoms[0].degree == 4);
  CHECK(TwistSpec::parse("O:-2").atoms[0].degree == -2);
  CHECK(TwistSpec::parse("wt:3").atoms[0].weight == 3);
  TwistSpec prod = TwistSpec::parse("O:2*wt:1");
  CHECK(prod.atoms[0].degree == 2);
  CHECK(prod.atoms[0].weight == 1);
  TwistSpec sum = TwistSpec::parse("sum:O:1,O:-1,wt:2");
  CHECK(sum.atoms.size() == 3);
  CHECK(TwistSpec::parse("O:0").is_trivial());
  CHECK(TwistSpec::parse("none").is_trivial());
  CHECK(TwistSpec::parse(sum.str()).str() == sum.str());
  CHECK_THROWS_AS(TwistSpec::parse("Q:1"), ParseError);
}

TEST_CASE("validation failures are named") {
  ManifoldModel m = instantiate({"football", 2, "", {}});
  // a normal direction must be genuinely rotated
  ManifoldModel broken = m;
  broken.strata[1][0].normal[0].eigenvalue = RootOfUnity(0, 1);
  auto bad = validate_model(broken);
  REQUIRE(!bad.empty());
  CHECK(bad.front().find("eigenvalue 1") != std::string::npos);
  CHECK_THROWS_AS(require_valid(broken), ValidationFailure);
  // lifts must square to the eigenvalue
  ManifoldModel broken2 = m;
  broken2.strata[1][0].normal[0].lift = RootOfUnity(1, 8);
  bad = validate_model(broken2);
  REQUIRE(!bad.empty());
  CHECK(bad.front().find("square") != std::string::npos);
  // weights must be divisible by the class order
  ManifoldModel broken3 = m;
  broken3.strata[1][0].weight = 3;
  CHECK(!validate_model(broken3).empty());
}

TEST_CASE("model files round-trip") {
  for (const ModelSpec& spec :
       {ModelSpec{"football", 3, "", {}}, ModelSpec{"torusrot", 4, "", {}},
        ModelSpec{"symprod_s2", 0, "", {}}, ModelSpec{"wallpaper", 0, "p6", {}}}) {
    ManifoldModel m = instantiate(spec);
    std::string text = dump_model(m);
    ManifoldModel parsed = parse_model(text);
    CHECK(validate_model(parsed).empty());
    CHECK(dump_model(parsed) == text);  // byte-stable round trip
    // the ingested model computes the same untwisted indices
    for (Operator op : {Operator::DeRham, Operator::Dolbeault}) {
      if (!m.supports(op)) continue;
      Representation rho_a = m.group.rho_by_name("trivial");
      Representation rho_b = parsed.group.rho_by_name("trivial");
      IndexReport a = index_by_elements(m, op, TwistSpec::trivial(), rho_a, {});
      IndexReport b = index_by_elements(parsed, op, TwistSpec::trivial(), rho_b, {});
      CHECK(a.total_value == b.total_value);
    }
  }
  CHECK_THROWS_AS(parse_model("not a model\n"), ParseError);
  CHECK_THROWS_AS(parse_model("orbindex-model 1\nid x\ngroup cyclic 4\ndim 2\n"
                              "class Z3 order 3 embed 1\n"),
                  ParseError);  // embed order mismatch
}

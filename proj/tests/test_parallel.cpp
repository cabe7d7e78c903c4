#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbindex/oracle.hpp"
#include "orbindex/parallel.hpp"
#include "orbindex/report.hpp"
#include "orbindex/verify.hpp"

using namespace orbindex;

TEST_CASE("parallel evaluation is bit-identical to the serial reference") {
  std::vector<ManifoldModel> models;
  for (unsigned n : {3u, 4u, 6u}) models.push_back(instantiate({"football", n, "", {}}));
  models.push_back(instantiate({"torusrot", 6, "", {}}));
  models.push_back(instantiate({"wallpaper", 0, "p4", {}}));
  models.push_back(instantiate({"symprod_s2", 0, "", {}}));
  EngineOptions serial{false}, parallel{true};
  for (const ManifoldModel& m : models) {
    for (Operator op : {Operator::DeRham, Operator::Dolbeault, Operator::Spin}) {
      if (!m.supports(op)) continue;
      std::vector<TwistSpec> twists = {TwistSpec::trivial()};
      if (op == Operator::Dolbeault && m.degree_twists) {
        twists.push_back(TwistSpec::parse("O:2"));
        twists.push_back(TwistSpec::parse("sum:O:1,O:-1"));
      }
      for (const TwistSpec& t : twists) {
        for (const Representation& rho : m.group.irreducibles()) {
          IndexReport a = compute_checked(m, op, t, rho, "byElements", serial);
          IndexReport b = compute_checked(m, op, t, rho, "byElements", parallel);
          CHECK(report_to_json(a) == report_to_json(b));
        }
      }
    }
  }
}

TEST_CASE("parallel decomposition matches the serial one") {
  ManifoldModel f4 = instantiate({"football", 4, "", {}});
  DecomposeResult a = decompose(f4, Operator::Dolbeault, EngineOptions{false});
  DecomposeResult b = decompose(f4, Operator::Dolbeault, EngineOptions{true});
  CHECK(a.reconstruction_ok == b.reconstruction_ok);
  CHECK(a.spanning_ok == b.spanning_ok);
  REQUIRE(a.classes.size() == b.classes.size());
  for (size_t i = 0; i < a.classes.size(); ++i) {
    CHECK(a.classes[i].per_generator.size() == b.classes[i].per_generator.size());
    for (const auto& [k, comps] : a.classes[i].per_generator) {
      const auto& other = b.classes[i].per_generator.at(k);
      REQUIRE(comps.size() == other.size());
      for (size_t yi = 0; yi < comps.size(); ++yi) {
        for (const auto& [m, v] : comps[yi]) {
          CHECK(other[yi].at(m) == v);
        }
      }
    }
  }
}

TEST_CASE("exceptions propagate out of parallel regions") {
  ManifoldModel t4 = instantiate({"torusrot", 4, "", {}});
  CHECK_THROWS_AS(index_by_elements(t4, Operator::Spin, TwistSpec::trivial(),
                                    t4.group.rho_by_name("trivial"), EngineOptions{true}),
                  UnsupportedParams);
}

TEST_CASE("the parallel verification suite passes like the serial one") {
  auto serial = run_acceptance_suite(EngineOptions{false});
  auto parallel = run_acceptance_suite(EngineOptions{true});
  REQUIRE(serial.size() == parallel.size());
  for (size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].pass);
    CHECK(parallel[i].pass == serial[i].pass);
    CHECK(parallel[i].failures.size() == serial[i].failures.size());
  }
}

#include "orbindex/verify.hpp"

#include <algorithm>

#include "orbindex/oracle.hpp"
#include "orbindex/parallel.hpp"
#include "orbindex/series.hpp"

namespace orbindex {

namespace {

struct Case {
  const ManifoldModel* model;
  Operator op;
  TwistSpec twist;
  Representation rho;
};

std::vector<TwistSpec> dolbeault_twists(const ManifoldModel& m) {
  std::vector<TwistSpec> out;
  out.push_back(TwistSpec::trivial());
  if (m.degree_twists) {
    for (int k = -3; k <= 3; ++k) {
      if (k == 0) continue;
      TwistSpec t;
      t.atoms.push_back(TwistAtom{k, 0});
      out.push_back(t);
    }
  }
  unsigned n = m.group.comparison_group().order();
  for (unsigned w = 1; w < n; ++w) {
    TwistSpec t;
    t.atoms.push_back(TwistAtom{0, w});
    out.push_back(t);
  }
  return out;
}

long require_long(const Rational& r, const std::string& what) {
  if (!r.fits_long()) throw NonIntegral(what + " = " + r.str());
  return r.to_long();
}

// Independent Taylor oracle for the root series, from the Bernoulli
// recursion sum_{j<=m} C(m+1, j) B_j = 0.
std::vector<Rational> bernoulli_numbers(unsigned top) {
  std::vector<Rational> b(top + 1, Rational(0));
  b[0] = Rational(1);
  std::vector<std::vector<Rational>> choose(top + 2, std::vector<Rational>(top + 2, Rational(0)));
  for (unsigned i = 0; i < top + 2; ++i) {
    choose[i][0] = Rational(1);
    for (unsigned j = 1; j <= i; ++j) {
      choose[i][j] = choose[i - 1][j - 1] + (j <= i - 1 ? choose[i - 1][j] : Rational(0));
    }
  }
  for (unsigned m = 1; m <= top; ++m) {
    Rational acc(0);
    for (unsigned j = 0; j < m; ++j) acc += choose[m + 1][j] * b[j];
    b[m] = -acc / choose[m + 1][m];
  }
  return b;
}

}  // namespace

std::vector<CheckResult> run_acceptance_suite(const EngineOptions& opts) {
  std::vector<CheckResult> results;

  // --- shared model set -------------------------------------------------
  std::vector<ManifoldModel> models;
  std::vector<ManifoldModel> spin_minus;  // same models with the other lift
  for (unsigned n = 1; n <= 6; ++n) {
    models.push_back(instantiate({"football", n, "", SpinLiftVariant::Plus}));
    spin_minus.push_back(instantiate({"football", n, "", SpinLiftVariant::Minus}));
  }
  for (unsigned n : {2u, 3u, 4u, 6u}) models.push_back(instantiate({"torusrot", n, "", {}}));
  models.push_back(instantiate({"symprod_s2", 0, "", SpinLiftVariant::Plus}));
  spin_minus.push_back(instantiate({"symprod_s2", 0, "", SpinLiftVariant::Minus}));
  for (const std::string& w : WallpaperGroup::names()) {
    models.push_back(instantiate({"wallpaper", 0, w, {}}));
  }

  auto case_list = [&]() {
    std::vector<Case> cases;
    auto add_model_cases = [&](const ManifoldModel& m, bool spin_only) {
      std::vector<Representation> irreps = m.group.irreducibles();
      for (Operator op : {Operator::DeRham, Operator::Dolbeault, Operator::Spin}) {
        if (!m.supports(op)) continue;
        if (spin_only && op != Operator::Spin) continue;
        std::vector<TwistSpec> twists =
            op == Operator::Dolbeault ? dolbeault_twists(m)
                                      : std::vector<TwistSpec>{TwistSpec::trivial()};
        for (const TwistSpec& t : twists) {
          for (const Representation& rho : irreps) cases.push_back(Case{&m, op, t, rho});
        }
      }
    };
    for (const ManifoldModel& m : models) add_model_cases(m, false);
    for (const ManifoldModel& m : spin_minus) add_model_cases(m, true);
    return cases;
  }();

  // --- 1: engine equals oracle, both groupings, whole catalog ------------
  // --- 4: element contributions aggregate to the cyclic ones -------------
  {
    CheckResult equality;
    equality.name = "1 orbifold-index equality (elements = cyclic = kernel average)";
    CheckResult grouping;
    grouping.name = "4 grouping invariance (aggregated element classes = cyclic classes)";
    std::vector<std::string> eq_fail(case_list.size()), gr_fail(case_list.size());
    parallel_for(case_list.size(), opts.parallel, [&](size_t i) {
      const Case& c = case_list[i];
      std::string tag = c.model->id + " " + operator_name(c.op) + " " + c.twist.str() +
                        " rho=" + c.rho.name();
      try {
        IndexReport report = compute_checked(*c.model, c.op, c.twist, c.rho, "byElements", {});
        long oracle = require_long(lefschetz_average(*c.model, c.op, c.twist, c.rho), tag);
        if (!report.is_rational || !report.is_integral) {
          eq_fail[i] = tag + ": total not an integer (" + report.total_value.str() + ")";
        } else if (report.total_rational != Rational(oracle)) {
          eq_fail[i] = tag + ": engine " + report.total_rational.str() + " != oracle " +
                       std::to_string(oracle);
        }
        if (!report.grouping_consistent.value_or(false)) {
          gr_fail[i] = tag + ": element/cyclic groupings disagree";
        }
      } catch (const Error& e) {
        eq_fail[i] = tag + ": " + e.what();
      }
    });
    for (auto& f : eq_fail) {
      if (!f.empty()) equality.failures.push_back(std::move(f));
    }
    for (auto& f : gr_fail) {
      if (!f.empty()) grouping.failures.push_back(std::move(f));
    }
    equality.pass = equality.failures.empty();
    equality.summary = std::to_string(case_list.size()) + " cases";
    grouping.pass = grouping.failures.empty();
    grouping.summary = std::to_string(case_list.size()) + " cases";
    results.push_back(std::move(equality));
    results.push_back(std::move(grouping));
  }

  // --- 2: spot values -----------------------------------------------------
  {
    CheckResult spot;
    spot.name = "2 spot values";
    auto expect = [&](const ManifoldModel& m, Operator op, const std::string& twist,
                      const std::string& rho, long want) {
      IndexReport r = index_by_elements(m, op, TwistSpec::parse(twist),
                                        m.group.rho_by_name(rho), {});
      if (!r.is_integral || r.total_rational != Rational(want)) {
        spot.failures.push_back(m.id + " " + operator_name(op) + " " + twist + " " + rho +
                                ": got " + r.total_value.str() + ", want " +
                                std::to_string(want));
      }
    };
    expect(models[2], Operator::Dolbeault, "O:4", "trivial", 2);   // football(3)
    expect(models[8], Operator::DeRham, "O:0", "trivial", 2);      // torusrot(4)
    ManifoldModel p4 = instantiate({"wallpaper", 0, "p4", {}});
    expect(p4, Operator::DeRham, "O:0", "trivial", 2);
    expect(models[10], Operator::Dolbeault, "O:0", "trivial", 1);  // symprod
    for (size_t i = 0; i < 6; ++i) {
      for (const Representation& rho : models[i].group.irreducibles()) {
        for (const ManifoldModel* m : {&models[i], &spin_minus[i]}) {
          IndexReport r = index_by_elements(*m, Operator::Spin, TwistSpec::trivial(), rho, {});
          if (!r.is_integral || r.total_rational != Rational(0)) {
            spot.failures.push_back(m->id + " spin rho=" + rho.name() + ": got " +
                                    r.total_value.str() + ", want 0");
          }
        }
      }
    }
    spot.pass = spot.failures.empty();
    spot.summary = "pinned values across the catalog";
    results.push_back(std::move(spot));
  }

  // --- 3: wallpaper totals equal the finite torus quotients ----------------
  {
    CheckResult crystal;
    crystal.name = "3 crystallographic/finite consistency (p_n = torusrot(n))";
    unsigned count = 0;
    for (unsigned n : {2u, 3u, 4u, 6u}) {
      ManifoldModel torus = instantiate({"torusrot", n, "", {}});
      ManifoldModel plane = instantiate({"wallpaper", 0, wallpaper_name_for_order(n), {}});
      std::vector<Representation> irreps = torus.group.irreducibles();
      for (Operator op : {Operator::DeRham, Operator::Dolbeault}) {
        std::vector<TwistSpec> twists =
            op == Operator::Dolbeault ? dolbeault_twists(torus)
                                      : std::vector<TwistSpec>{TwistSpec::trivial()};
        for (const TwistSpec& t : twists) {
          for (const Representation& rho : irreps) {
            ++count;
            IndexReport a = index_by_elements(torus, op, t, rho, {});
            Representation rho_plane = plane.group.rho_by_name(rho.name());
            IndexReport b = index_by_elements(plane, op, t, rho_plane, {});
            if (a.total_value != b.total_value) {
              crystal.failures.push_back("n=" + std::to_string(n) + " " + operator_name(op) +
                                         " " + t.str() + " rho=" + rho.name() + ": torus " +
                                         a.total_value.str() + " != plane " +
                                         b.total_value.str());
            }
          }
        }
      }
    }
    crystal.pass = crystal.failures.empty();
    crystal.summary = std::to_string(count) + " shared cases";
    results.push_back(std::move(crystal));
  }

  // --- 5: twisting coherence ------------------------------------------------
  {
    CheckResult twisting;
    twisting.name = "5 twisting coherence (pairing route, additivity, ch multiplicativity)";
    for (const ManifoldModel& m : models) {
      if (!m.supports(Operator::Dolbeault)) continue;
      Representation triv = Representation::trivial(m.group.comparison_group());
      std::vector<TwistSpec> twists = dolbeault_twists(m);
      for (const TwistSpec& t : twists) {
        IndexReport via_pairing = pair_twist(m, Operator::Dolbeault, t, triv, {});
        IndexReport direct = index_by_elements(m, Operator::Dolbeault, t, triv, {});
        if (via_pairing.total_value != direct.total_value) {
          twisting.failures.push_back(m.id + " " + t.str() + ": pairing " +
                                      via_pairing.total_value.str() + " != direct " +
                                      direct.total_value.str());
        }
      }
      // additivity of direct sums
      std::vector<std::pair<std::string, std::string>> pairs = {{"O:0", "wt:1"}};
      if (m.degree_twists) pairs = {{"O:1", "O:-1"}, {"O:2", "wt:1"}, {"O:1", "O:1"}};
      for (const auto& [s1, s2] : pairs) {
        if (m.group.comparison_group().order() == 1 &&
            (s1.rfind("wt", 0) == 0 || s2.rfind("wt", 0) == 0)) {
          continue;
        }
        TwistSpec t1 = TwistSpec::parse(s1), t2 = TwistSpec::parse(s2);
        TwistSpec sum;
        sum.atoms = t1.atoms.empty() ? std::vector<TwistAtom>{TwistAtom{}} : t1.atoms;
        for (const TwistAtom& a : (t2.atoms.empty() ? std::vector<TwistAtom>{TwistAtom{}}
                                                    : t2.atoms)) {
          sum.atoms.push_back(a);
        }
        IndexReport rs = index_by_elements(m, Operator::Dolbeault, sum, triv, {});
        IndexReport r1 = index_by_elements(m, Operator::Dolbeault, t1, triv, {});
        IndexReport r2 = index_by_elements(m, Operator::Dolbeault, t2, triv, {});
        if (rs.total_value != r1.total_value + r2.total_value) {
          twisting.failures.push_back(m.id + " " + sum.str() + ": sum not additive");
        }
      }
      // multiplicativity of the equivariant chern character under tensor
      std::vector<std::pair<TwistAtom, TwistAtom>> tensor_pairs;
      unsigned n = m.group.comparison_group().order();
      if (m.degree_twists) {
        tensor_pairs.push_back({TwistAtom{1, 0}, TwistAtom{1, 0}});
        tensor_pairs.push_back({TwistAtom{2, 0}, TwistAtom{-1, 1 % n}});
      }
      tensor_pairs.push_back({TwistAtom{0, 1 % n}, TwistAtom{0, (n > 2 ? 2u : 1u) % n}});
      for (const auto& [a, b] : tensor_pairs) {
        TwistSpec ta, tb, tab;
        ta.atoms = {a};
        tb.atoms = {b};
        tab.atoms = {TwistAtom{a.degree + b.degree, (a.weight + b.weight) % n}};
        EquivariantBundle ea = m.bundle(ta), eb = m.bundle(tb), eab = m.bundle(tab);
        const auto& classes = m.group.cyclic_classes();
        for (size_t ci = 0; ci < classes.size(); ++ci) {
          for (unsigned k : classes[ci].gen_exponents) {
            for (unsigned yi = 0; yi < m.strata[ci].size(); ++yi) {
              const FixedComponent& y = m.strata[ci][yi];
              GradedClass lhs = equiv_chern(eab, ci, yi, k, y);
              GradedClass rhs =
                  equiv_chern(ea, ci, yi, k, y) * equiv_chern(eb, ci, yi, k, y);
              if (lhs != rhs) {
                twisting.failures.push_back(m.id + "/" + classes[ci].label + "/" + y.label +
                                            ": ch not multiplicative under tensor");
              }
            }
          }
        }
      }
    }
    twisting.pass = twisting.failures.empty();
    twisting.summary = "pairing, direct sums, tensor products";
    results.push_back(std::move(twisting));
  }

  // --- 6: decomposition, Weyl equivariance, Fourier inversion ---------------
  {
    CheckResult decomp;
    decomp.name = "6 decomposition (reconstruction, W-equivariance, Fourier inversion)";
    for (const ManifoldModel& m : models) {
      for (Operator op : {Operator::DeRham, Operator::Dolbeault, Operator::Spin}) {
        if (!m.supports(op)) continue;
        DecomposeResult d = decompose(m, op, opts);
        if (!d.reconstruction_ok || !d.spanning_ok || !d.weyl_equivariant) {
          for (const auto& f : d.failures) decomp.failures.push_back(f);
          if (d.failures.empty()) decomp.failures.push_back(m.id + ": decomposition failed");
        }
      }
      // Fourier inversion against the closed-form Lefschetz values
      const FiniteGroup& h = m.group.comparison_group();
      std::vector<Representation> irreps = m.group.irreducibles();
      std::vector<TwistSpec> twists = {TwistSpec::trivial()};
      if (m.degree_twists) twists.push_back(TwistSpec::parse("O:1"));
      for (Operator op : {Operator::DeRham, Operator::Dolbeault, Operator::Spin}) {
        if (!m.supports(op)) continue;
        for (const TwistSpec& t : twists) {
          if (op != Operator::Dolbeault && !t.is_trivial()) continue;
          std::vector<Rational> idx;
          for (const Representation& rho : irreps) {
            IndexReport r = index_by_elements(m, op, t, rho, {});
            if (!r.is_rational) {
              decomp.failures.push_back(m.id + ": non-rational index in inversion");
              continue;
            }
            idx.push_back(r.total_rational);
          }
          for (unsigned g = 0; g < h.order(); ++g) {
            Cyclotomic recovered(0);
            for (size_t ri = 0; ri < irreps.size(); ++ri) {
              recovered += Cyclotomic(idx[ri]) * irreps[ri].trace(h.inv(g));
            }
            Cyclotomic want = closed_form_L(m, op, t, g);
            if (recovered != want) {
              decomp.failures.push_back(m.id + " " + operator_name(op) + " " + t.str() +
                                        " g=" + h.element_name(g) + ": inversion " +
                                        recovered.str() + " != L " + want.str());
            }
          }
        }
      }
    }
    decomp.pass = decomp.failures.empty();
    decomp.summary = "all catalog models and supported operators";
    results.push_back(std::move(decomp));
  }

  // --- 7: series library -----------------------------------------------------
  {
    CheckResult series;
    series.name = "7 series library (Taylor oracle to degree 6, normal-factor identity)";
    std::vector<Rational> b = bernoulli_numbers(8);
    Rational fact(1);
    std::vector<Rational> factorial{Rational(1)};
    for (long i = 1; i <= 8; ++i) {
      fact *= Rational(i);
      factorial.push_back(fact);
    }
    Series todd = todd_root_series(7);
    for (unsigned nn = 0; nn <= 6; ++nn) {
      Rational want = nn == 1 ? Rational(1, 2) : b[nn] / factorial[nn];
      if (todd.c[nn] != Cyclotomic(want)) {
        series.failures.push_back("todd coefficient x^" + std::to_string(nn) + ": got " +
                                  todd.c[nn].str() + ", want " + want.str());
      }
    }
    Series ahat = ahat_root_series(7);
    for (unsigned nn = 0; nn <= 6; ++nn) {
      Rational want(0);
      if (nn % 2 == 0) {
        unsigned k = nn / 2;
        Rational two_pow(1);
        for (unsigned i = 0; i < nn; ++i) two_pow *= Rational(2);  // 2^{2k}
        Rational four_pow(1);
        for (unsigned i = 0; i < k; ++i) four_pow *= Rational(4);
        want = (Rational(2) - two_pow) * b[nn] / (four_pow * factorial[nn]);
      }
      if (ahat.c[nn] != Cyclotomic(want)) {
        series.failures.push_back("ahat coefficient x^" + std::to_string(nn) + ": got " +
                                  ahat.c[nn].str() + ", want " + want.str());
      }
    }
    if (todd.c[2] != Cyclotomic(Rational(1, 12)) || ahat.c[2] != Cyclotomic(Rational(-1, 24))) {
      series.failures.push_back("pinned degree-2 coefficients wrong");
    }
    // spin/dolbeault normal factor identity for all eigenvalues in mu_{<=12}
    unsigned len = 7;
    for (unsigned n = 1; n <= 12; ++n) {
      for (unsigned k = 0; k < n; ++k) {
        RootOfUnity lambda(k, n);
        if (lambda.is_one()) continue;
        Series dolb = dolbeault_normal_series(lambda, len);
        auto [s1, s2] = lambda.sqrts();
        for (const RootOfUnity& s : {s1, s2}) {
          Series sconst = Series::zero(len);
          sconst.c[0] = s.to_cyclotomic();
          Series lhs = series_mul(
              series_mul(spin_normal_series(s, len), series_exp(Rational(1, 2), len)), sconst);
          bool same = true;
          for (unsigned i = 0; i < len; ++i) {
            if (lhs.c[i] != dolb.c[i]) same = false;
          }
          if (!same) {
            series.failures.push_back("normal identity fails at lambda = " + lambda.str() +
                                      ", lift " + s.str());
          }
        }
      }
    }
    series.pass = series.failures.empty();
    series.summary = "coefficients to degree 6, eigenvalues through order 12";
    results.push_back(std::move(series));
  }

  // --- 8: group machinery ------------------------------------------------------
  {
    CheckResult groups;
    groups.name = "8 group machinery (class counts, signatures, p-bar duality)";
    WallpaperGroup p4 = WallpaperGroup::by_name("p4");
    if (p4.rotation_classes().size() + 1 != 8) {
      groups.failures.push_back("p4 finite-order class count != 8");
    }
    if (p4.cyclic_classes().size() + 1 != 6) {
      groups.failures.push_back("p4 cyclic class count != 6");
    }
    std::map<std::string, std::vector<unsigned>> signatures = {
        {"p2", {2, 2, 2, 2}}, {"p3", {3, 3, 3}}, {"p4", {4, 4, 2}}, {"p6", {6, 3, 2}}};
    for (const auto& [name, want] : signatures) {
      auto sig = WallpaperGroup::by_name(name).signature();
      if (sig != want) {
        std::string got;
        for (unsigned s : sig) got += std::to_string(s) + " ";
        groups.failures.push_back(name + " signature {" + got + "} wrong");
      }
    }
    // |p-bar^{-1}(C)| = number of Weyl orbits on gen(C), over assorted groups
    std::vector<GroupModel> gms;
    for (unsigned n = 1; n <= 12; ++n) gms.push_back(GroupModel::from_finite(FiniteGroup::cyclic(n)));
    gms.push_back(GroupModel::from_finite(FiniteGroup::parse_permutations("(0 1)\n(0 1 2)\n")));
    for (const std::string& w : WallpaperGroup::names()) {
      gms.push_back(GroupModel::from_wallpaper(WallpaperGroup::by_name(w)));
    }
    for (const GroupModel& gm : gms) {
      const auto& classes = gm.cyclic_classes();
      std::vector<unsigned> preimage(classes.size(), 0);
      for (const UElementClass& e : gm.element_classes()) preimage[e.cyclic_index]++;
      for (size_t i = 0; i < classes.size(); ++i) {
        if (preimage[i] != classes[i].weyl_orbits.size()) {
          groups.failures.push_back("class " + classes[i].label + ": " +
                                    std::to_string(preimage[i]) + " element classes vs " +
                                    std::to_string(classes[i].weyl_orbits.size()) +
                                    " Weyl orbits");
        }
      }
    }
    groups.pass = groups.failures.empty();
    groups.summary = "p4 counts, orbifold signatures, class-count duality";
    results.push_back(std::move(groups));
  }

  std::stable_sort(results.begin(), results.end(),
                   [](const CheckResult& a, const CheckResult& b) {
                     return a.name.substr(0, 1) < b.name.substr(0, 1);
                   });
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.pass) return false;
  }
  return true;
}

}  // namespace orbindex

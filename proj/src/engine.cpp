#include "orbindex/engine.hpp"

#include <algorithm>

#include "orbindex/linalg.hpp"
#include "orbindex/parallel.hpp"

namespace orbindex {

namespace {

// Twist policy: dolbeault takes any bundle the model defines; the others
// only run untwisted.
const EquivariantBundle* prepare_twist(const ManifoldModel& model, Operator op,
                                       const TwistSpec& twist,
                                       std::optional<EquivariantBundle>& storage) {
  if (!model.supports(op)) {
    throw UnsupportedParams(operator_name(op) + " is not supported on " + model.id);
  }
  if (op != Operator::Dolbeault) {
    if (!twist.is_trivial()) {
      throw UnsupportedTwist(operator_name(op) + " runs untwisted only");
    }
    return nullptr;
  }
  storage = model.bundle(twist);
  return &*storage;
}

// (1/weight) sum over components of the integrated density: the integral
// over the quotient [M^C / Z_G(C)] for the element c^exponent.
Cyclotomic stacky_integral_full(const ManifoldModel& model, Operator op,
                                unsigned class_index, unsigned exponent,
                                const EquivariantBundle* twist) {
  Cyclotomic acc(0);
  const auto& comps = model.strata.at(class_index);
  for (unsigned yi = 0; yi < comps.size(); ++yi) {
    GradedClass density = local_density(op, model, class_index, yi, exponent, twist);
    Cyclotomic integral = integrate(comps[yi], density);
    acc += integral * Cyclotomic(Rational(1, static_cast<long>(comps[yi].weight)));
  }
  return acc;
}

// The same integral taken over [M^C / (Z_G(C)/C)]: each weight shrinks by
// |C| because the subgroup itself acts trivially on its fixed set.
Cyclotomic stacky_integral_reduced(const ManifoldModel& model, Operator op,
                                   unsigned class_index, unsigned exponent,
                                   const EquivariantBundle* twist) {
  unsigned order = model.group.cyclic_classes().at(class_index).order;
  return stacky_integral_full(model, op, class_index, exponent, twist) *
         Cyclotomic(Rational(static_cast<long>(order)));
}

void finalize_totals(IndexReport& report) {
  Cyclotomic total(0);
  for (const auto& c : report.contributions) total += c.value;
  report.total_value = total;
  report.is_rational = total.is_rational();
  if (report.is_rational) {
    report.total_rational = total.to_rational();
    report.is_integral = report.total_rational.is_integer();
    if (report.is_integral && report.total_rational.fits_long()) {
      report.total_integer = report.total_rational.to_long();
    }
  }
  if (!report.is_rational) {
    report.status = "alarm:NotRational";
  } else if (!report.is_integral) {
    report.status = "alarm:NonIntegral";
  }
}

}  // namespace

void IndexReport::require_verified() const {
  if (!is_rational) throw NotRational(model_id + " " + op + " total " + total_value.str());
  if (!is_integral) throw NonIntegral(model_id + " " + op + " total " + total_rational.str());
  if (grouping_consistent.has_value() && !*grouping_consistent) {
    throw GroupingMismatch(model_id + " " + op);
  }
  if (matches_oracle.has_value() && !*matches_oracle) {
    throw OracleMismatch(model_id + " " + op + ": engine disagrees with the kernel oracle");
  }
}

IndexReport index_by_elements(const ManifoldModel& model, Operator op,
                              const TwistSpec& twist, const Representation& rho,
                              const EngineOptions& opts) {
  std::optional<EquivariantBundle> storage;
  const EquivariantBundle* bundle = prepare_twist(model, op, twist, storage);
  const auto& elements = model.group.element_classes();
  IndexReport report;
  report.model_id = model.id;
  report.op = operator_name(op);
  report.twist = twist.str();
  report.rho = rho.name();
  report.grouping = "byElements";
  report.contributions.resize(elements.size());
  parallel_for(elements.size(), opts.parallel, [&](size_t i) {
    const UElementClass& e = elements[i];
    Cyclotomic tr = model.group.trace(rho, e.cyclic_index, e.exponent);
    Cyclotomic value =
        tr * stacky_integral_full(model, op, e.cyclic_index, e.exponent, bundle);
    report.contributions[i] = Contribution{e.label, std::move(value)};
  });
  finalize_totals(report);
  return report;
}

IndexReport index_by_cyclic(const ManifoldModel& model, Operator op,
                            const TwistSpec& twist, const Representation& rho,
                            const EngineOptions& opts) {
  std::optional<EquivariantBundle> storage;
  const EquivariantBundle* bundle = prepare_twist(model, op, twist, storage);
  const auto& classes = model.group.cyclic_classes();
  IndexReport report;
  report.model_id = model.id;
  report.op = operator_name(op);
  report.twist = twist.str();
  report.rho = rho.name();
  report.grouping = "byCyclic";
  report.contributions.resize(classes.size());
  parallel_for(classes.size(), opts.parallel, [&](size_t i) {
    const UCyclicClass& c = classes[i];
    Cyclotomic acc(0);
    for (const auto& orbit : c.weyl_orbits) {
      unsigned k = *std::min_element(orbit.begin(), orbit.end());
      Cyclotomic tr = model.group.trace(rho, static_cast<unsigned>(i), k);
      acc += stacky_integral_reduced(model, op, static_cast<unsigned>(i), k, bundle) * tr;
    }
    acc *= Cyclotomic(Rational(1, static_cast<long>(c.order)));
    report.contributions[i] = Contribution{c.label, std::move(acc)};
  });
  finalize_totals(report);
  return report;
}

IndexReport compute_checked(const ManifoldModel& model, Operator op,
                            const TwistSpec& twist, const Representation& rho,
                            const std::string& grouping, const EngineOptions& opts) {
  IndexReport by_el = index_by_elements(model, op, twist, rho, opts);
  IndexReport by_cy = index_by_cyclic(model, op, twist, rho, opts);
  bool consistent = by_el.total_value == by_cy.total_value;
  // contribution-group-wise: element classes aggregated along p-bar must
  // reproduce the per-class cyclic contributions
  const auto& elements = model.group.element_classes();
  const auto& classes = model.group.cyclic_classes();
  std::vector<Cyclotomic> aggregated(classes.size(), Cyclotomic(0));
  for (size_t i = 0; i < elements.size(); ++i) {
    aggregated[elements[i].cyclic_index] += by_el.contributions[i].value;
  }
  for (size_t i = 0; i < classes.size(); ++i) {
    if (aggregated[i] != by_cy.contributions[i].value) consistent = false;
  }
  IndexReport report = grouping == "byCyclic" ? std::move(by_cy) : std::move(by_el);
  report.grouping_consistent = consistent;
  if (!consistent && report.status == "ok") report.status = "alarm:GroupingMismatch";
  return report;
}

UhatClass uhat_class(const ManifoldModel& model, Operator op, unsigned class_index) {
  if (!model.supports(op)) {
    throw UnsupportedParams(operator_name(op) + " is not supported on " + model.id);
  }
  const UCyclicClass& c = model.group.cyclic_classes().at(class_index);
  const auto& comps = model.strata.at(class_index);
  UhatClass u;
  u.class_index = class_index;
  u.label = c.label;
  u.weyl_orbits = c.weyl_orbits;
  for (unsigned k : c.gen_exponents) {
    std::vector<std::map<Monomial, Cyclotomic>> per_comp(comps.size());
    for (unsigned yi = 0; yi < comps.size(); ++yi) {
      const FixedComponent& y = comps[yi];
      GradedClass density = local_density(op, model, class_index, yi, k, nullptr);
      Rational scale(static_cast<long>(c.order), static_cast<long>(y.weight));
      for (const Monomial& m : y.monomial_basis()) {
        GradedClass mono(static_cast<unsigned>(y.symbols.size()), y.dim);
        mono.add_term(m, Cyclotomic(1));
        Cyclotomic value = integrate(y, density * mono) * Cyclotomic(scale);
        per_comp[yi][m] = std::move(value);
      }
    }
    u.per_generator[k] = std::move(per_comp);
  }
  return u;
}

IndexReport pair_twist(const ManifoldModel& model, Operator op, const TwistSpec& twist,
                       const Representation& rho, const EngineOptions& opts) {
  std::optional<EquivariantBundle> storage;
  const EquivariantBundle* bundle = prepare_twist(model, op, twist, storage);
  const auto& classes = model.group.cyclic_classes();
  IndexReport report;
  report.model_id = model.id;
  report.op = operator_name(op);
  report.twist = twist.str();
  report.rho = rho.name();
  report.grouping = "byCyclic";
  report.contributions.resize(classes.size());
  parallel_for(classes.size(), opts.parallel, [&](size_t i) {
    const UCyclicClass& c = classes[i];
    UhatClass u = uhat_class(model, op, static_cast<unsigned>(i));
    const auto& comps = model.strata[i];
    Cyclotomic acc(0);
    for (const auto& orbit : c.weyl_orbits) {
      unsigned k = *std::min_element(orbit.begin(), orbit.end());
      Cyclotomic pairing(0);
      for (unsigned yi = 0; yi < comps.size(); ++yi) {
        GradedClass ch = bundle != nullptr
                             ? equiv_chern(*bundle, static_cast<unsigned>(i), yi, k, comps[yi])
                             : comps[yi].constant(Cyclotomic(1));
        const auto& functional = u.per_generator.at(k).at(yi);
        for (const auto& [mono, coeff] : ch.terms()) {
          auto it = functional.find(mono);
          if (it != functional.end()) pairing += coeff * it->second;
        }
      }
      acc += pairing * model.group.trace(rho, static_cast<unsigned>(i), k);
    }
    acc *= Cyclotomic(Rational(1, static_cast<long>(c.order)));
    report.contributions[i] = Contribution{c.label, std::move(acc)};
  });
  finalize_totals(report);
  return report;
}

Cyclotomic pair_inform(const FiniteGroup& h, const std::vector<ClassFunction>& homology_side,
                       const std::vector<ClassFunction>& cohomology_side,
                       const Representation& rho) {
  if (homology_side.size() != cohomology_side.size()) {
    throw BasisMismatch("homology/cohomology basis sizes differ");
  }
  size_t nclasses = h.conjugacy_classes().size();
  ClassFunction product;
  product.group = &h;
  product.by_class.assign(nclasses, Cyclotomic(0));
  for (size_t b = 0; b < homology_side.size(); ++b) {
    const ClassFunction& a = homology_side[b];
    const ClassFunction& e = cohomology_side[b];
    if (a.group->order() != h.order() || e.group->order() != h.order() ||
        a.by_class.size() != nclasses || e.by_class.size() != nclasses) {
      throw BasisMismatch("class data over a different group");
    }
    for (size_t cl = 0; cl < nclasses; ++cl) {
      product.by_class[cl] += a.by_class[cl] * e.by_class[cl];
    }
  }
  for (size_t cl = 0; cl < nclasses; ++cl) {
    unsigned rep = h.conjugacy_classes()[cl][0];
    product.by_class[cl] *= rho.trace(rep);
  }
  return epsilon_trivial(product);
}

namespace {

// Pairing vectors of one bundle against the functional basis: the monomial
// coefficients of ch(c^k, E) on every (class, generator, component).
std::vector<Cyclotomic> chern_coordinates(const ManifoldModel& model,
                                          const EquivariantBundle& bundle) {
  std::vector<Cyclotomic> row;
  const auto& classes = model.group.cyclic_classes();
  for (size_t i = 0; i < classes.size(); ++i) {
    for (unsigned k : classes[i].gen_exponents) {
      const auto& comps = model.strata[i];
      for (unsigned yi = 0; yi < comps.size(); ++yi) {
        GradedClass ch = equiv_chern(bundle, static_cast<unsigned>(i), yi, k, comps[yi]);
        for (const Monomial& m : comps[yi].monomial_basis()) {
          row.push_back(ch.coefficient(m));
        }
      }
    }
  }
  return row;
}

std::vector<TwistSpec> product_family(const ManifoldModel& model, int max_degree) {
  std::vector<TwistSpec> out;
  unsigned n = model.group.comparison_group().order();
  int lo = model.degree_twists ? -max_degree : 0;
  int hi = model.degree_twists ? max_degree : 0;
  for (int j = lo; j <= hi; ++j) {
    for (unsigned w = 0; w < n; ++w) {
      TwistSpec t;
      if (j != 0 || w != 0) t.atoms.push_back(TwistAtom{j, w});
      out.push_back(t);
    }
  }
  return out;
}

}  // namespace

DecomposeResult decompose(const ManifoldModel& model, Operator op,
                          const EngineOptions& opts) {
  DecomposeResult result;
  const auto& classes = model.group.cyclic_classes();
  result.classes.resize(classes.size());
  parallel_for(classes.size(), opts.parallel, [&](size_t i) {
    result.classes[i] = uhat_class(model, op, static_cast<unsigned>(i));
  });

  // Weyl equivariance: functionals of generators in one orbit agree up to
  // the induced permutation, so their value multisets coincide.
  for (const UhatClass& u : result.classes) {
    for (const auto& orbit : u.weyl_orbits) {
      std::vector<std::vector<Cyclotomic>> value_lists;
      for (unsigned k : orbit) {
        std::vector<Cyclotomic> values;
        for (const auto& comp : u.per_generator.at(k)) {
          for (const auto& [m, v] : comp) values.push_back(v);
        }
        value_lists.push_back(std::move(values));
      }
      for (size_t a = 1; a < value_lists.size(); ++a) {
        // exact multiset comparison by elimination
        std::vector<Cyclotomic> left = value_lists[0], right = value_lists[a];
        bool ok = left.size() == right.size();
        for (const Cyclotomic& v : left) {
          if (!ok) break;
          auto it = std::find(right.begin(), right.end(), v);
          if (it == right.end()) {
            ok = false;
          } else {
            right.erase(it);
          }
        }
        if (!ok) {
          result.weyl_equivariant = false;
          result.failures.push_back(u.label + ": functionals not Weyl-equivariant");
        }
      }
    }
  }

  // Reconstruction over the spanning family, through the pairing route.
  {
    Operator pair_op = op;
    Representation triv = Representation::trivial(model.group.comparison_group());
    std::vector<TwistSpec> family =
        pair_op == Operator::Dolbeault ? product_family(model, 2)
                                       : std::vector<TwistSpec>{TwistSpec::trivial()};
    std::vector<std::string> fails(family.size());
    parallel_for(family.size(), opts.parallel, [&](size_t fi) {
      const TwistSpec& t = family[fi];
      IndexReport via_pairing = pair_twist(model, pair_op, t, triv, {});
      IndexReport direct = index_by_elements(model, pair_op, t, triv, {});
      if (via_pairing.total_value != direct.total_value) {
        fails[fi] = model.id + " " + t.str() + ": pairing " + via_pairing.total_value.str() +
                    " != direct " + direct.total_value.str();
      }
    });
    for (auto& f : fails) {
      if (!f.empty()) {
        result.reconstruction_ok = false;
        result.failures.push_back(std::move(f));
      }
    }
    for (const TwistSpec& t : family) result.family.push_back(t.str());

    // Spanning: the family's chern coordinates must already span everything
    // any admissible bundle can pair against.
    if (pair_op == Operator::Dolbeault) {
      std::vector<std::vector<Cyclotomic>> rows;
      for (const TwistSpec& t : family) {
        rows.push_back(chern_coordinates(model, model.bundle(t)));
      }
      unsigned family_rank = matrix_rank(rows);
      for (const TwistSpec& t : product_family(model, 5)) {
        rows.push_back(chern_coordinates(model, model.bundle(t)));
      }
      unsigned full_rank = matrix_rank(rows);
      if (family_rank != full_rank) {
        result.spanning_ok = false;
        result.failures.push_back(model.id + ": family rank " + std::to_string(family_rank) +
                                  " below reachable rank " + std::to_string(full_rank));
      }
    }
  }
  return result;
}

}  // namespace orbindex

#pragma once

#include <optional>

#include "orbindex/charform.hpp"
#include "orbindex/strata.hpp"

namespace orbindex {

struct EngineOptions {
  bool parallel = false;
};

struct Contribution {
  std::string label;
  Cyclotomic value;
};

struct IndexReport {
  std::string model_id;
  std::string op;
  std::string twist;
  std::string rho;
  std::string grouping;  // "byElements" | "byCyclic"
  std::vector<Contribution> contributions;
  Cyclotomic total_value;
  bool is_rational = false;
  bool is_integral = false;
  Rational total_rational;
  std::optional<long> total_integer;
  std::optional<long> oracle;
  std::optional<bool> matches_oracle;
  std::optional<bool> grouping_consistent;
  std::string status = "ok";

  // Throws NotRational / NonIntegral / GroupingMismatch per the verdicts.
  void require_verified() const;
};

// sum over finite-order element classes of tr rho(g) times the stacky
// integral of the local density over [M^g / Z_G(g)].
IndexReport index_by_elements(const ManifoldModel& model, Operator op,
                              const TwistSpec& twist, const Representation& rho,
                              const EngineOptions& opts = {});

// the same total grouped over cyclic subgroup classes: per class,
// (1/|C|) sum over Weyl orbit representatives of the stacky integral over
// [M^C / (Z_G(C)/C)] times tr rho.
IndexReport index_by_cyclic(const ManifoldModel& model, Operator op,
                            const TwistSpec& twist, const Representation& rho,
                            const EngineOptions& opts = {});

// Both groupings with the cross-checks filled in; `grouping` picks which
// contributions the report carries.
IndexReport compute_checked(const ManifoldModel& model, Operator op,
                            const TwistSpec& twist, const Representation& rho,
                            const std::string& grouping = "byElements",
                            const EngineOptions& opts = {});

// Homology class of the untwisted density of one cyclic class: for each
// generator exponent, the functional (component, monomial) -> value on the
// monomial basis. Weyl data is carried along for the equivariance check.
struct UhatClass {
  unsigned class_index = 0;
  std::string label;
  std::map<unsigned, std::vector<std::map<Monomial, Cyclotomic>>> per_generator;
  std::vector<std::vector<unsigned>> weyl_orbits;
};

UhatClass uhat_class(const ManifoldModel& model, Operator op, unsigned class_index);

// Twisted index through the cohomological pairing with the stored
// functionals; must agree with the directly twisted index.
IndexReport pair_twist(const ManifoldModel& model, Operator op, const TwistSpec& twist,
                       const Representation& rho, const EngineOptions& opts = {});

// Finite-group pairing of homology- and cohomology-valued class data over a
// common basis: epsilon(sum_b A_b * E_b * chi_rho).
Cyclotomic pair_inform(const FiniteGroup& h, const std::vector<ClassFunction>& homology_side,
                       const std::vector<ClassFunction>& cohomology_side,
                       const Representation& rho);

struct DecomposeResult {
  std::vector<UhatClass> classes;
  bool reconstruction_ok = true;
  bool spanning_ok = true;
  bool weyl_equivariant = true;
  std::vector<std::string> family;  // bundle descriptors used
  std::vector<std::string> failures;
};

// Emit every class functional and check that the spanning bundle family
// reconstructs all twisted indices through the pairing route.
DecomposeResult decompose(const ManifoldModel& model, Operator op,
                          const EngineOptions& opts = {});

}  // namespace orbindex

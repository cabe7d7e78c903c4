#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orbindex/graded.hpp"
#include "orbindex/group_model.hpp"

namespace orbindex {

enum class Operator { DeRham, Dolbeault, Spin };

std::string operator_name(Operator op);
Operator operator_parse(const std::string& name);

enum class SpinLiftVariant { Plus, Minus };

// One normal Chern root of a fixed component: optional curvature symbol,
// rotation eigenvalue of the class's canonical generator, and (when spin is
// supported) the chosen square root of that eigenvalue.
struct NormalEntry {
  int symbol = -1;  // index into FixedComponent::symbols, -1 if curvature-free
  RootOfUnity eigenvalue;
  std::optional<RootOfUnity> lift;
};

// Orbit representative of a connected component of a fixed set M^C, with
// everything needed to evaluate and integrate characteristic forms on it.
// `weight` is the stacky weight: this component contributes
// (1/weight) * integral to the integral over [M^C / Z_G(C)].
struct FixedComponent {
  std::string label;
  unsigned dim = 0;
  unsigned weight = 1;
  std::vector<std::string> symbols;       // degree-2 generators
  std::vector<unsigned> tangent_symbols;  // complex tangent roots
  std::vector<NormalEntry> normal;
  std::map<Monomial, Rational> integrals;  // fundamental class on top monomials
  std::optional<Vec2q> point;              // lattice coordinates where meaningful

  Rational integral_of(const Monomial& m) const;
  // All monomials of degree <= dim, in deterministic order.
  std::vector<Monomial> monomial_basis() const;
  GradedClass constant(const Cyclotomic& c) const {
    return GradedClass::constant(static_cast<unsigned>(symbols.size()), dim, c);
  }
};

// One Chern root of an equivariant bundle restricted to one component.
struct BundleRoot {
  std::vector<Rational> coeffs;  // per component symbol
  RootOfUnity mu;                // fiber eigenvalue at the canonical generator
};

struct EquivariantBundle {
  std::string descriptor;
  unsigned rank = 1;
  // [cyclic class][component] -> roots (rank entries each)
  std::vector<std::vector<std::vector<BundleRoot>>> roots;
};

// Twist grammar: "O:k", "wt:w", "O:k*wt:w", "sum:<atom>,<atom>,...".
struct TwistAtom {
  int degree = 0;
  unsigned weight = 0;
};
struct TwistSpec {
  std::vector<TwistAtom> atoms;  // direct summands; empty means trivial O:0

  static TwistSpec trivial() { return {}; }
  static TwistSpec parse(const std::string& text);
  std::string str() const;
  bool is_trivial() const;
  unsigned rank() const { return atoms.empty() ? 1 : static_cast<unsigned>(atoms.size()); }
};

class ManifoldModel {
 public:
  std::string id;
  std::string family;  // football | torusrot | symprod_s2 | wallpaper | custom
  unsigned param = 0;
  std::string wallpaper_name;
  GroupModel group;
  unsigned dimension = 2;
  std::set<Operator> operators;
  bool degree_twists = false;
  SpinLiftVariant lift = SpinLiftVariant::Plus;
  std::vector<std::vector<FixedComponent>> strata;  // parallel to group.cyclic_classes()

  bool supports(Operator op) const { return operators.count(op) > 0; }
  // Build the bundle data for a twist; throws UnsupportedTwist.
  EquivariantBundle bundle(const TwistSpec& twist) const;
};

struct ModelSpec {
  std::string family;
  unsigned n = 0;
  std::string wallpaper;
  SpinLiftVariant lift = SpinLiftVariant::Plus;
  std::string lattice;  // optional "re1;im1;re2;im2" basis for wallpaper
};

struct CatalogEntry {
  std::string family;
  std::string params;
  std::string operators;
  std::string twists;
};

std::vector<CatalogEntry> catalog();
ManifoldModel instantiate(const ModelSpec& spec);  // throws UnsupportedParams

// The wallpaper group with the same point group as torusrot(n).
std::string wallpaper_name_for_order(unsigned n);

// Every structural invariant of the fixed-point data; empty result = valid.
std::vector<std::string> validate_model(const ManifoldModel& m);
void require_valid(const ManifoldModel& m);  // throws ValidationFailure

}  // namespace orbindex

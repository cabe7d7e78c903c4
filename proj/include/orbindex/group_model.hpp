#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orbindex/finite_group.hpp"
#include "orbindex/wallpaper.hpp"

namespace orbindex {

// What the index formulas need to know about one conjugacy class of finite
// cyclic subgroups, independent of how the group is presented.
struct UCyclicClass {
  std::string label;
  unsigned order = 1;                              // |C|
  std::vector<unsigned> gen_exponents;             // units mod order ({0} for C = 1)
  std::vector<std::vector<unsigned>> weyl_orbits;  // partition of gen_exponents
  // Image of the canonical generator in the comparison group (an element id).
  unsigned comparison_generator = 0;
};

// One conjugacy class of finite-order elements, written as c^exponent for
// the canonical generator c of its cyclic class.
struct UElementClass {
  std::string label;
  unsigned cyclic_index = 0;
  unsigned exponent = 0;
};

// A finite group, a wallpaper group, or abstract class data from a model
// file. Representation traces always factor through the finite
// "comparison group" (the group itself, the point group, or a declared
// ambient cyclic group).
class GroupModel {
 public:
  enum class Kind { Finite, Wallpaper, Custom };

  static GroupModel from_finite(FiniteGroup g);
  static GroupModel from_wallpaper(WallpaperGroup w);
  static GroupModel custom(unsigned ambient_cyclic_order,
                           std::vector<UCyclicClass> classes);

  Kind kind() const { return kind_; }
  const FiniteGroup& comparison_group() const { return *comparison_; }
  std::shared_ptr<const FiniteGroup> comparison_ptr() const { return comparison_; }
  const WallpaperGroup& wallpaper() const;

  const std::vector<UCyclicClass>& cyclic_classes() const { return cyclic_; }
  const std::vector<UElementClass>& element_classes() const { return elements_; }

  // trace of rho at c_i^k.
  Cyclotomic trace(const Representation& rho, unsigned class_index, unsigned exponent) const;

  // Irreducible representations of the comparison group (cyclic only) and
  // named lookup: "trivial", "regular", "w:k".
  bool comparison_is_cyclic() const;
  std::vector<Representation> irreducibles() const;
  Representation rho_by_name(const std::string& name) const;

 private:
  Kind kind_ = Kind::Finite;
  std::shared_ptr<const FiniteGroup> comparison_;
  std::optional<WallpaperGroup> wallpaper_;
  std::vector<UCyclicClass> cyclic_;
  std::vector<UElementClass> elements_;
  // For cyclic comparison groups: element id generating it (1), 0 if trivial.
  unsigned cyclic_generator_ = 0;
};

}  // namespace orbindex

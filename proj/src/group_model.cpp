#include "orbindex/group_model.hpp"

#include <algorithm>
#include <numeric>

#include "orbindex/errors.hpp"

namespace orbindex {

GroupModel GroupModel::from_finite(FiniteGroup g) {
  GroupModel m;
  m.kind_ = Kind::Finite;
  m.comparison_ = std::make_shared<FiniteGroup>(std::move(g));
  const FiniteGroup& G = *m.comparison_;
  for (const auto& c : G.cyclic_subgroup_classes()) {
    UCyclicClass u;
    u.label = c.label;
    u.order = c.order;
    u.gen_exponents = c.gen_exponents;
    u.weyl_orbits = c.weyl_orbits;
    u.comparison_generator = c.generator;
    m.cyclic_.push_back(std::move(u));
  }
  for (const auto& cls : G.conjugacy_classes()) {
    unsigned rep = *std::min_element(cls.begin(), cls.end());
    auto [ci, exp] = G.cyclic_class_of_element(rep);
    UElementClass e;
    e.label = G.element_name(rep);
    e.cyclic_index = ci;
    e.exponent = exp;
    m.elements_.push_back(std::move(e));
  }
  return m;
}

GroupModel GroupModel::from_wallpaper(WallpaperGroup w) {
  GroupModel m;
  m.kind_ = Kind::Wallpaper;
  unsigned n = w.point_order();
  m.comparison_ = std::make_shared<FiniteGroup>(FiniteGroup::cyclic(n));
  m.comparison_->conjugacy_classes();  // materialize before concurrent reads
  m.wallpaper_ = std::move(w);
  const WallpaperGroup& W = *m.wallpaper_;

  UCyclicClass triv;
  triv.label = "Z1";
  triv.order = 1;
  triv.gen_exponents = {0};
  triv.weyl_orbits = {{0}};
  triv.comparison_generator = 0;
  m.cyclic_.push_back(std::move(triv));
  for (const auto& c : W.cyclic_classes()) {
    UCyclicClass u;
    u.label = c.label;
    u.order = c.order;
    for (unsigned k = 1; k < c.order; ++k) {
      if (std::gcd(k, c.order) == 1) u.gen_exponents.push_back(k);
    }
    for (unsigned k : u.gen_exponents) u.weyl_orbits.push_back({k});  // no reflections
    u.comparison_generator = n / c.order;
    m.cyclic_.push_back(std::move(u));
  }

  UElementClass id;
  id.label = "e";
  id.cyclic_index = 0;
  id.exponent = 0;
  m.elements_.push_back(std::move(id));
  for (const auto& rc : W.rotation_classes()) {
    unsigned d = n / std::gcd(rc.point_exponent, n);
    UElementClass e;
    e.label = rc.label;
    e.exponent = rc.point_exponent / (n / d);
    e.cyclic_index = 0;
    bool found = false;
    for (size_t i = 0; i < m.cyclic_.size(); ++i) {
      if (m.cyclic_[i].order != d) continue;
      // match by center through the label suffix "@(x,y)"
      auto at = m.cyclic_[i].label.find('@');
      auto rat = rc.label.find('@');
      if (at != std::string::npos && rat != std::string::npos &&
          m.cyclic_[i].label.substr(at) == rc.label.substr(rat)) {
        e.cyclic_index = static_cast<unsigned>(i);
        found = true;
        break;
      }
    }
    if (!found) throw ValidationFailure("rotation class without a cyclic class: " + rc.label);
    m.elements_.push_back(std::move(e));
  }
  return m;
}

GroupModel GroupModel::custom(unsigned ambient_cyclic_order,
                              std::vector<UCyclicClass> classes) {
  GroupModel m;
  m.kind_ = Kind::Custom;
  m.comparison_ = std::make_shared<FiniteGroup>(FiniteGroup::cyclic(ambient_cyclic_order));
  m.comparison_->conjugacy_classes();  // materialize before concurrent reads
  m.cyclic_ = std::move(classes);
  for (size_t i = 0; i < m.cyclic_.size(); ++i) {
    const auto& c = m.cyclic_[i];
    for (const auto& orbit : c.weyl_orbits) {
      if (orbit.empty()) throw ValidationFailure("empty weyl orbit");
      unsigned exp = *std::min_element(orbit.begin(), orbit.end());
      UElementClass e;
      e.label = c.order == 1 ? "e" : c.label + "^" + std::to_string(exp);
      e.cyclic_index = static_cast<unsigned>(i);
      e.exponent = exp;
      m.elements_.push_back(std::move(e));
    }
  }
  return m;
}

const WallpaperGroup& GroupModel::wallpaper() const {
  if (!wallpaper_) throw UnsupportedParams("not a wallpaper group model");
  return *wallpaper_;
}

Cyclotomic GroupModel::trace(const Representation& rho, unsigned class_index,
                             unsigned exponent) const {
  const UCyclicClass& c = cyclic_.at(class_index);
  unsigned element = comparison_->power(c.comparison_generator, exponent);
  return rho.trace(element);
}

bool GroupModel::comparison_is_cyclic() const {
  unsigned n = comparison_->order();
  for (unsigned a = 0; a < n; ++a) {
    if (comparison_->element_order(a) == n) return true;
  }
  return false;
}

std::vector<Representation> GroupModel::irreducibles() const {
  if (!comparison_is_cyclic()) {
    throw UnsupportedParams("irreducible enumeration implemented for cyclic groups only");
  }
  std::vector<Representation> out;
  unsigned n = comparison_->order();
  for (unsigned w = 0; w < n; ++w) {
    out.push_back(Representation::character_of_cyclic(*comparison_, w));
  }
  return out;
}

Representation GroupModel::rho_by_name(const std::string& name) const {
  if (name == "trivial") return Representation::trivial(*comparison_);
  if (name == "regular") return Representation::regular(*comparison_);
  if (name.rfind("w:", 0) == 0) {
    if (!comparison_is_cyclic()) {
      throw UnsupportedParams("character names w:k need a cyclic (point) group");
    }
    unsigned w = static_cast<unsigned>(std::stoul(name.substr(2)));
    return Representation::character_of_cyclic(*comparison_, w);
  }
  throw UnsupportedParams("unknown representation '" + name +
                          "' (use trivial, regular, or w:k)");
}

}  // namespace orbindex

#pragma once

#include <string>
#include <vector>

#include "orbindex/cyclotomic.hpp"

namespace orbindex {

// Finite group as an element list with a verified multiplication table.
// Element 0 is the identity. Construction checks closure, identity,
// inverses and associativity (Light's test over a generating set).
class FiniteGroup {
 public:
  static FiniteGroup cyclic(unsigned n);
  // Generators as image vectors on points 0..npoints-1.
  static FiniteGroup from_permutation_gens(const std::vector<std::vector<unsigned>>& gens);
  static FiniteGroup from_table(std::vector<std::vector<unsigned>> table,
                                std::vector<std::string> names = {});
  // One generator permutation per line, either cycle notation "(0 1 2)(3 4)"
  // or an image list "1 2 0".
  static FiniteGroup parse_permutations(const std::string& text);

  unsigned order() const { return n_; }
  unsigned mul(unsigned a, unsigned b) const { return table_[a][b]; }
  unsigned inv(unsigned a) const { return inverse_[a]; }
  unsigned power(unsigned a, long k) const;
  unsigned element_order(unsigned a) const;
  unsigned conjugate(unsigned h, unsigned a) const {  // h a h^{-1}
    return mul(mul(h, a), inv(h));
  }
  const std::string& element_name(unsigned a) const { return names_[a]; }

  const std::vector<std::vector<unsigned>>& conjugacy_classes() const;
  unsigned class_of(unsigned a) const;
  std::vector<unsigned> centralizer(unsigned a) const;

  // One conjugacy class of cyclic subgroups, with everything the index
  // formulas need about it.
  struct CyclicSubgroupClass {
    unsigned generator = 0;                 // canonical generator element
    unsigned order = 1;                     // |C|
    std::vector<unsigned> subgroup;         // sorted element ids
    std::vector<unsigned> gen_exponents;    // units mod order, increasing
    std::vector<unsigned> centralizer;      // Z_G(C)
    std::vector<unsigned> normalizer;       // N_G(C)
    std::vector<unsigned> weyl_exponents;   // image of N in (Z/order)^*
    std::vector<std::vector<unsigned>> weyl_orbits;  // partition of gen_exponents
    std::string label;
  };
  const std::vector<CyclicSubgroupClass>& cyclic_subgroup_classes() const;
  // Map an element to (cyclic class index, canonical generator exponent);
  // the exponent is the smallest over the Weyl orbit.
  std::pair<unsigned, unsigned> cyclic_class_of_element(unsigned g) const;

 private:
  FiniteGroup() = default;
  void finish_construction(const std::vector<unsigned>& generating_set);
  void compute_classes() const;
  void compute_cyclic_classes() const;

  unsigned n_ = 0;
  std::vector<std::vector<unsigned>> table_;
  std::vector<unsigned> inverse_;
  std::vector<std::string> names_;

  mutable std::vector<std::vector<unsigned>> classes_;
  mutable std::vector<unsigned> class_index_;
  mutable std::vector<CyclicSubgroupClass> cyclic_classes_;
  mutable std::vector<std::pair<unsigned, unsigned>> element_to_cyclic_;
  mutable bool classes_done_ = false;
  mutable bool cyclic_done_ = false;
};

// Class function on a finite group with Cyclotomic values.
struct ClassFunction {
  const FiniteGroup* group = nullptr;
  std::vector<Cyclotomic> by_class;

  Cyclotomic at_element(unsigned g) const {
    return by_class.at(group->class_of(g));
  }
};

// (1/|H|) sum_h f(h): the multiplicity-of-trivial functional.
Cyclotomic epsilon_trivial(const ClassFunction& f);

// Class function on the cyclic group of order |C| equal to f on the
// generators (values indexed by exponent) and zero elsewhere.
ClassFunction extend_by_zero(const FiniteGroup& cyclic_group,
                             const std::vector<std::pair<unsigned, Cyclotomic>>& on_generators);

// Unitary representation given by exact matrices on a generating set.
// Matrices are checked against the group's relations once at construction.
class Representation {
 public:
  using Matrix = std::vector<std::vector<Cyclotomic>>;

  static Representation from_generator_matrices(const FiniteGroup& g,
                                                const std::vector<unsigned>& gen_elements,
                                                const std::vector<Matrix>& mats);
  static Representation character_of_cyclic(const FiniteGroup& cyclic_group, unsigned weight);
  static Representation trivial(const FiniteGroup& g);
  static Representation regular(const FiniteGroup& g);

  const FiniteGroup& group() const { return *group_; }
  unsigned dim() const { return dim_; }
  Cyclotomic trace(unsigned element) const;  // exact character value
  ClassFunction character() const;
  const std::string& name() const { return name_; }

 private:
  const FiniteGroup* group_ = nullptr;
  unsigned dim_ = 0;
  std::string name_;
  std::vector<Cyclotomic> traces_;  // per element
};

}  // namespace orbindex

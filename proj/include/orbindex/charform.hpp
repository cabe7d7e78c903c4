#pragma once

#include "orbindex/series.hpp"
#include "orbindex/strata.hpp"

namespace orbindex {

// sum_roots mu(g)^k e^{root}, truncated at dim(Y); k is the exponent of the
// class's canonical generator.
GradedClass equiv_chern(const EquivariantBundle& bundle, unsigned class_index,
                        unsigned component_index, unsigned gen_exponent,
                        const FixedComponent& y);

// The evaluated fixed-point density of the operator on one component, for
// the group element c^gen_exponent, optionally twisted:
//   dolbeault: Td(tangent) * ch(g, twist) * prod 1/(1 - l^{-1} e^{-x})
//   spin:      Ahat(tangent) * prod 1/(s e^{x/2} - s^{-1} e^{-x/2})
//   deRham:    Euler class of the tangent roots (untwisted only)
GradedClass local_density(Operator op, const ManifoldModel& model, unsigned class_index,
                          unsigned component_index, unsigned gen_exponent,
                          const EquivariantBundle* twist);

// Pair with the fundamental class: top-degree part against the stored
// integrals; a dim-0 component returns its constant term.
Cyclotomic integrate(const FixedComponent& y, const GradedClass& c);

}  // namespace orbindex

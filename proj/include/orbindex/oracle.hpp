#pragma once

#include "orbindex/strata.hpp"

namespace orbindex {

// Independent ground truth for the catalog models: the virtual character of
// ker(D+) - ker(D-) on the comparison group, written down from closed-form
// kernel descriptions (weight lists, cohomology of the underlying spaces).
// Never touches fixed-point data or characteristic forms.
ClassFunction kernel_character(const ManifoldModel& model, Operator op,
                               const TwistSpec& twist);

// chi(g) for one group element.
Cyclotomic closed_form_L(const ManifoldModel& model, Operator op,
                         const TwistSpec& twist, unsigned element);

// (1/|H|) sum_h chi(h) tr rho(h): the multiplicity realized by averaging.
// Throws NotRational when the average fails to be rational (alarm).
Rational lefschetz_average(const ManifoldModel& model, Operator op,
                           const TwistSpec& twist, const Representation& rho);

}  // namespace orbindex

#pragma once

#include <string>

#include "orbindex/strata.hpp"

namespace orbindex {

// Line-oriented text form of a model's fixed-point data: one "class" block
// per cyclic class with its components, eigenvalues and integrals. Used for
// debugging dumps and for user-supplied custom models. Representations on
// ingested models are the characters of the declared ambient cyclic group,
// wired through each class's "embed" exponent.
std::string dump_model(const ManifoldModel& model);
ManifoldModel parse_model(const std::string& text);  // family = "custom"

}  // namespace orbindex

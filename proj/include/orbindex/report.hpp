#pragma once

#include <string>

#include "orbindex/engine.hpp"

namespace orbindex {

// Stable machine-readable form: fixed key order, exact values as strings,
// integer totals additionally as native integers. Byte-identical for
// identical inputs.
std::string report_to_json(const IndexReport& report, bool pretty = true);
IndexReport report_from_json(const std::string& text);

std::string report_human(const IndexReport& report);

std::string decompose_to_json(const ManifoldModel& model, const DecomposeResult& result,
                              const std::string& op, bool pretty = true);
std::string decompose_human(const ManifoldModel& model, const DecomposeResult& result,
                            const std::string& op);

}  // namespace orbindex

#pragma once

#include <string>

#include "hns4/hypercomplex.hpp"

namespace hns4::expr {

/// Canonical text: terms in index order, zero terms omitted, unit
/// coefficients left implicit ("e4", "-e2"), "0" when all vanish.
/// Example: "1 + 2*e2 - 3*e3 + e4". Coefficients use `digits` significant
/// digits.
std::string format_coeffs(const HNum &w, int digits = 6);

/// {"system": "<name>", "coeffs": [a1, a2, a3, a4]} with round-trip
/// precision numbers, no trailing newline.
std::string format_json(const HNum &w);

/// 5x5 grid with e1..e4 headers; the corner cell holds the system name.
std::string format_table(const SystemDef &sys);

} // namespace hns4::expr

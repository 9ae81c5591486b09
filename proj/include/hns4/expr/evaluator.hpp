#pragma once

#include "hns4/expr/ast.hpp"
#include "hns4/hypercomplex.hpp"

namespace hns4::expr {

/// Evaluates an expression tree in one system. Literals are multiples of
/// e1; pnorm and norm yield their scalar times e1; exp uses the closed form.
/// Division by a zero divisor raises ZeroDivisorError naming the divisor.
HNum evaluate(const Expr &e, const SystemDef &system);

} // namespace hns4::expr

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace hns4::expr {

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

enum class BinaryOp {
  Add,
  Sub,
  Mul,
  DivRight, // a / b : x with x b = a
  DivLeft   // b \ a : x with b x = a
};

enum class Function { Exp, Conj, PNorm, Norm };

struct Literal {
  double value;
};

struct BasisElem {
  int index; // 1..4
};

struct Neg {
  ExprPtr operand;
};

/// lhs and rhs in source order: for DivLeft "b \ a", lhs is b (the divisor).
struct Binary {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct Call {
  Function fn;
  ExprPtr arg;
};

struct Expr {
  std::variant<Literal, BasisElem, Neg, Binary, Call> node;
};

ExprPtr make_literal(double value);
ExprPtr make_basis(int index);
ExprPtr make_neg(ExprPtr operand);
ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs);
ExprPtr make_call(Function fn, ExprPtr arg);

std::optional<Function> parse_function_name(std::string_view name);
std::string_view function_name(Function fn);

/// Structural dump, e.g. "Add(Literal 1, Mul(Literal 2, BasisElem 2))".
std::string dump(const Expr &e);

/// Fully parenthesized source text that parses back to an equivalent tree
/// (a negative literal comes back as Neg of its magnitude).
/// Literals are printed with round-trip precision.
std::string to_source(const Expr &e);

} // namespace hns4::expr

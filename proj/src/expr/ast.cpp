#include "hns4/expr/ast.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace hns4::expr {
namespace {

constexpr std::array<std::pair<Function, std::string_view>, 4> kFunctions = {
    {{Function::Exp, "exp"},
     {Function::Conj, "conj"},
     {Function::PNorm, "pnorm"},
     {Function::Norm, "norm"}}};

std::string shortest(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

std::string_view op_name(BinaryOp op) {
  switch (op) {
  case BinaryOp::Add: return "Add";
  case BinaryOp::Sub: return "Sub";
  case BinaryOp::Mul: return "Mul";
  case BinaryOp::DivRight: return "DivRight";
  case BinaryOp::DivLeft: return "DivLeft";
  }
  return "?";
}

std::string_view op_symbol(BinaryOp op) {
  switch (op) {
  case BinaryOp::Add: return " + ";
  case BinaryOp::Sub: return " - ";
  case BinaryOp::Mul: return "*";
  case BinaryOp::DivRight: return "/";
  case BinaryOp::DivLeft: return " \\ ";
  }
  return "?";
}

template <class... Ts> struct overloaded : Ts... {
  using Ts::operator()...;
};

} // namespace

ExprPtr make_literal(double value) {
  return std::make_unique<Expr>(Expr{Literal{value}});
}
ExprPtr make_basis(int index) {
  return std::make_unique<Expr>(Expr{BasisElem{index}});
}
ExprPtr make_neg(ExprPtr operand) {
  return std::make_unique<Expr>(Expr{Neg{std::move(operand)}});
}
ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
  return std::make_unique<Expr>(Expr{Binary{op, std::move(lhs), std::move(rhs)}});
}
ExprPtr make_call(Function fn, ExprPtr arg) {
  return std::make_unique<Expr>(Expr{Call{fn, std::move(arg)}});
}

std::optional<Function> parse_function_name(std::string_view name) {
  for (const auto &[fn, n] : kFunctions)
    if (n == name)
      return fn;
  return std::nullopt;
}

std::string_view function_name(Function fn) {
  for (const auto &[f, n] : kFunctions)
    if (f == fn)
      return n;
  return "?";
}

std::string dump(const Expr &e) {
  return std::visit(
      overloaded{
          [](const Literal &l) { return "Literal " + shortest(l.value); },
          [](const BasisElem &b) { return "BasisElem " + std::to_string(b.index); },
          [](const Neg &n) { return "Neg(" + dump(*n.operand) + ")"; },
          [](const Binary &b) {
            return std::string(op_name(b.op)) + "(" + dump(*b.lhs) + ", " +
                   dump(*b.rhs) + ")";
          },
          [](const Call &c) {
            return "Call " + std::string(function_name(c.fn)) + "(" + dump(*c.arg) + ")";
          }},
      e.node);
}

std::string to_source(const Expr &e) {
  return std::visit(
      overloaded{
          [](const Literal &l) {
            // Negative literals cannot be lexed directly.
            return std::signbit(l.value) ? "(-" + shortest(-l.value) + ")"
                                                        : shortest(l.value);
          },
          [](const BasisElem &b) { return "e" + std::to_string(b.index); },
          [](const Neg &n) { return "(-" + to_source(*n.operand) + ")"; },
          [](const Binary &b) {
            return "(" + to_source(*b.lhs) + std::string(op_symbol(b.op)) +
                   to_source(*b.rhs) + ")";
          },
          [](const Call &c) {
            return std::string(function_name(c.fn)) + "(" + to_source(*c.arg) + ")";
          }},
      e.node);
}

} // namespace hns4::expr

#include "hns4/expr/evaluator.hpp"

#include "hns4/division.hpp"
#include "hns4/exponential.hpp"
#include "hns4/expr/format.hpp"

namespace hns4::expr {
namespace {

class Evaluator {
public:
  explicit Evaluator(const SystemDef &sys) : sys_(sys) {}

  HNum operator()(const Literal &l) const { return HNum::scalar(sys_, l.value); }
  HNum operator()(const BasisElem &b) const { return HNum::basis_element(sys_, b.index); }
  HNum operator()(const Neg &n) const { return neg(eval(*n.operand)); }

  HNum operator()(const Binary &b) const {
    const HNum lhs = eval(*b.lhs);
    const HNum rhs = eval(*b.rhs);
    switch (b.op) {
    case BinaryOp::Add: return add(lhs, rhs);
    case BinaryOp::Sub: return sub(lhs, rhs);
    case BinaryOp::Mul: return mul(lhs, rhs);
    case BinaryOp::DivRight: return divide(lhs, rhs, *b.rhs, /*left=*/false);
    case BinaryOp::DivLeft: return divide(rhs, lhs, *b.lhs, /*left=*/true);
    }
    throw std::logic_error("unhandled binary operator");
  }

  HNum operator()(const Call &c) const {
    const HNum arg = eval(*c.arg);
    switch (c.fn) {
    case Function::Exp: return exp_closed(arg);
    case Function::Conj: return conj(arg);
    case Function::PNorm: return HNum::scalar(sys_, pseudonorm(arg));
    case Function::Norm: return HNum::scalar(sys_, norm(arg));
    }
    throw std::logic_error("unhandled function");
  }

  HNum eval(const Expr &e) const { return std::visit(*this, e.node); }

private:
  HNum divide(const HNum &dividend, const HNum &divisor, const Expr &divisor_expr,
              bool left) const {
    try {
      return left ? div_left(dividend, divisor) : div_right(dividend, divisor);
    } catch (const ZeroDivisorError &e) {
      throw ZeroDivisorError("cannot divide by " + to_source(divisor_expr) + " = " +
                                 format_coeffs(divisor) + ": " + e.what(),
                             e.pseudonorm());
    }
  }

  const SystemDef &sys_;
};

} // namespace

HNum evaluate(const Expr &e, const SystemDef &system) { return Evaluator(system).eval(e); }

} // namespace hns4::expr

#pragma once

#include <cmath>
#include <concepts>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

#include "hns4/errors.hpp"
#include "hns4/system.hpp"

namespace hns4 {

/// w = a1 e1 + a2 e2 + a3 e3 + a4 e4 in one of the doubled 4-D systems.
///
/// Values are immutable; the system is referenced, never owned (all systems
/// live in static storage). Every constructed value has finite coefficients.
template <std::floating_point Scalar> class Hypercomplex {
public:
  using Coeffs = Eigen::Matrix<Scalar, 4, 1>;

  Hypercomplex(const SystemDef &sys, const Coeffs &a) : sys_(&sys), a_(a) {
    if (!a_.allFinite())
      throw NonFiniteError("hypercomplex coefficients must be finite");
  }

  Hypercomplex(const SystemDef &sys, Scalar a1, Scalar a2, Scalar a3, Scalar a4)
      : Hypercomplex(sys, Coeffs(a1, a2, a3, a4)) {}

  static Hypercomplex zero(const SystemDef &sys) {
    return Hypercomplex(sys, Coeffs::Zero());
  }

  /// The real unit e1.
  static Hypercomplex unit(const SystemDef &sys) {
    return Hypercomplex(sys, Coeffs::UnitX());
  }

  /// e_k for k in 1..4.
  static Hypercomplex basis_element(const SystemDef &sys, int k) {
    if (k < 1 || k > kDim)
      throw std::out_of_range("basis index must be in 1..4, got " +
                              std::to_string(k));
    return Hypercomplex(sys, Coeffs::Unit(k - 1));
  }

  /// s * e1.
  static Hypercomplex scalar(const SystemDef &sys, Scalar s) {
    return Hypercomplex(sys, Coeffs(s, 0, 0, 0));
  }

  const SystemDef &system() const { return *sys_; }
  const Coeffs &coeffs() const { return a_; }

  /// 0-based coefficient access: operator[](0) is a1.
  Scalar operator[](int i) const { return a_(i); }

  bool is_zero() const { return (a_.array() == Scalar(0)).all(); }

  /// Exact coefficient and system equality.
  bool operator==(const Hypercomplex &o) const {
    return sys_->same_algebra(*o.sys_) && a_ == o.a_;
  }

private:
  const SystemDef *sys_;
  Coeffs a_;
};

using HNum = Hypercomplex<double>;

template <std::floating_point Scalar>
void require_same_system(const Hypercomplex<Scalar> &x,
                         const Hypercomplex<Scalar> &y) {
  if (!x.system().same_algebra(y.system()))
    throw SystemMismatchError("operands belong to different systems: " +
                              display_name(x.system()) + " and " +
                              display_name(y.system()));
}

template <std::floating_point Scalar>
Hypercomplex<Scalar> add(const Hypercomplex<Scalar> &x,
                         const Hypercomplex<Scalar> &y) {
  require_same_system(x, y);
  return {x.system(), x.coeffs() + y.coeffs()};
}

template <std::floating_point Scalar>
Hypercomplex<Scalar> sub(const Hypercomplex<Scalar> &x,
                         const Hypercomplex<Scalar> &y) {
  require_same_system(x, y);
  return {x.system(), x.coeffs() - y.coeffs()};
}

template <std::floating_point Scalar>
Hypercomplex<Scalar> neg(const Hypercomplex<Scalar> &x) {
  return {x.system(), -x.coeffs()};
}

template <std::floating_point Scalar>
Hypercomplex<Scalar> scale(Scalar k, const Hypercomplex<Scalar> &x) {
  return {x.system(), k * x.coeffs()};
}

/// Bilinear expansion sum_ij a_i b_j (e_i e_j) through the Cayley table.
template <std::floating_point Scalar>
Hypercomplex<Scalar> mul(const Hypercomplex<Scalar> &x,
                         const Hypercomplex<Scalar> &y) {
  require_same_system(x, y);
  const CayleyTable4 &t = x.system().table;
  typename Hypercomplex<Scalar>::Coeffs r =
      Hypercomplex<Scalar>::Coeffs::Zero();
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      const SignedBasis c = t(i, j);
      if (!c.is_zero())
        r(c.index) += Scalar(c.sign) * x[i] * y[j];
    }
  return {x.system(), r};
}

/// a1 e1 - a2 e2 - a3 e3 - a4 e4, the same formula in every system.
template <std::floating_point Scalar>
Hypercomplex<Scalar> conj(const Hypercomplex<Scalar> &x) {
  typename Hypercomplex<Scalar>::Coeffs r = -x.coeffs();
  r(0) = x[0];
  return {x.system(), r};
}

template <std::floating_point Scalar>
Hypercomplex<Scalar> operator+(const Hypercomplex<Scalar> &x,
                               const Hypercomplex<Scalar> &y) {
  return add(x, y);
}

template <std::floating_point Scalar>
Hypercomplex<Scalar> operator-(const Hypercomplex<Scalar> &x,
                               const Hypercomplex<Scalar> &y) {
  return sub(x, y);
}

template <std::floating_point Scalar>
Hypercomplex<Scalar> operator-(const Hypercomplex<Scalar> &x) {
  return neg(x);
}

template <std::floating_point Scalar>
Hypercomplex<Scalar> operator*(const Hypercomplex<Scalar> &x,
                               const Hypercomplex<Scalar> &y) {
  return mul(x, y);
}

template <std::floating_point Scalar>
Hypercomplex<Scalar> operator*(Scalar k, const Hypercomplex<Scalar> &x) {
  return scale(k, x);
}

} // namespace hns4

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>

#include <Eigen/LU>
#include <Eigen/SVD>

#include "hns4/hypercomplex.hpp"

namespace hns4 {

template <typename Scalar> using Matrix4 = Eigen::Matrix<Scalar, 4, 4>;
using RealMatrix4 = Matrix4<double>;

/// A pseudonorm counts as vanishing when |pseudonorm| <= this * max|a_i|^2.
/// Scale-invariant, so no nonzero quaternion is ever flagged.
inline constexpr double kZeroDivisorTolerance = 1e-12;

/// Matrix of x -> w x in basis coordinates; column j holds w e_j.
/// left_rep(w1 w2) == left_rep(w1) * left_rep(w2).
template <std::floating_point Scalar>
Matrix4<Scalar> left_rep(const Hypercomplex<Scalar> &w) {
  const CayleyTable4 &t = w.system().table;
  Matrix4<Scalar> m = Matrix4<Scalar>::Zero();
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      const SignedBasis c = t(i, j);
      if (!c.is_zero())
        m(c.index, j) += Scalar(c.sign) * w[i];
    }
  return m;
}

/// det(left_rep(w)), via LU with partial pivoting.
template <std::floating_point Scalar>
Scalar norm(const Hypercomplex<Scalar> &w) {
  return left_rep(w).partialPivLu().determinant();
}

/// a1^2 - mu1 a2^2 - mu2 a3^2 + mu1 mu2 a4^2. Signed; its square is norm(w).
template <std::floating_point Scalar>
Scalar pseudonorm(const Hypercomplex<Scalar> &w) {
  const Scalar m1 = Scalar(w.system().mu1.value());
  const Scalar m2 = Scalar(w.system().mu2.value());
  return w[0] * w[0] - m1 * w[1] * w[1] - m2 * w[2] * w[2] +
         m1 * m2 * w[3] * w[3];
}

template <std::floating_point Scalar>
bool pseudonorm_vanishes(const Hypercomplex<Scalar> &w) {
  const Scalar biggest = w.coeffs().cwiseAbs().maxCoeff();
  return std::abs(pseudonorm(w)) <= Scalar(kZeroDivisorTolerance) * biggest * biggest;
}

/// Nonzero with vanishing pseudonorm (within kZeroDivisorTolerance).
template <std::floating_point Scalar>
bool is_zero_divisor(const Hypercomplex<Scalar> &w) {
  return !w.is_zero() && pseudonorm_vanishes(w);
}

/// Unit-length v with w v ~ 0, taken from the smallest singular direction of
/// left_rep(w). Empty when the smallest singular value exceeds
/// rel_tol * largest, i.e. w is not (numerically) a zero divisor.
template <std::floating_point Scalar>
std::optional<Hypercomplex<Scalar>>
right_annihilator(const Hypercomplex<Scalar> &w, Scalar rel_tol = Scalar(1e-10)) {
  if (w.is_zero())
    return std::nullopt;
  Eigen::JacobiSVD<Matrix4<Scalar>> svd(left_rep(w), Eigen::ComputeFullV);
  const auto &sv = svd.singularValues();
  if (sv(3) > rel_tol * sv(0))
    return std::nullopt;
  return Hypercomplex<Scalar>(w.system(), svd.matrixV().col(3));
}

} // namespace hns4

#pragma once

#include <cmath>

#include "hns4/norm.hpp"

namespace hns4 {

enum class Branch { Hyperbolic, Trigonometric, Degenerate };

inline constexpr double kDegenerateRadicandTolerance = 1e-12;

/// Scalar value of v^2 for the pure-vector part v = m2 e2 + m3 e3 + m4 e4,
/// and the exponential branch its sign selects.
template <std::floating_point Scalar> struct RadicandBranch {
  Scalar delta;
  Branch branch;

  /// sqrt(|delta|); the angle (or rapidity) of the exponential.
  Scalar magnitude() const { return std::sqrt(std::abs(delta)); }
};

template <std::floating_point Scalar>
RadicandBranch<Scalar> radicand(const Hypercomplex<Scalar> &w) {
  const Scalar m1 = Scalar(w.system().mu1.value());
  const Scalar m2 = Scalar(w.system().mu2.value());
  // Cross terms of v^2 cancel because e2, e3, e4 pairwise anticommute.
  const Scalar delta =
      m1 * w[1] * w[1] + m2 * w[2] * w[2] - m1 * m2 * w[3] * w[3];
  const Scalar scale_sq = w[1] * w[1] + w[2] * w[2] + w[3] * w[3];
  Branch b;
  if (std::abs(delta) <=
      Scalar(kDegenerateRadicandTolerance) * (Scalar(1) + scale_sq))
    b = Branch::Degenerate;
  else if (delta > 0)
    b = Branch::Hyperbolic;
  else
    b = Branch::Trigonometric;
  return {delta, b};
}

namespace detail {
// Below this argument sin(s)/s and sinh(s)/s use their quartic Taylor
// polynomials.
inline constexpr double kSincSeriesCutoff = 1e-4;

template <std::floating_point Scalar> Scalar sinc(Scalar s) {
  if (s < Scalar(kSincSeriesCutoff)) {
    const Scalar s2 = s * s;
    return Scalar(1) - s2 / Scalar(6) + s2 * s2 / Scalar(120);
  }
  return std::sin(s) / s;
}

template <std::floating_point Scalar> Scalar sinhc(Scalar s) {
  if (s < Scalar(kSincSeriesCutoff)) {
    const Scalar s2 = s * s;
    return Scalar(1) + s2 / Scalar(6) + s2 * s2 / Scalar(120);
  }
  return std::sinh(s) / s;
}
} // namespace detail

/// Closed-form exponential e^{m1} (f e1 + g v), v the pure-vector part:
/// hyperbolic f = cosh s, g = sinh(s)/s; trigonometric f = cos s,
/// g = sin(s)/s; degenerate f = g = 1. Here s = sqrt(|delta|).
template <std::floating_point Scalar>
Hypercomplex<Scalar> exp_closed(const Hypercomplex<Scalar> &w) {
  const RadicandBranch<Scalar> r = radicand(w);
  const Scalar s = r.magnitude();
  Scalar f = 1;
  Scalar g = 1;
  switch (r.branch) {
  case Branch::Hyperbolic:
    f = std::cosh(s);
    g = detail::sinhc(s);
    break;
  case Branch::Trigonometric:
    f = std::cos(s);
    g = detail::sinc(s);
    break;
  case Branch::Degenerate:
    break;
  }
  const Scalar growth = std::exp(w[0]);
  typename Hypercomplex<Scalar>::Coeffs c;
  c << growth * f, growth * g * w[1], growth * g * w[2], growth * g * w[3];
  return {w.system(), c};
}

/// exp(A) by scaling and squaring: A is halved until its max-norm is at most
/// 0.5, the Taylor series is summed until a term's max-norm drops below
/// 1e-16, and the result is squared back.
template <typename Derived>
Matrix4<typename Derived::Scalar>
matrix_exp(const Eigen::MatrixBase<Derived> &a) {
  using Scalar = typename Derived::Scalar;
  using std::abs;
  const auto max_norm = [](const Matrix4<Scalar> &m) {
    return m.cwiseAbs().maxCoeff();
  };

  int squarings = 0;
  Matrix4<Scalar> scaled = a;
  while (max_norm(scaled) > Scalar(0.5)) {
    scaled *= Scalar(0.5);
    ++squarings;
  }

  Matrix4<Scalar> sum = Matrix4<Scalar>::Identity();
  Matrix4<Scalar> term = Matrix4<Scalar>::Identity();
  for (int k = 1; k < 64; ++k) {
    term = (term * scaled) / Scalar(k);
    sum += term;
    if (max_norm(term) < Scalar(1e-16))
      break;
  }
  for (int i = 0; i < squarings; ++i)
    sum = sum * sum;
  return sum;
}

/// Exponential as the t = 1 flow of X' = left_rep(w) X from X(0) = e1:
/// the first column of exp(left_rep(w)). Independent of exp_closed.
template <std::floating_point Scalar>
Hypercomplex<Scalar> exp_series(const Hypercomplex<Scalar> &w) {
  const Matrix4<Scalar> flow = matrix_exp(left_rep(w));
  return {w.system(), flow.col(0)};
}

} // namespace hns4

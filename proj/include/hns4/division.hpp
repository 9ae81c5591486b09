#pragma once

#include <sstream>

#include "hns4/norm.hpp"

namespace hns4 {

namespace detail {
template <std::floating_point Scalar>
Scalar checked_divisor_pseudonorm(const Hypercomplex<Scalar> &divisor) {
  const Scalar pn = pseudonorm(divisor);
  if (pseudonorm_vanishes(divisor)) {
    std::ostringstream msg;
    msg << (divisor.is_zero() ? "division by zero"
                              : "divisor is a zero divisor")
        << " (pseudonorm " << pn << ")";
    throw ZeroDivisorError(msg.str(), static_cast<double>(pn));
  }
  return pn;
}
} // namespace detail

/// Left quotient: the x solving divisor * x = dividend,
/// x = conj(divisor) dividend / pseudonorm(divisor).
/// Throws ZeroDivisorError when the divisor is zero or a zero divisor.
template <std::floating_point Scalar>
Hypercomplex<Scalar> div_left(const Hypercomplex<Scalar> &dividend,
                              const Hypercomplex<Scalar> &divisor) {
  require_same_system(dividend, divisor);
  const Scalar pn = detail::checked_divisor_pseudonorm(divisor);
  return scale(Scalar(1) / pn, mul(conj(divisor), dividend));
}

/// Right quotient: the x solving x * divisor = dividend,
/// x = dividend conj(divisor) / pseudonorm(divisor).
template <std::floating_point Scalar>
Hypercomplex<Scalar> div_right(const Hypercomplex<Scalar> &dividend,
                               const Hypercomplex<Scalar> &divisor) {
  require_same_system(dividend, divisor);
  const Scalar pn = detail::checked_divisor_pseudonorm(divisor);
  return scale(Scalar(1) / pn, mul(dividend, conj(divisor)));
}

} // namespace hns4

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hns4 {

/// Square of the non-unit element of a 2-D base system: -1 complex (C),
/// +1 double (W), 0 dual (D).
class SquareSign {
public:
  constexpr SquareSign() = default;
  constexpr explicit SquareSign(int value) : value_(value) {
    if (value < -1 || value > 1)
      throw std::invalid_argument("square sign must be -1, 0 or +1, got " +
                                  std::to_string(value));
  }

  constexpr int value() const { return value_; }
  constexpr bool operator==(const SquareSign &) const = default;

  static constexpr SquareSign complex() { return SquareSign(-1); }
  static constexpr SquareSign dual() { return SquareSign(0); }
  static constexpr SquareSign double_() { return SquareSign(1); }

private:
  int value_ = -1;
};

/// A Cayley-table cell: sign * e_index, or zero when sign == 0.
/// Indices are 0-based here (e1 -> 0); the zero product canonically uses index 0.
struct SignedBasis {
  int sign = 0;
  int index = 0;

  constexpr SignedBasis() = default;
  constexpr SignedBasis(int s, int i) : sign(s), index(s == 0 ? 0 : i) {}

  static constexpr SignedBasis zero() { return {}; }
  constexpr bool is_zero() const { return sign == 0; }
  constexpr SignedBasis negated() const { return {-sign, index}; }
  constexpr SignedBasis scaled(int k) const { return {sign * k, index}; }
  constexpr bool operator==(const SignedBasis &) const = default;
};

inline constexpr int kDim = 4;

/// entry(i, j) = e_i * e_j, 0-based indices.
class CayleyTable4 {
public:
  using Grid = std::array<std::array<SignedBasis, kDim>, kDim>;

  constexpr CayleyTable4() = default;
  constexpr explicit CayleyTable4(const Grid &g) : grid_(g) {}

  constexpr const SignedBasis &operator()(int i, int j) const {
    return grid_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  constexpr SignedBasis &operator()(int i, int j) {
    return grid_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }

  constexpr bool operator==(const CayleyTable4 &) const = default;

  /// Product of a signed basis element with another, both expanded through
  /// the table. Stays exact: results are again signed basis elements.
  constexpr SignedBasis product(SignedBasis lhs, SignedBasis rhs) const {
    if (lhs.is_zero() || rhs.is_zero())
      return SignedBasis::zero();
    return (*this)(lhs.index, rhs.index).scaled(lhs.sign * rhs.sign);
  }

private:
  Grid grid_{};
};

/// Grassmann-Clifford doubling of two 2-D systems with square signs mu1
/// (first factor) and mu2 (second factor). Basis order is
/// {e1f1, e2f1, e1f2, e2f2}.
constexpr CayleyTable4 gc_double(SquareSign mu1, SquareSign mu2) {
  const int m1 = mu1.value();
  const int m2 = mu2.value();
  CayleyTable4 t;
  for (int j = 0; j < kDim; ++j) {
    t(0, j) = {1, j};
    t(j, 0) = {1, j};
  }
  t(1, 1) = {m1, 0};
  t(2, 2) = {m2, 0};
  t(3, 3) = {-m1 * m2, 0};
  t(1, 2) = {1, 3};
  t(2, 1) = {-1, 3};
  t(1, 3) = {m1, 2};
  t(3, 1) = {-m1, 2};
  t(2, 3) = {-m2, 1};
  t(3, 2) = {m2, 1};
  return t;
}

constexpr bool has_identity_row_and_column(const CayleyTable4 &t) {
  for (int j = 0; j < kDim; ++j)
    if (t(0, j) != SignedBasis{1, j} || t(j, 0) != SignedBasis{1, j})
      return false;
  return true;
}

constexpr bool is_anticommutative_off_diagonal(const CayleyTable4 &t) {
  for (int i = 1; i < kDim; ++i)
    for (int j = 1; j < kDim; ++j)
      if (i != j && t(i, j) != t(j, i).negated())
        return false;
  return true;
}

/// Every cell is zero or a unit-signed basis element.
constexpr bool is_closed(const CayleyTable4 &t) {
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      const auto c = t(i, j);
      if (c.sign < -1 || c.sign > 1 || c.index < 0 || c.index >= kDim)
        return false;
      if (c.sign == 0 && c.index != 0)
        return false;
    }
  return true;
}

/// (e_i e_j) e_k == e_i (e_j e_k) for all 64 basis triples, exact.
constexpr bool is_associative(const CayleyTable4 &t) {
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) {
        const auto left = t.product(t(i, j), {1, k});
        const auto right = t.product({1, i}, t(j, k));
        if (left != right)
          return false;
      }
  return true;
}

constexpr bool satisfies_table_invariants(const CayleyTable4 &t) {
  return has_identity_row_and_column(t) && is_anticommutative_off_diagonal(t) &&
         is_closed(t) && is_associative(t);
}

/// "e3", "-e4" or "0".
std::string to_string(SignedBasis cell);

} // namespace hns4

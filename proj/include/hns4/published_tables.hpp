#pragma once

#include <array>
#include <vector>

#include "hns4/system.hpp"

namespace hns4 {

struct CellMismatch {
  int row = 0; // 0-based, e1 -> 0
  int col = 0;
  SignedBasis published;
  SignedBasis generated;
};

struct TableReport {
  bool exact_match = false;
  /// Some sign flip of (e2, e3, e4) turns the generated table into the
  /// published one.
  bool sign_flip_match = false;
  std::vector<CellMismatch> discrepancies;
};

/// Literal transcription of the published Cayley table for a named kind,
/// including its known typesetting errors. Throws std::invalid_argument for
/// SystemKind::Generic.
const CayleyTable4 &published_table(SystemKind kind);

/// Table obtained by replacing e_k with sigma[k] e_k (sigma[0] must be +1).
CayleyTable4 apply_sign_flip(const CayleyTable4 &t, const std::array<int, 4> &sigma);

/// Compares gc_double output for kind against the published table.
TableReport verify_against_published(SystemKind kind);

} // namespace hns4

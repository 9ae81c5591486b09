#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "hns4/cayley_table.hpp"

namespace hns4 {

enum class SystemKind { H, AH, CD, WW, DD, WD, Generic };

/// A 4-D system obtained by doubling the base systems with square signs
/// (mu1, mu2). Instances live in static storage; see system_for().
struct SystemDef {
  SystemKind kind = SystemKind::Generic;
  SquareSign mu1;
  SquareSign mu2;
  CayleyTable4 table;

  /// Same algebra iff the doubling parameters match.
  bool same_algebra(const SystemDef &other) const {
    return mu1 == other.mu1 && mu2 == other.mu2;
  }
};

inline constexpr std::array<SystemKind, 6> kNamedKinds = {
    SystemKind::H,  SystemKind::AH, SystemKind::CD,
    SystemKind::WW, SystemKind::DD, SystemKind::WD};

/// Shared definition for one of the six named kinds.
/// Throws std::invalid_argument for SystemKind::Generic.
const SystemDef &builtin_system(SystemKind kind);

/// Shared definition for any of the nine (mu1, mu2) pairs; named pairs
/// return the same object as builtin_system.
const SystemDef &system_for(SquareSign mu1, SquareSign mu2);

std::string_view kind_name(SystemKind kind);

/// Case-insensitive lookup of "H", "AH", "CD", "WW", "DD", "WD".
std::optional<SystemKind> parse_kind(std::string_view name);

/// Name used in output: the kind name, or "D(mu1,mu2)" for generic pairs.
std::string display_name(const SystemDef &sys);

} // namespace hns4

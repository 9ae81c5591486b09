#include "hns4/system.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace hns4 {
namespace {

constexpr SystemKind kind_for(int mu1, int mu2) {
  if (mu1 == -1 && mu2 == -1) return SystemKind::H;
  if (mu1 == -1 && mu2 == 1) return SystemKind::AH;
  if (mu1 == -1 && mu2 == 0) return SystemKind::CD;
  if (mu1 == 1 && mu2 == 1) return SystemKind::WW;
  if (mu1 == 0 && mu2 == 0) return SystemKind::DD;
  if (mu1 == 1 && mu2 == 0) return SystemKind::WD;
  return SystemKind::Generic;
}

constexpr std::size_t slot(int mu1, int mu2) {
  return static_cast<std::size_t>((mu1 + 1) * 3 + (mu2 + 1));
}

constexpr std::array<SystemDef, 9> make_all_systems() {
  std::array<SystemDef, 9> all{};
  for (int m1 = -1; m1 <= 1; ++m1)
    for (int m2 = -1; m2 <= 1; ++m2) {
      const SquareSign s1(m1), s2(m2);
      all[slot(m1, m2)] = SystemDef{kind_for(m1, m2), s1, s2, gc_double(s1, s2)};
    }
  return all;
}

constexpr std::array<SystemDef, 9> kAllSystems = make_all_systems();

static_assert(std::all_of(kAllSystems.begin(), kAllSystems.end(),
                          [](const SystemDef &s) {
                            return satisfies_table_invariants(s.table);
                          }));

struct KindMu {
  SystemKind kind;
  int mu1;
  int mu2;
  std::string_view name;
};

constexpr std::array<KindMu, 6> kNamed = {{{SystemKind::H, -1, -1, "H"},
                                           {SystemKind::AH, -1, 1, "AH"},
                                           {SystemKind::CD, -1, 0, "CD"},
                                           {SystemKind::WW, 1, 1, "WW"},
                                           {SystemKind::DD, 0, 0, "DD"},
                                           {SystemKind::WD, 1, 0, "WD"}}};

} // namespace

const SystemDef &builtin_system(SystemKind kind) {
  for (const auto &k : kNamed)
    if (k.kind == kind)
      return kAllSystems[slot(k.mu1, k.mu2)];
  throw std::invalid_argument("not a named system kind");
}

const SystemDef &system_for(SquareSign mu1, SquareSign mu2) {
  return kAllSystems[slot(mu1.value(), mu2.value())];
}

std::string_view kind_name(SystemKind kind) {
  for (const auto &k : kNamed)
    if (k.kind == kind)
      return k.name;
  return "Generic";
}

std::optional<SystemKind> parse_kind(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (const auto &k : kNamed)
    if (k.name == upper)
      return k.kind;
  return std::nullopt;
}

std::string display_name(const SystemDef &sys) {
  if (sys.kind != SystemKind::Generic)
    return std::string(kind_name(sys.kind));
  return "D(" + std::to_string(sys.mu1.value()) + "," +
         std::to_string(sys.mu2.value()) + ")";
}

} // namespace hns4

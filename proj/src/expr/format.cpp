#include "hns4/expr/format.hpp"

#include <cmath>
#include <cstdio>
#include <algorithm>

#include <json.hpp>

namespace hns4::expr {
namespace {

std::string significant(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

} // namespace

std::string format_coeffs(const HNum &w, int digits) {
  std::string out;
  for (int i = 0; i < kDim; ++i) {
    const double c = w[i];
    if (c == 0.0)
      continue;
    const bool negative = c < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const std::string magnitude = significant(std::abs(c), digits);
    if (i == 0)
      out += magnitude;
    else if (magnitude == "1")
      out += "e" + std::to_string(i + 1);
    else
      out += magnitude + "*e" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

std::string format_json(const HNum &w) {
  nlohmann::json j;
  j["system"] = display_name(w.system());
  j["coeffs"] = {w[0], w[1], w[2], w[3]};
  return j.dump();
}

std::string format_table(const SystemDef &sys) {
  constexpr std::size_t kWidth = 5;
  const std::string name = display_name(sys);
  const std::size_t first = std::max(kWidth, name.size() + 1);
  const auto row = [&](const std::string &head, auto cell) {
    std::string line = head;
    for (int j = 0; j < kDim; ++j) {
      line.resize(first + kWidth * static_cast<std::size_t>(j), ' ');
      line += cell(j);
    }
    return line + "\n";
  };

  std::string out = row(name, [](int j) { return "e" + std::to_string(j + 1); });
  for (int i = 0; i < kDim; ++i)
    out += row("e" + std::to_string(i + 1),
               [&](int j) { return to_string(sys.table(i, j)); });
  return out;
}

} // namespace hns4::expr

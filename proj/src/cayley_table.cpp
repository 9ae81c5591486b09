#include "hns4/cayley_table.hpp"

namespace hns4 {

std::string to_string(SignedBasis cell) {
  if (cell.is_zero())
    return "0";
  std::string s = cell.sign < 0 ? "-e" : "e";
  s += static_cast<char>('1' + cell.index);
  return s;
}

} // namespace hns4

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hns4::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitEvalError = 2;

/// Entry point of the hns4 tool. args[0] is the program name.
///   hns4 table <SYSTEM | --mu M1 M2>
///   hns4 eval --system <SYSTEM> [--json] "<expr>"
///   hns4 exp --system <SYSTEM> a1 a2 a3 a4 [--json]
///   hns4 repl --system <SYSTEM>
/// Returns 0 on success, 1 on usage errors, 2 on evaluation errors.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err);

/// Line-oriented loop: one expression per line; ":system S" switches,
/// ":table" prints the current table, ":quit" stops. Evaluation errors are
/// reported on err and the loop continues.
int repl(const std::string &system, std::istream &in, std::ostream &out,
         std::ostream &err);

} // namespace hns4::cli

#include "hns4/cli/app.hpp"

#include <istream>
#include <ostream>
#include <unistd.h>

#include <CLI11.hpp>

#include "hns4/errors.hpp"
#include "hns4/exponential.hpp"
#include "hns4/expr/evaluator.hpp"
#include "hns4/expr/format.hpp"
#include "hns4/expr/parser.hpp"

namespace hns4::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const SystemDef &lookup_system(const std::string &name) {
  const auto kind = parse_kind(name);
  if (!kind)
    throw UsageError("unknown system '" + name + "' (expected H, AH, CD, WW, DD or WD)");
  return builtin_system(*kind);
}

void print_value(const HNum &w, bool json, std::ostream &out) {
  out << (json ? expr::format_json(w) : expr::format_coeffs(w)) << '\n';
}

/// Runs fn, mapping evaluation failures to exit code 2.
template <typename Fn> int guarded(std::ostream &err, Fn &&fn) {
  try {
    fn();
    return kExitOk;
  } catch (const expr::LexError &e) {
    err << "error: lex error at " << e.what() << '\n';
  } catch (const expr::ParseError &e) {
    err << "error: parse error at " << e.what() << '\n';
  } catch (const ZeroDivisorError &e) {
    err << "error: " << e.what() << '\n';
  } catch (const NonFiniteError &e) {
    err << "error: " << e.what() << '\n';
  } catch (const SystemMismatchError &e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitEvalError;
}

std::string trim(const std::string &s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

} // namespace

int repl(const std::string &system, std::istream &in, std::ostream &out,
         std::ostream &err) {
  const SystemDef *sys = &lookup_system(system);
  const bool interactive = &in == &std::cin && isatty(STDIN_FILENO) != 0;
  std::string line;
  while (true) {
    if (interactive)
      out << display_name(*sys) << "> " << std::flush;
    if (!std::getline(in, line))
      break;
    const std::string cmd = trim(line);
    if (cmd.empty())
      continue;
    if (cmd == ":quit")
      break;
    if (cmd == ":table") {
      out << expr::format_table(*sys);
      continue;
    }
    if (cmd.rfind(":system", 0) == 0) {
      const std::string name = trim(cmd.substr(7));
      const auto kind = parse_kind(name);
      if (!kind || name.empty())
        err << "error: unknown system '" << name << "'\n";
      else
        sys = &builtin_system(*kind);
      continue;
    }
    if (cmd.front() == ':') {
      err << "error: unknown command '" << cmd << "' (:system, :table, :quit)\n";
      continue;
    }
    guarded(err, [&] { print_value(expr::evaluate(*expr::parse(cmd), *sys), false, out); });
  }
  return kExitOk;
}

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Arithmetic in the six 4-D hypercomplex systems built by "
               "Grassmann-Clifford doubling",
               "hns4"};
  app.require_subcommand(1);

  std::string table_system;
  std::vector<int> table_mu;
  auto *table = app.add_subcommand("table", "Print a Cayley table");
  table->add_option("system", table_system, "H, AH, CD, WW, DD or WD");
  table->add_option("--mu", table_mu, "Square signs of the two base systems")
      ->expected(2)
      ->check(CLI::Range(-1, 1));

  std::string eval_system;
  std::string eval_source;
  bool eval_json = false;
  auto *eval = app.add_subcommand("eval", "Evaluate an expression");
  eval->add_option("--system", eval_system, "H, AH, CD, WW, DD or WD")->required();
  eval->add_flag("--json", eval_json, "JSON output");
  eval->add_option("expr", eval_source, "Expression, e.g. \"(1 + e2)*e3\"")->required();

  std::string exp_system;
  std::vector<double> exp_coeffs;
  bool exp_json = false;
  auto *exp = app.add_subcommand("exp", "Exponential of a1 e1 + a2 e2 + a3 e3 + a4 e4");
  exp->add_option("--system", exp_system, "H, AH, CD, WW, DD or WD")->required();
  exp->add_option("coeffs", exp_coeffs, "a1 a2 a3 a4")->required()->expected(4);
  exp->add_flag("--json", exp_json, "JSON output");

  std::string repl_system;
  auto *repl_cmd = app.add_subcommand("repl", "Read expressions from stdin");
  repl_cmd->add_option("--system", repl_system, "H, AH, CD, WW, DD or WD")->required();

  std::vector<const char *> argv;
  argv.reserve(args.size());
  for (const auto &a : args)
    argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (table->parsed()) {
      if (table_mu.empty() == table_system.empty())
        throw UsageError("table needs exactly one of SYSTEM or --mu M1 M2");
      const SystemDef &sys =
          table_mu.empty() ? lookup_system(table_system)
                           : system_for(SquareSign(table_mu[0]), SquareSign(table_mu[1]));
      out << expr::format_table(sys);
      return kExitOk;
    }
    if (eval->parsed()) {
      const SystemDef &sys = lookup_system(eval_system);
      return guarded(err, [&] {
        print_value(expr::evaluate(*expr::parse(eval_source), sys), eval_json, out);
      });
    }
    if (exp->parsed()) {
      const SystemDef &sys = lookup_system(exp_system);
      return guarded(err, [&] {
        const HNum w(sys, exp_coeffs[0], exp_coeffs[1], exp_coeffs[2], exp_coeffs[3]);
        print_value(exp_closed(w), exp_json, out);
      });
    }
    return repl(repl_system, in, out, err);
  } catch (const UsageError &e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }
}

} // namespace hns4::cli

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hns4::expr {

enum class TokenKind {
  Number,
  Basis,
  Plus,
  Minus,
  Star,
  Slash,
  Backslash,
  LParen,
  RParen,
  Ident,
  End
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string lexeme;
  int column = 1; // 1-based
  double number = 0.0; // Number only
  int basis = 0;       // Basis only, 1..4
};

/// Lexing or parsing failure at a 1-based column.
class SyntaxError : public std::runtime_error {
public:
  SyntaxError(const std::string &message, int column)
      : std::runtime_error("column " + std::to_string(column) + ": " + message),
        column_(column) {}

  int column() const { return column_; }

private:
  int column_;
};

class LexError : public SyntaxError {
public:
  using SyntaxError::SyntaxError;
};

/// Longest-match lexing. Numbers: digits with optional fraction and
/// exponent ("1.5e-2", ".5"); identifiers e1..e4 (any case) become Basis
/// tokens. The result always ends with an End token.
std::vector<Token> tokenize(std::string_view input);

std::string_view token_kind_name(TokenKind kind);

} // namespace hns4::expr

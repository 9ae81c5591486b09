#pragma once

#include <span>
#include <string_view>

#include "hns4/expr/ast.hpp"
#include "hns4/expr/lexer.hpp"

namespace hns4::expr {

class ParseError : public SyntaxError {
public:
  using SyntaxError::SyntaxError;
};

/// Grammar, lowest precedence first:
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/' | '\') unary)*
///   unary   := '-' unary | primary
///   primary := Number | Basis | Ident '(' expr ')' | '(' expr ')'
/// Binary operators are left-associative; '*' is never implied.
ExprPtr parse(std::span<const Token> tokens);

/// tokenize + parse.
ExprPtr parse(std::string_view source);

} // namespace hns4::expr

#include "hns4/expr/parser.hpp"

#include <vector>

namespace hns4::expr {
namespace {

class Parser {
public:
  explicit Parser(std::span<const Token> tokens) : toks_(tokens) {
    if (toks_.empty() || toks_.back().kind != TokenKind::End)
      throw ParseError("token stream must end with an End token", 1);
  }

  ExprPtr run() {
    ExprPtr e = expr();
    if (peek().kind != TokenKind::End)
      fail("expected operator or end of input");
    return e;
  }

private:
  const Token &peek() const { return toks_[pos_]; }
  const Token &advance() {
    const Token &t = toks_[pos_];
    if (t.kind != TokenKind::End)
      ++pos_;
    return t;
  }

  [[noreturn]] void fail(const std::string &expected) const {
    const Token &t = peek();
    std::string found = t.kind == TokenKind::End
                            ? "end of input"
                            : "'" + t.lexeme + "'";
    throw ParseError(expected + ", found " + found, t.column);
  }

  void expect(TokenKind kind) {
    if (peek().kind != kind)
      fail("expected " + std::string(token_kind_name(kind)));
    advance();
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
      const BinaryOp op = advance().kind == TokenKind::Plus ? BinaryOp::Add : BinaryOp::Sub;
      lhs = make_binary(op, std::move(lhs), term());
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    while (true) {
      BinaryOp op;
      switch (peek().kind) {
      case TokenKind::Star: op = BinaryOp::Mul; break;
      case TokenKind::Slash: op = BinaryOp::DivRight; break;
      case TokenKind::Backslash: op = BinaryOp::DivLeft; break;
      default: return lhs;
      }
      advance();
      lhs = make_binary(op, std::move(lhs), unary());
    }
  }

  ExprPtr unary() {
    // Every nesting level (parenthesis, call, unary minus) passes through here.
    if (++depth_ > kMaxDepth)
      fail("expression nested too deeply");
    struct Leave {
      int &d;
      ~Leave() { --d; }
    } leave{depth_};
    if (peek().kind == TokenKind::Minus) {
      advance();
      return make_neg(unary());
    }
    return primary();
  }

  ExprPtr primary() {
    const Token &t = peek();
    switch (t.kind) {
    case TokenKind::Number:
      advance();
      return make_literal(t.number);
    case TokenKind::Basis:
      advance();
      return make_basis(t.basis);
    case TokenKind::Ident: {
      const auto fn = parse_function_name(t.lexeme);
      if (!fn)
        throw ParseError("unknown function '" + t.lexeme +
                             "' (expected exp, conj, pnorm or norm)",
                         t.column);
      advance();
      expect(TokenKind::LParen);
      ExprPtr arg = expr();
      expect(TokenKind::RParen);
      return make_call(*fn, std::move(arg));
    }
    case TokenKind::LParen: {
      advance();
      ExprPtr inner = expr();
      expect(TokenKind::RParen);
      return inner;
    }
    default:
      fail("expected number, basis element, function call or '('");
    }
  }

  static constexpr int kMaxDepth = 256;

  std::span<const Token> toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

} // namespace

ExprPtr parse(std::span<const Token> tokens) { return Parser(tokens).run(); }

ExprPtr parse(std::string_view source) {
  const std::vector<Token> tokens = tokenize(source);
  return parse(std::span<const Token>(tokens));
}

} // namespace hns4::expr

#include "hns4/expr/lexer.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace hns4::expr {
namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (pos_ >= src_.size()) {
        out.push_back({TokenKind::End, "", column(pos_)});
        return out;
      }
      const char c = src_[pos_];
      if (is_digit(c) || (c == '.' && pos_ + 1 < src_.size() && is_digit(src_[pos_ + 1])))
        out.push_back(number());
      else if (is_ident_start(c))
        out.push_back(identifier());
      else
        out.push_back(punct(c));
    }
  }

private:
  static int column(std::size_t pos) { return static_cast<int>(pos) + 1; }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  std::size_t digits(std::size_t at) const {
    while (at < src_.size() && is_digit(src_[at]))
      ++at;
    return at;
  }

  Token number() {
    const std::size_t start = pos_;
    std::size_t at = digits(pos_);
    if (at < src_.size() && src_[at] == '.')
      at = digits(at + 1);
    if (at < src_.size() && (src_[at] == 'e' || src_[at] == 'E')) {
      std::size_t exp = at + 1;
      if (exp < src_.size() && (src_[exp] == '+' || src_[exp] == '-'))
        ++exp;
      const std::size_t end = digits(exp);
      if (end == exp)
        throw LexError("malformed number '" + std::string(src_.substr(start, exp - start)) +
                           "': exponent needs digits",
                       column(start));
      at = end;
    }
    if (at < src_.size() && (is_ident_char(src_[at]) || src_[at] == '.'))
      throw LexError("malformed number '" + std::string(src_.substr(start, at + 1 - start)) + "'",
                     column(start));

    const std::string text(src_.substr(start, at - start));
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value))
      throw LexError("malformed number '" + text + "'", column(start));
    pos_ = at;
    Token t{TokenKind::Number, text, column(start)};
    t.number = value;
    return t;
  }

  Token identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && is_ident_char(src_[pos_]))
      ++pos_;
    std::string text(src_.substr(start, pos_ - start));
    Token t{TokenKind::Ident, text, column(start)};
    if (text.size() == 2 && (text[0] == 'e' || text[0] == 'E') && text[1] >= '1' &&
        text[1] <= '4') {
      t.kind = TokenKind::Basis;
      t.basis = text[1] - '0';
    }
    return t;
  }

  Token punct(char c) {
    TokenKind kind;
    switch (c) {
    case '+': kind = TokenKind::Plus; break;
    case '-': kind = TokenKind::Minus; break;
    case '*': kind = TokenKind::Star; break;
    case '/': kind = TokenKind::Slash; break;
    case '\\': kind = TokenKind::Backslash; break;
    case '(': kind = TokenKind::LParen; break;
    case ')': kind = TokenKind::RParen; break;
    default: {
      const unsigned char u = static_cast<unsigned char>(c);
      char shown[8];
      if (u >= 0x20 && u < 0x7f)
        std::snprintf(shown, sizeof shown, "%c", c);
      else
        std::snprintf(shown, sizeof shown, "\\x%02X", u);
      throw LexError(std::string("unexpected character '") + shown + "'", column(pos_));
    }
    }
    Token t{kind, std::string(1, c), column(pos_)};
    ++pos_;
    return t;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

} // namespace

std::vector<Token> tokenize(std::string_view input) { return Lexer(input).run(); }

std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
  case TokenKind::Number: return "number";
  case TokenKind::Basis: return "basis element";
  case TokenKind::Plus: return "'+'";
  case TokenKind::Minus: return "'-'";
  case TokenKind::Star: return "'*'";
  case TokenKind::Slash: return "'/'";
  case TokenKind::Backslash: return "'\\'";
  case TokenKind::LParen: return "'('";
  case TokenKind::RParen: return "')'";
  case TokenKind::Ident: return "identifier";
  case TokenKind::End: return "end of input";
  }
  return "?";
}

} // namespace hns4::expr

#include "fanocalc/expr.hpp"

#include <cctype>

namespace fanocalc {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident(char c) { return is_alpha(c) || is_digit(c) || c == '\''; }

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < text.size()) {
    const char c = text[k];
    const int col = static_cast<int>(k) + 1;
    if (c == ' ' || c == '\t') {
      ++k;
      continue;
    }
    if (is_digit(c)) {
      std::size_t end = k;
      while (end < text.size() && is_digit(text[end])) ++end;
      const bool after_caret = !out.empty() && out.back().kind == TokenKind::Caret;
      if (!after_caret && end + 1 < text.size() && text[end] == '/' && is_digit(text[end + 1])) {
        std::size_t den_end = end + 1;
        while (den_end < text.size() && is_digit(text[den_end])) ++den_end;
        const std::string_view den = text.substr(end + 1, den_end - end - 1);
        if (den.find_first_not_of('0') == std::string_view::npos) {
          throw ExprError("zero denominator in \"" + std::string(text.substr(k, den_end - k)) + "\"", col);
        }
        end = den_end;
      }
      out.push_back({TokenKind::Number, std::string(text.substr(k, end - k)), col});
      k = end;
      continue;
    }
    if (is_alpha(c)) {
      std::size_t end = k + 1;
      while (end < text.size() && is_ident(text[end])) ++end;
      out.push_back({TokenKind::Symbol, std::string(text.substr(k, end - k)), col});
      k = end;
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '+': kind = TokenKind::Plus; break;
      case '-': kind = TokenKind::Minus; break;
      case '*': kind = TokenKind::Star; break;
      case '/': kind = TokenKind::Slash; break;
      case '^': kind = TokenKind::Caret; break;
      case '(': kind = TokenKind::LParen; break;
      case ')': kind = TokenKind::RParen; break;
      default: {
        const bool printable = std::isprint(static_cast<unsigned char>(c)) != 0;
        throw ExprError(printable ? "unexpected character '" + std::string(1, c) + "'"
                                  : "unexpected byte " + std::to_string(static_cast<unsigned char>(c)),
                        col);
      }
    }
    out.push_back({kind, std::string(1, c), col});
    ++k;
  }
  return out;
}

}  // namespace fanocalc

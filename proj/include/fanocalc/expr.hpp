#ifndef FANOCALC_EXPR_HPP
#define FANOCALC_EXPR_HPP

#include "fanocalc/chow.hpp"
#include "fanocalc/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fanocalc {

/// Lexing, parsing or evaluation failure; column is 1-based (0 when unknown).
class ExprError : public std::runtime_error {
 public:
  ExprError(const std::string& message, int column)
      : std::runtime_error(column > 0 ? "column " + std::to_string(column) + ": " + message : message),
        column_(column) {}
  int column() const { return column_; }

 private:
  int column_;
};

enum class TokenKind { Number, Symbol, Plus, Minus, Star, Slash, Caret, LParen, RParen };

struct Token {
  TokenKind kind;
  std::string text;
  int pos;  // 1-based column of the first character

  friend bool operator==(const Token&, const Token&) = default;
};

/**
 * Splits text into tokens. A number is "p" or "p/q" written without spaces;
 * right after '^' only the integer part is taken, so "x^2/8" is (x^2)/8.
 * Symbols match [A-Za-z][A-Za-z0-9']*.
 */
std::vector<Token> tokenize(std::string_view text);

enum class NodeKind { Literal, Symbol, Neg, Sum, Product, Quotient, Power };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  NodeKind kind;
  Rat value;            // Literal
  std::string name;     // Symbol
  unsigned exponent = 0;  // Power
  ExprPtr lhs;          // Neg and Power use lhs only
  ExprPtr rhs;
  int pos = 0;
};

/// Structural equality, ignoring source positions.
bool same_tree(const Expr& a, const Expr& b);
int tree_depth(const Expr& e);

constexpr int kMaxExprDepth = 64;

ExprPtr parse(const std::vector<Token>& tokens);
inline ExprPtr parse(std::string_view text) { return parse(tokenize(text)); }

/// Renders with the fewest parentheses that parse back to the same tree.
std::string print(const Expr& e);

ExprPtr make_literal(const Rat& v);
ExprPtr make_symbol(const std::string& name);
ExprPtr make_neg(ExprPtr x);
ExprPtr make_binary(NodeKind kind, ExprPtr lhs, ExprPtr rhs);
ExprPtr make_power(ExprPtr base, unsigned exponent);

using Value = std::variant<Rat, RingElem>;
using Bindings = std::map<std::string, Value>;

/**
 * Generators of ctx under their names, and with a trailing ' or p swapped
 * (K' and Kp name the same class). A generator named "-X" also binds X.
 * For an (L, H) context: K = -2L + c1 H, c1, and D = Delta = c1^2 - 4 c2/d.
 */
Bindings default_bindings(std::shared_ptr<const RingCtx> ctx);

struct EvalResult {
  Value value;
  std::optional<Rat> degree;  // set when the value is a nonzero class of top degree
  std::vector<std::string> notes;
};

EvalResult evaluate(const Expr& ast, std::shared_ptr<const RingCtx> ctx, const Bindings& bindings);

/// Shortest display form: the degree for top-degree classes, else the normal form.
std::string render(const EvalResult& r);

}  // namespace fanocalc

#endif  // FANOCALC_EXPR_HPP

#include "fanocalc/expr.hpp"

#include <algorithm>
#include <limits>

namespace fanocalc {

ExprPtr make_literal(const Rat& v) {
  auto e = std::make_shared<Expr>();
  e->kind = NodeKind::Literal;
  e->value = v;
  return e;
}

ExprPtr make_symbol(const std::string& name) {
  auto e = std::make_shared<Expr>();
  e->kind = NodeKind::Symbol;
  e->name = name;
  return e;
}

ExprPtr make_neg(ExprPtr x) {
  auto e = std::make_shared<Expr>();
  e->kind = NodeKind::Neg;
  e->lhs = std::move(x);
  return e;
}

ExprPtr make_binary(NodeKind kind, ExprPtr lhs, ExprPtr rhs) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

ExprPtr make_power(ExprPtr base, unsigned exponent) {
  auto e = std::make_shared<Expr>();
  e->kind = NodeKind::Power;
  e->lhs = std::move(base);
  e->exponent = exponent;
  return e;
}

bool same_tree(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case NodeKind::Literal: return a.value == b.value;
    case NodeKind::Symbol: return a.name == b.name;
    case NodeKind::Neg: return same_tree(*a.lhs, *b.lhs);
    case NodeKind::Power: return a.exponent == b.exponent && same_tree(*a.lhs, *b.lhs);
    default: return same_tree(*a.lhs, *b.lhs) && same_tree(*a.rhs, *b.rhs);
  }
}

int tree_depth(const Expr& e) {
  int d = 0;
  if (e.lhs) d = std::max(d, tree_depth(*e.lhs));
  if (e.rhs) d = std::max(d, tree_depth(*e.rhs));
  return d + 1;
}

namespace {

const char* describe(TokenKind k) {
  switch (k) {
    case TokenKind::Number: return "number";
    case TokenKind::Symbol: return "symbol";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Slash: return "'/'";
    case TokenKind::Caret: return "'^'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
  }
  return "token";
}

// expr  := term (('+' | '-') term)*
// term  := unary (('*' | '/') unary)*
// unary := '-' unary | power
// power := atom ['^' INTEGER]
// atom  := NUMBER | SYMBOL | '(' expr ')'
class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {}

  ExprPtr run() {
    if (toks_.empty()) throw ExprError("empty expression", 1);
    ExprPtr e = expr();
    if (pos_ < toks_.size()) {
      const Token& t = toks_[pos_];
      if (t.kind == TokenKind::RParen) throw ExprError("unbalanced ')'", t.pos);
      if (t.kind == TokenKind::Caret) throw ExprError("chained '^' needs parentheses", t.pos);
      if (t.kind == TokenKind::Number || t.kind == TokenKind::Symbol || t.kind == TokenKind::LParen) {
        throw ExprError("expected an operator before " + std::string(describe(t.kind)) + " \"" + t.text +
                            "\" (no implicit multiplication)",
                        t.pos);
      }
      throw ExprError("unexpected " + std::string(describe(t.kind)), t.pos);
    }
    if (tree_depth(*e) > kMaxExprDepth) {
      throw ExprError("expression tree deeper than " + std::to_string(kMaxExprDepth), e->pos > 0 ? e->pos : 1);
    }
    return e;
  }

 private:
  bool at(TokenKind k) const { return pos_ < toks_.size() && toks_[pos_].kind == k; }

  int end_col() const {
    if (toks_.empty()) return 1;
    const Token& last = toks_.back();
    return last.pos + static_cast<int>(last.text.size());
  }

  [[noreturn]] void missing_operand(const char* after) const {
    if (pos_ < toks_.size()) {
      throw ExprError(std::string("expected an operand after ") + after + ", found " +
                          describe(toks_[pos_].kind),
                      toks_[pos_].pos);
    }
    throw ExprError(std::string("dangling ") + after + " at end of input", end_col());
  }

  // Bounds recursion through '(' and unary '-'; the tree depth is checked once at the end.
  void enter(int col) {
    if (++depth_ > kMaxExprDepth) {
      throw ExprError("expression nests deeper than " + std::to_string(kMaxExprDepth), col);
    }
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (at(TokenKind::Plus) || at(TokenKind::Minus)) {
      const Token& op = toks_[pos_++];
      if (pos_ >= toks_.size()) missing_operand(op.kind == TokenKind::Plus ? "'+'" : "'-'");
      ExprPtr rhs = term();
      if (op.kind == TokenKind::Minus) {
        auto neg = std::const_pointer_cast<Expr>(make_neg(rhs));
        neg->pos = op.pos;
        rhs = neg;
      }
      auto node = std::const_pointer_cast<Expr>(make_binary(NodeKind::Sum, lhs, rhs));
      node->pos = op.pos;
      lhs = node;
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    while (at(TokenKind::Star) || at(TokenKind::Slash)) {
      const Token& op = toks_[pos_++];
      if (pos_ >= toks_.size()) missing_operand(op.kind == TokenKind::Star ? "'*'" : "'/'");
      ExprPtr rhs = unary();
      auto node = std::const_pointer_cast<Expr>(
          make_binary(op.kind == TokenKind::Star ? NodeKind::Product : NodeKind::Quotient, lhs, rhs));
      node->pos = op.pos;
      lhs = node;
    }
    return lhs;
  }

  ExprPtr unary() {
    if (at(TokenKind::Minus)) {
      const Token& op = toks_[pos_++];
      enter(op.pos);
      auto node = std::const_pointer_cast<Expr>(make_neg(unary()));
      node->pos = op.pos;
      --depth_;
      return node;
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (!at(TokenKind::Caret)) return base;
    const Token& op = toks_[pos_++];
    if (pos_ >= toks_.size()) missing_operand("'^'");
    const Token& ex = toks_[pos_];
    if (ex.kind != TokenKind::Number || ex.text.find('/') != std::string::npos) {
      throw ExprError("exponent must be an integer literal", ex.pos);
    }
    ++pos_;
    const BigInt big(ex.text);
    if (big > std::numeric_limits<unsigned>::max()) throw ExprError("exponent too large", ex.pos);
    auto node = std::const_pointer_cast<Expr>(make_power(base, static_cast<unsigned>(big)));
    node->pos = op.pos;
    return node;
  }

  ExprPtr atom() {
    if (pos_ >= toks_.size()) throw ExprError("unexpected end of input", end_col());
    const Token& t = toks_[pos_];
    switch (t.kind) {
      case TokenKind::Number: {
        ++pos_;
        auto node = std::const_pointer_cast<Expr>(make_literal(Rat::parse(t.text)));
        node->pos = t.pos;
        return node;
      }
      case TokenKind::Symbol: {
        ++pos_;
        auto node = std::const_pointer_cast<Expr>(make_symbol(t.text));
        node->pos = t.pos;
        return node;
      }
      case TokenKind::LParen: {
        ++pos_;
        enter(t.pos);
        if (pos_ >= toks_.size()) throw ExprError("unbalanced '('", t.pos);
        ExprPtr inner = expr();
        if (!at(TokenKind::RParen)) throw ExprError("unbalanced '('", t.pos);
        ++pos_;
        --depth_;
        return inner;
      }
      case TokenKind::RParen:
        throw ExprError("unexpected ')'", t.pos);
      default:
        throw ExprError("expected an operand, found " + std::string(describe(t.kind)), t.pos);
    }
  }

  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

int prec(const Expr& e) {
  switch (e.kind) {
    case NodeKind::Sum: return 1;
    case NodeKind::Product:
    case NodeKind::Quotient: return 2;
    case NodeKind::Neg: return 3;
    case NodeKind::Power: return 4;
    default: return 5;
  }
}

std::string print_at(const Expr& e, int min_prec) {
  std::string s;
  switch (e.kind) {
    case NodeKind::Literal: s = e.value.str(); break;
    case NodeKind::Symbol: s = e.name; break;
    case NodeKind::Neg: s = "-" + print_at(*e.lhs, 3); break;
    case NodeKind::Power: s = print_at(*e.lhs, 5) + "^" + std::to_string(e.exponent); break;
    case NodeKind::Product: s = print_at(*e.lhs, 2) + "*" + print_at(*e.rhs, 3); break;
    // Spaced so that "1 / 2" stays a quotient rather than lexing as a literal.
    case NodeKind::Quotient: s = print_at(*e.lhs, 2) + " / " + print_at(*e.rhs, 3); break;
    case NodeKind::Sum:
      if (e.rhs->kind == NodeKind::Neg) {
        s = print_at(*e.lhs, 1) + " - " + print_at(*e.rhs->lhs, 2);
      } else {
        s = print_at(*e.lhs, 1) + " + " + print_at(*e.rhs, 2);
      }
      break;
  }
  // A negative literal can only come from a hand-built tree; keep it atomic.
  if (e.kind == NodeKind::Literal && e.value.sign() < 0) return "(" + s + ")";
  return prec(e) < min_prec ? "(" + s + ")" : s;
}

}  // namespace

ExprPtr parse(const std::vector<Token>& tokens) { return Parser(tokens).run(); }

std::string print(const Expr& e) { return print_at(e, 0); }

}  // namespace fanocalc

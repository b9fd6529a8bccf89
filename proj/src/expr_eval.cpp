#include "fanocalc/expr.hpp"

namespace fanocalc {

namespace {

std::optional<std::string> alias_of(const std::string& name) {
  if (name.size() < 2) return std::nullopt;
  if (name.back() == '\'') return name.substr(0, name.size() - 1) + "p";
  if (name.back() == 'p') return name.substr(0, name.size() - 1) + "'";
  return std::nullopt;
}

void bind_with_alias(Bindings& b, const std::string& name, const Value& v) {
  b.insert_or_assign(name, v);
  if (auto alias = alias_of(name)) b.emplace(*alias, v);
}

RingElem as_elem(const Value& v, const std::shared_ptr<const RingCtx>& ctx) {
  if (const auto* r = std::get_if<Rat>(&v)) return RingElem::constant(ctx, *r);
  return std::get<RingElem>(v);
}

class Evaluator {
 public:
  Evaluator(std::shared_ptr<const RingCtx> ctx, const Bindings& b) : ctx_(std::move(ctx)), b_(b) {}

  Value eval(const Expr& e) {
    switch (e.kind) {
      case NodeKind::Literal: return e.value;
      case NodeKind::Symbol: {
        auto it = b_.find(e.name);
        if (it == b_.end()) throw ExprError("unbound symbol \"" + e.name + "\"", e.pos);
        if (const auto* x = std::get_if<RingElem>(&it->second); x && !(x->ctx() == *ctx_)) {
          throw ExprError("symbol \"" + e.name + "\" belongs to another ring", e.pos);
        }
        return it->second;
      }
      case NodeKind::Neg: {
        Value v = eval(*e.lhs);
        if (auto* r = std::get_if<Rat>(&v)) return -*r;
        return -std::get<RingElem>(v);
      }
      case NodeKind::Sum: {
        Value a = eval(*e.lhs);
        Value b = eval(*e.rhs);
        if (both_scalar(a, b)) return std::get<Rat>(a) + std::get<Rat>(b);
        return as_elem(a, ctx_) + as_elem(b, ctx_);
      }
      case NodeKind::Product: {
        Value a = eval(*e.lhs);
        Value b = eval(*e.rhs);
        if (both_scalar(a, b)) return std::get<Rat>(a) * std::get<Rat>(b);
        if (const auto* r = std::get_if<Rat>(&a)) return *r * std::get<RingElem>(b);
        if (const auto* r = std::get_if<Rat>(&b)) return std::get<RingElem>(a) * *r;
        const RingElem& x = std::get<RingElem>(a);
        const RingElem& y = std::get<RingElem>(b);
        RingElem p = x * y;
        note_truncation(x, y, p, e.pos);
        return p;
      }
      case NodeKind::Quotient: {
        Value a = eval(*e.lhs);
        Value b = eval(*e.rhs);
        const auto* d = std::get_if<Rat>(&b);
        if (!d) throw ExprError("division by a ring element", e.pos);
        if (d->is_zero()) throw ExprError("division by zero", e.pos);
        if (const auto* r = std::get_if<Rat>(&a)) return *r / *d;
        return std::get<RingElem>(a) * (Rat(1) / *d);
      }
      case NodeKind::Power: {
        Value v = eval(*e.lhs);
        if (const auto* r = std::get_if<Rat>(&v)) {
          if (e.exponent <= 4096) return pow(*r, static_cast<int>(e.exponent));
          // Only 0 and +-1 have huge powers of reasonable size.
          if (r->is_zero() || abs(*r) == Rat(1)) return pow(*r, 2 - static_cast<int>(e.exponent % 2));
          throw ExprError("exponent too large for a scalar", e.pos);
        }
        const RingElem& x = std::get<RingElem>(v);
        RingElem p = pow(x, e.exponent);
        if (p.is_zero() && !x.is_zero() && e.exponent > 0) {
          auto lowest = lowest_degree(x);
          if (lowest && *lowest * static_cast<long>(e.exponent) > ctx_->n + 1) {
            notes_.push_back("column " + std::to_string(e.pos) + ": power exceeds dimension " +
                             std::to_string(ctx_->n + 1) + ", reported as zero");
          }
        }
        return p;
      }
    }
    throw ExprError("unknown node", e.pos);
  }

  std::vector<std::string> take_notes() { return std::move(notes_); }

 private:
  static bool both_scalar(const Value& a, const Value& b) {
    return std::holds_alternative<Rat>(a) && std::holds_alternative<Rat>(b);
  }

  std::optional<long> lowest_degree(const RingElem& x) const {
    for (int deg = 0; deg <= ctx_->n + 1; ++deg) {
      for (int i = 0; i <= 1 && i <= deg; ++i) {
        if (!x.coeff(i, deg - i).is_zero()) return deg;
      }
    }
    return std::nullopt;
  }

  void note_truncation(const RingElem& x, const RingElem& y, const RingElem& p, int pos) {
    if (!p.is_zero() || x.is_zero() || y.is_zero()) return;
    auto dx = lowest_degree(x);
    auto dy = lowest_degree(y);
    if (dx && dy && *dx + *dy > ctx_->n + 1) {
      notes_.push_back("column " + std::to_string(pos) + ": product exceeds dimension " +
                       std::to_string(ctx_->n + 1) + ", reported as zero");
    }
  }

  std::shared_ptr<const RingCtx> ctx_;
  const Bindings& b_;
  std::vector<std::string> notes_;
};

}  // namespace

Bindings default_bindings(std::shared_ptr<const RingCtx> ctx) {
  Bindings b;
  const RingElem g1 = RingElem::generator(ctx, 0);
  const RingElem g2 = RingElem::generator(ctx, 1);
  const auto& [n1, n2] = ctx->gen_names;
  if (!n1.empty() && n1.front() == '-') {
    bind_with_alias(b, n1.substr(1), -g1);
  } else {
    bind_with_alias(b, n1, g1);
  }
  bind_with_alias(b, n2, g2);
  if (n1 == "L") {
    // -K = 2L - c1 H on the projectivization.
    const Rat c1 = ctx->rel_a;
    b.emplace("K", Rat(-2) * g1 + c1 * g2);
    b.emplace("c1", c1);
    b.emplace("D", ctx->discriminant());
    b.emplace("Delta", ctx->discriminant());
  }
  return b;
}

EvalResult evaluate(const Expr& ast, std::shared_ptr<const RingCtx> ctx, const Bindings& bindings) {
  Evaluator ev(ctx, bindings);
  EvalResult out{ev.eval(ast), std::nullopt, {}};
  out.notes = ev.take_notes();
  if (const auto* x = std::get_if<RingElem>(&out.value)) {
    if (x->homogeneous_degree() == ctx->n + 1) out.degree = intersection_degree(*x);
  }
  return out;
}

std::string render(const EvalResult& r) {
  if (r.degree) return r.degree->str();
  if (const auto* q = std::get_if<Rat>(&r.value)) return q->str();
  return std::get<RingElem>(r.value).str();
}

}  // namespace fanocalc

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fanocalc/expr.hpp"
#include "support.hpp"

using namespace fanocalc;
using testing::Rng;

namespace {

std::shared_ptr<const RingCtx> load(const std::string& name) {
  return std::make_shared<const RingCtx>(load_context(testing::ctx_path(name)));
}

RingElem as_elem(const Value& v, const std::shared_ptr<const RingCtx>& ctx) {
  if (const Rat* r = std::get_if<Rat>(&v)) return RingElem::constant(ctx, *r);
  return std::get<RingElem>(v);
}

int error_column(std::string_view text) {
  try {
    parse(text);
  } catch (const ExprError& e) {
    return e.column();
  }
  return -1;
}

std::string error_message(std::string_view text) {
  try {
    parse(text);
  } catch (const ExprError& e) {
    return e.what();
  }
  return "";
}

// Random trees over L, H and small nonnegative literals. Division only by
// nonzero literals so that evaluation stays defined.
ExprPtr random_tree(Rng& rng, int depth) {
  const int pick = depth <= 0 ? rng.integer(0, 2) : rng.integer(0, 7);
  switch (pick) {
    case 0:
      return make_literal(Rat(BigInt(rng.integer(0, 9)), BigInt(rng.integer(1, 4))));
    case 1:
      return make_symbol("L");
    case 2:
      return make_symbol("H");
    case 3:
      return make_neg(random_tree(rng, depth - 1));
    case 4:
      return make_binary(NodeKind::Sum, random_tree(rng, depth - 1), random_tree(rng, depth - 1));
    case 5:
      return make_binary(NodeKind::Product, random_tree(rng, depth - 1), random_tree(rng, depth - 1));
    case 6:
      return make_binary(NodeKind::Quotient, random_tree(rng, depth - 1),
                         make_literal(Rat(BigInt(rng.integer(1, 5)), BigInt(rng.integer(1, 3)))));
    default:
      return make_power(random_tree(rng, depth - 1), static_cast<unsigned>(rng.integer(0, 3)));
  }
}

}  // namespace

TEST_CASE("tokenize") {
  const auto toks = tokenize("(-K + 2*H)^3");
  CHECK(toks.size() == 10);
  CHECK(toks[0].kind == TokenKind::LParen);
  CHECK(toks[9].kind == TokenKind::Number);
  for (std::size_t k = 1; k < toks.size(); ++k) CHECK(toks[k].pos > toks[k - 1].pos);

  const auto primed = tokenize("K'^2 - 5*K'*H' + 7*H'^2");
  std::vector<std::string> symbols;
  for (const auto& t : primed) {
    if (t.kind == TokenKind::Symbol) symbols.push_back(t.text);
  }
  CHECK(symbols == std::vector<std::string>{"K'", "K'", "H'", "H'"});

  const auto frac = tokenize("3/4*x");
  REQUIRE(frac.size() == 3);
  CHECK(frac[0].text == "3/4");
  const auto after_caret = tokenize("cp^2/8");
  REQUIRE(after_caret.size() == 5);
  CHECK(after_caret[3].kind == TokenKind::Slash);

  CHECK_THROWS_AS(tokenize("2/0"), ExprError);
  try {
    tokenize("1 + $");
    FAIL("expected ExprError");
  } catch (const ExprError& e) {
    CHECK(e.column() == 5);
  }
}

TEST_CASE("parse shapes") {
  const auto e = parse("-K+t*H");
  const auto want = make_binary(NodeKind::Sum, make_neg(make_symbol("K")),
                                make_binary(NodeKind::Product, make_symbol("t"), make_symbol("H")));
  CHECK(same_tree(*e, *want));

  const auto p = parse("(L+H)^5");
  CHECK(same_tree(*p, *make_power(make_binary(NodeKind::Sum, make_symbol("L"), make_symbol("H")), 5)));

  // '^' above unary minus, which is above '*'.
  CHECK(same_tree(*parse("-L^2"), *make_neg(make_power(make_symbol("L"), 2))));
  CHECK(same_tree(*parse("a-b-c"), *parse("(a-b)-c")));
  CHECK(same_tree(*parse("a*b*c"), *parse("(a*b)*c")));
  CHECK_FALSE(same_tree(*parse("a*b*c"), *parse("a*(b*c)")));
}

TEST_CASE("parse errors carry columns") {
  CHECK(error_message("L^H").find("exponent must be an integer literal") != std::string::npos);
  CHECK(error_column("L^H") == 3);
  CHECK(error_column("2H") == 2);
  CHECK(error_column("1 +") == 4);  // end of input
  CHECK(error_message("1 +").find("dangling '+'") != std::string::npos);
  CHECK(error_column("(1 + 2") > 0);
  CHECK(error_column("1 + 2)") == 6);
  CHECK(error_column("L^2^3") == 4);
  CHECK(error_column("") >= 0);
  CHECK(error_column("* 2") == 1);
  CHECK(error_column("L^2.5") > 0);
}

TEST_CASE("depth limit") {
  const std::string shallow = std::string(30, '(') + "x" + std::string(30, ')');
  CHECK_NOTHROW(parse(shallow));
  const std::string deep = std::string(70, '(') + "x" + std::string(70, ')');
  CHECK_THROWS_AS(parse(deep), ExprError);
  CHECK_THROWS_AS(parse(std::string(70, '-') + "x"), ExprError);
  std::string chain = "x";
  for (int k = 0; k < 70; ++k) chain += "+x";
  // Left-nested sums also count towards the depth.
  CHECK_THROWS_AS(parse(chain), ExprError);
}

TEST_CASE("print then parse gives the same tree (100 random trees)") {
  Rng rng(23);
  for (int k = 0; k < 100; ++k) {
    const ExprPtr t = random_tree(rng, 5);
    const std::string text = print(*t);
    CAPTURE(text);
    const ExprPtr back = parse(text);
    CHECK(same_tree(*t, *back));
    CHECK(print(*back) == text);
  }
  CHECK(print(*parse("a - (b - c)")) == "a - (b - c)");
  CHECK(print(*parse("(a*b)^2")) == "(a*b)^2");
}

TEST_CASE("evaluation distributes over sums and stays in normal form") {
  const auto ctx = std::make_shared<const RingCtx>(RingCtx::make(4, Rat(3), Rat::parse("-2/5"), Rat(7)));
  const Bindings b = default_bindings(ctx);
  Rng rng(29);
  for (int k = 0; k < 100; ++k) {
    const ExprPtr x = random_tree(rng, 3);
    const ExprPtr y = random_tree(rng, 3);
    const RingElem vx = as_elem(evaluate(*x, ctx, b).value, ctx);
    const RingElem vy = as_elem(evaluate(*y, ctx, b).value, ctx);
    CHECK(as_elem(evaluate(*make_binary(NodeKind::Sum, x, y), ctx, b).value, ctx) == vx + vy);
    CHECK(as_elem(evaluate(*make_binary(NodeKind::Product, x, y), ctx, b).value, ctx) == vx * vy);

    Polynomial raw;
    for (int j = 0; j <= ctx->n; ++j) {
      for (int i = 0; i < 2; ++i) raw[{i, j}] = vx.coeff(i, j);
    }
    CHECK(reduce(raw, ctx) == vx);
  }
}

TEST_CASE("evaluate: identities from the conic cases") {
  const auto w = load("w36.ctx");
  const EvalResult cw = evaluate(*parse("K^2 - D*H^2"), w, default_bindings(w));
  CHECK(as_elem(cw.value, w).is_zero());
  CHECK_FALSE(cw.degree.has_value());

  const EvalResult kh = evaluate(*parse("(4*L+3*H)*(L+H)^5"), w, default_bindings(w));
  REQUIRE(kh.degree.has_value());
  CHECK(*kh.degree == Rat(-2));
  CHECK(render(kh) == "-2");

  const auto kp = load("kprime_1_4.ctx");
  Bindings b = default_bindings(kp);
  b["cp"] = Rat(-10);
  const EvalResult v = evaluate(
      *parse("(1/2)*Kp^4*Hp^2 - (cp/4)*Kp^3*Hp^3 + (cp^2/8)*Kp^2*Hp^4 - (cp^3/16)*Kp*Hp^5"), kp, b);
  REQUIRE(v.degree.has_value());
  CHECK(*v.degree == Rat(-395));
  // K' and Kp are the same class.
  CHECK(as_elem(evaluate(*parse("K'*H'^5"), kp, b).value, kp) == as_elem(evaluate(*parse("Kp*Hp^5"), kp, b).value, kp));
  CHECK(*evaluate(*parse("K'*H'^5"), kp, b).degree == Rat(-2));
}

TEST_CASE("evaluate: scalars, notes and errors") {
  const auto ctx = std::make_shared<const RingCtx>(RingCtx::make(2, Rat(0), Rat(-3), Rat(1)));
  const Bindings b = default_bindings(ctx);
  const EvalResult s = evaluate(*parse("(1/2)^3 - 1/8"), ctx, b);
  REQUIRE(std::holds_alternative<Rat>(s.value));
  CHECK(std::get<Rat>(s.value).is_zero());

  const EvalResult over = evaluate(*parse("L^4"), ctx, b);
  CHECK(as_elem(over.value, ctx).is_zero());
  CHECK_FALSE(over.notes.empty());

  CHECK_THROWS_AS(evaluate(*parse("Z*L"), ctx, b), ExprError);
  CHECK_THROWS_AS(evaluate(*parse("1/L"), ctx, b), ExprError);
  CHECK_THROWS_AS(evaluate(*parse("L/0"), ctx, b), ExprError);
  try {
    evaluate(*parse("L + zz"), ctx, b);
    FAIL("expected ExprError");
  } catch (const ExprError& e) {
    CHECK(e.column() == 5);
  }
}

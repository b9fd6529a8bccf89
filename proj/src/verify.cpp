#include "fanocalc/verify.hpp"

#include "fanocalc/basis.hpp"
#include "fanocalc/classify.hpp"
#include "fanocalc/expr.hpp"
#include "fanocalc/niven.hpp"
#include "fanocalc/quadratic.hpp"
#include "fanocalc/report.hpp"
#include "fanocalc/slope.hpp"

#include <functional>
#include <random>
#include <set>
#include <tuple>

namespace fanocalc {

namespace {

class Check {
 public:
  Check(std::string name, std::string anchor) { r_.name = std::move(name), r_.anchor = std::move(anchor); }

  // Records the first mismatch only.
  template <class T>
  void expect_eq(const T& actual, const T& expected, const std::string& what) {
    ++r_.cases;
    if (!r_.passed || actual == expected) return;
    r_.passed = false;
    r_.expected = what + " = " + show(expected);
    r_.actual = what + " = " + show(actual);
  }
  void expect(bool ok, const std::string& what) { expect_eq(ok, true, what); }

  CheckResult done() { return std::move(r_); }

 private:
  static std::string show(bool b) { return b ? "true" : "false"; }
  static std::string show(const Rat& x) { return x.str(); }
  static std::string show(int x) { return std::to_string(x); }
  static std::string show(const std::string& s) { return s; }
  static std::string show(const RingElem& e) { return e.str(); }
  static std::string show(const std::optional<int>& x) { return x ? std::to_string(*x) : "none"; }
  static std::string show(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
    return "[" + s + "]";
  }
  template <class T>
  static std::string show(const std::vector<std::vector<T>>& v) {
    std::string s;
    for (const auto& x : v) s += show(x) + ";";
    return s;
  }

  CheckResult r_;
};

// ---- random data -----------------------------------------------------------

struct Rng {
  std::mt19937 gen;
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
  Rat rat(int span, int max_den) { return Rat(BigInt(integer(-span, span)), BigInt(integer(1, max_den))); }
};

QuadNum random_quad(Rng& rng) {
  return QuadNum(rng.rat(6, 4), rng.rat(6, 4), -Rat(BigInt(rng.integer(1, 12)), BigInt(rng.integer(1, 4))));
}

std::shared_ptr<const RingCtx> random_ctx(Rng& rng, std::pair<std::string, std::string> names = {"L", "H"}) {
  return std::make_shared<const RingCtx>(RingCtx::make(rng.integer(2, 6), rng.rat(4, 3), rng.rat(4, 3),
                                                       Rat(BigInt(rng.integer(1, 40)), BigInt(rng.integer(1, 3))),
                                                       std::move(names)));
}

Polynomial random_poly(Rng& rng, int n) {
  Polynomial p;
  const int terms = rng.integer(1, 4);
  for (int k = 0; k < terms; ++k) p[{rng.integer(0, 3), rng.integer(0, n + 1)}] += rng.rat(5, 3);
  return p;
}

Polynomial as_poly(const RingElem& e) {
  Polynomial p;
  for (int j = 0; j < e.coeffs().rows(); ++j) {
    for (int i = 0; i < 2; ++i) {
      if (!e.coeffs()(j, i).is_zero()) p[{i, j}] = e.coeffs()(j, i);
    }
  }
  return p;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) out[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
  }
  return out;
}

ExprPtr random_tree(Rng& rng, int depth, const std::vector<std::string>& symbols) {
  const int pick = depth <= 0 ? rng.integer(0, 1) : rng.integer(0, 6);
  switch (pick) {
    case 0: return make_literal(Rat(BigInt(rng.integer(0, 9)), BigInt(rng.integer(1, 3))));
    case 1: return make_symbol(symbols[rng.integer(0, static_cast<int>(symbols.size()) - 1)]);
    case 2: return make_neg(random_tree(rng, depth - 1, symbols));
    case 3: return make_binary(NodeKind::Sum, random_tree(rng, depth - 1, symbols), random_tree(rng, depth - 1, symbols));
    case 4: return make_binary(NodeKind::Product, random_tree(rng, depth - 1, symbols), random_tree(rng, depth - 1, symbols));
    case 5: return make_binary(NodeKind::Quotient, random_tree(rng, depth - 1, symbols), make_literal(Rat(rng.integer(1, 5))));
    default: return make_power(random_tree(rng, depth - 1, symbols), static_cast<unsigned>(rng.integer(0, 3)));
  }
}

// ---- transcribed tables ----------------------------------------------------

struct ConicRow {
  int n, tau, tau_prime;
  Rat delta, c2, c1_prime, y_dot_f;
  int d;
  Rat deg_x, deg_x_prime;
  const char* x;
  const char* x_prime;
};

const std::vector<ConicRow>& conic_rows() {
  static const std::vector<ConicRow> rows = {
      {2, 2, 1, Rat(-12), Rat(3), Rat(-3), Rat(1), 1, Rat(1), Rat(1), "P^2", "P^2"},
      {3, 1, 2, Rat(-1), Rat(2), Rat(-4), Rat(0), 4, Rat(4), Rat(1), "V_4^3", "P^3"},
      {3, 2, 1, Rat(-4), Rat(2), Rat(-2), Rat(0), 2, Rat(2), Rat(2), "Q^3", "Q^3"},
      {5, 1, 3, Rat(-1, 3), Rat(0), Rat(-6), Rat(0), 0, Rat(36), Rat(2), "W_36^5", "Q^5"},
      {5, 3, 1, Rat(-3), Rat(0), Rat(-2), Rat(0), 0, Rat(4), Rat(18), "V_4^5", "K(G2)"},
  };
  return rows;
}

const std::vector<std::vector<std::string>>& type_D_rows() {
  static const std::vector<std::vector<std::string>> rows = {
      {"2", "3", "2", "0", "1", "1", "2", "1", "3"},
      {"3", "2", "1", "-1", "1", "3", "1", "2", "4"},
      {"4", "2", "1", "-1", "1", "3", "1", "3", "5"},
      {"4", "4", "3", "-1", "1", "1", "3", "1", "3"},
  };
  return rows;
}

std::vector<InvariantTuple> all_emitted(const FanoDataset& data) {
  std::vector<InvariantTuple> out;
  for (int n : {2, 3, 5}) {
    for (auto& t : enumerate_type_C(n, data).all_rows()) out.push_back(t);
    for (auto& t : enumerate_type_P(n, data)) out.push_back(t);
  }
  const TypeDResult d = enumerate_type_D(data);
  out.insert(out.end(), d.raw.begin(), d.raw.end());
  out.insert(out.end(), d.survivors.begin(), d.survivors.end());
  return out;
}

// ---- checks ----------------------------------------------------------------

CheckResult quad_pow_additive(Rng& rng) {
  Check c("quad_pow_additive", "powers in Q(sqrt(D)) add exponents");
  for (int k = 0; k < 200; ++k) {
    const QuadNum z = random_quad(rng);
    const unsigned a = static_cast<unsigned>(rng.integer(0, 12));
    const unsigned b = static_cast<unsigned>(rng.integer(0, 12));
    c.expect(quad_pow(z, a + b) == quad_pow(z, a) * quad_pow(z, b), "z^(a+b) = z^a z^b for z=" + to_string(z));
  }
  return c.done();
}

CheckResult norm_multiplicative(Rng& rng) {
  Check c("norm_multiplicative", "norm on Q(sqrt(D)) is multiplicative");
  for (int k = 0; k < 200; ++k) {
    const QuadNum z = random_quad(rng);
    const QuadNum w(rng.rat(6, 4), rng.rat(6, 4), z.delta());
    c.expect_eq((z * w).norm(), z.norm() * w.norm(), "norm(zw)");
  }
  return c.done();
}

CheckResult slope_angle() {
  Check c("slope_angle", "tau + sqrt(D) has argument pi/(n+1) when D = -tau^2 tan^2(pi/(n+1))");
  for (int n : {2, 3, 5}) {
    for (int tau = 1; tau <= 3; ++tau) {
      const Rat delta = -Rat(tau * tau) * *tan_sq_pi_over(n + 1);
      c.expect(is_negative_real(quad_pow(tau_point(Rat(tau), delta), static_cast<unsigned>(n + 1))),
               "n=" + std::to_string(n) + " tau=" + std::to_string(tau));
    }
  }
  return c.done();
}

CheckResult arg_antitone(Rng& rng) {
  Check c("arg_less_than_antitone", "arg(z) < pi/q is inherited by smaller q");
  for (int k = 0; k < 200; ++k) {
    QuadNum z = random_quad(rng);
    if (z.is_zero()) continue;
    if (z.im_sign() < 0) z = z.conj();
    for (int q = 3; q <= 12; ++q) {
      if (!arg_less_than(z, q)) continue;
      for (int p = 2; p < q; ++p) c.expect(arg_less_than(z, p), "q=" + std::to_string(q) + " p=" + std::to_string(p));
    }
  }
  return c.done();
}

CheckResult reduce_laws(Rng& rng) {
  Check c("reduce_laws", "normal form in the truncated ring is idempotent, linear and multiplicative");
  for (int k = 0; k < 1000; ++k) {
    const auto ctx = random_ctx(rng);
    const Polynomial p = random_poly(rng, ctx->n);
    const Polynomial q = random_poly(rng, ctx->n);
    const Rat s = rng.rat(5, 3);
    const RingElem rp = reduce(p, ctx);
    const RingElem rq = reduce(q, ctx);
    c.expect_eq(reduce(as_poly(rp), ctx), rp, "idempotence");
    Polynomial lin = p;
    for (const auto& [e, v] : q) lin[e] += s * v;
    c.expect_eq(reduce(lin, ctx), rp + s * rq, "linearity");
    c.expect_eq(reduce(poly_mul(p, q), ctx), rp * rq, "multiplicativity");
  }
  return c.done();
}

CheckResult chern_wu(Rng& rng) {
  Check c("chern_wu_identity", "K^2 = Delta H^2 on the projectivization");
  for (int k = 0; k < 20; ++k) {
    const auto ctx = random_ctx(rng);
    const RingElem l = RingElem::generator(ctx, 0);
    const RingElem h = RingElem::generator(ctx, 1);
    const RingElem kk = Rat(-2) * l + ctx->rel_a * h;
    c.expect_eq(kk * kk, ctx->discriminant() * h * h, "K^2 in " + serialize_context(*ctx));
  }
  return c.done();
}

CheckResult basis_roundtrip(const FanoDataset& data, Rng& rng) {
  Check c("basis_roundtrip", "changing basis and changing back is the identity");
  // A on the rings of the surviving conic bundles.
  int a_cases = 0;
  for (int n : {2, 3, 5}) {
    for (const auto& t : enumerate_type_C(n, data).survivors) {
      const RingCtx lh = RingCtx::make(n, Rat(t.c1), -t.c2_over_d, *t.deg_x);
      const auto mk = std::make_shared<const RingCtx>(minus_k_context(lh));
      const BasisMap a = basis_map_A(t.nu, t.nu_prime, t.mu, t.mu_prime, t.lambda);
      const auto kp = std::make_shared<const RingCtx>(derived_context(*mk, a));
      for (int k = 0; k < 20; ++k) {
        const RingElem x = reduce(random_poly(rng, n), mk);
        c.expect_eq(transport(transport(x, a, kp), reverse_transition(a), mk), x, "A round trip");
      }
      ++a_cases;
    }
  }
  c.expect(a_cases == 5, "A round trip on every conic ring");
  // Triangular substitutions keep G2, so they apply to any ring.
  for (int k = 0; k < 100; ++k) {
    const auto ctx = random_ctx(rng);
    BasisMap s{Matrix2r(), BasisLabel::Substitution};
    // Positive leading entry keeps the degree functional positive.
    const Rat p(BigInt(rng.integer(1, 4)), BigInt(rng.integer(1, 3)));
    s.entries << p, rng.rat(4, 3), Rat(0), Rat(1);
    const auto other = std::make_shared<const RingCtx>(derived_context(*ctx, s, std::make_pair(std::string("M"), std::string("H"))));
    const RingElem x = reduce(random_poly(rng, ctx->n), ctx);
    c.expect_eq(transport(transport(x, s, other), reverse_transition(s), ctx), x, "substitution round trip");
  }
  return c.done();
}

CheckResult cross_basis() {
  Check c("cross_basis_1_4", "monomials K'^a H'^b in the (1,4) conic context, two ways");
  const ExclusionReport rep = exclude_1_4();
  const std::vector<Rat> expected = {Rat(-110), Rat(-36), Rat(-10), Rat(-2)};
  const auto& direct = std::get<std::vector<Rat>>(rep.at("monomials_direct"));
  const auto& derived = std::get<std::vector<Rat>>(rep.at("monomials"));
  for (std::size_t k = 0; k < expected.size(); ++k) {
    c.expect_eq(direct.at(k), expected[k], "direct K'^" + std::to_string(4 - k) + " H'^" + std::to_string(2 + k));
    c.expect_eq(derived.at(k), expected[k], "derived K'^" + std::to_string(4 - k) + " H'^" + std::to_string(2 + k));
  }
  c.expect_eq(std::get<Rat>(rep.at("value")), Rat(-395), "combination");
  return c.done();
}

CheckResult conic_slope_rows() {
  Check c("conic_table_slopes", "conic-bundle tables: angle relation, c1', degree ratio, Y.f");
  for (const auto& r : conic_rows()) {
    const std::string at = "n=" + std::to_string(r.n) + " (" + std::to_string(r.tau) + "," + std::to_string(r.tau_prime) + ")";
    c.expect(check_rho_tau(r.n, Rat(r.tau), Rat(r.tau), r.delta), "rho=tau " + at);
    c.expect_eq(c1_prime(r.n, Rat(r.tau), Rat(r.tau_prime)), r.c1_prime, "c1' " + at);
    c.expect_eq(base_degree_ratio(r.n, Rat(r.tau)) * r.deg_x, r.deg_x_prime, "deg X' " + at);
    c.expect_eq(y_dot_f(r.c1_prime, Rat(r.tau_prime), 1), r.y_dot_f, "Y.f " + at);
  }
  return c.done();
}

CheckResult blowdown_slope_rows() {
  Check c("blowdown_table_slopes", "blow-down table: tau' solves the angle relation with rho = tau - 2/tau'");
  for (const auto& row : type_D_rows()) {
    const int n = std::stoi(row[0]);
    const Rat tau = Rat::parse(row[2]);
    const Rat c1 = Rat::parse(row[3]);
    const Rat d = Rat::parse(row[5]);
    const Rat delta = c1 * c1 - Rat(4) * Rat::parse(row[4]) / d;
    const int tau_prime = std::stoi(row[7]);
    c.expect_eq(solve_nu_prime(n, tau, delta, 1), std::optional<int>(tau_prime), "tau' for n=" + row[0] + " tau=" + row[2]);
    c.expect(check_rho_tau(n, tau, tau - Rat(2) / Rat(tau_prime), delta), "rho for n=" + row[0] + " tau=" + row[2]);
  }
  return c.done();
}

CheckResult tuple_rejections() {
  Check c("tuple_rejections", "each broken invariant has its own reason code");
  const InvariantTuple good = make_tuple(2, ContractionKind::C, 2, 1, 1, 0, Rat(-12));
  auto with = [&](const std::function<void(InvariantTuple&)>& f) {
    InvariantTuple t = good;
    f(t);
    return t.validate();
  };
  auto recompute = [](InvariantTuple& t) { t.c2_over_d = (Rat(t.c1) * Rat(t.c1) - t.delta) / Rat(4); };
  std::vector<std::pair<TupleError, std::optional<TupleError>>> cases = {
      {TupleError::MuMismatch, with([](InvariantTuple& t) { t.mu_prime = 3; })},
      {TupleError::IndexRelation, with([](InvariantTuple& t) { t.i += 1; })},
      {TupleError::DeltaNonNegative, with([&](InvariantTuple& t) { t.delta = Rat(1); recompute(t); })},
      {TupleError::C2Mismatch, with([](InvariantTuple& t) { t.c2_over_d += Rat(1); })},
      {TupleError::Parity, with([&](InvariantTuple& t) { t.c1 = -1; recompute(t); })},
      {TupleError::RhoTau, with([&](InvariantTuple& t) { t.delta = Rat(-6); recompute(t); })},
  };
  // c2/d = 1/2 is fine for V_4^3 with d = 4 but not with d = 1.
  InvariantTuple half = make_tuple(3, ContractionKind::C, 1, 2, 1, -1, Rat(-1));
  half.d = 1;
  cases.emplace_back(TupleError::C2NotIntegral, half.validate());
  std::set<TupleError> seen;
  for (const auto& [want, got] : cases) {
    c.expect_eq(got ? to_string(*got) : std::string("valid"), to_string(want), "reason for " + to_string(want));
    if (got) seen.insert(*got);
  }
  c.expect_eq(static_cast<int>(seen.size()), static_cast<int>(cases.size()), "distinct codes");
  c.expect(!good.validate().has_value(), "unperturbed tuple is valid");
  return c.done();
}

CheckResult c2_integral(const FanoDataset& data) {
  Check c("c2_integral", "c2 = (c2/d) d is an integer class");
  for (const auto& t : all_emitted(data)) {
    if (t.d) c.expect(t.c2()->is_integer(), "c2 for n=" + std::to_string(t.n) + " tau=" + t.tau.str());
  }
  return c.done();
}

CheckResult conic_tables(const FanoDataset& data) {
  Check c("conic_tables", "conic-bundle tables for n = 2, 3, 5");
  std::vector<InvariantTuple> got;
  for (int n : {2, 3, 5}) {
    const auto r = enumerate_type_C(n, data);
    got.insert(got.end(), r.survivors.begin(), r.survivors.end());
  }
  c.expect_eq(static_cast<int>(got.size()), static_cast<int>(conic_rows().size()), "survivor count");
  for (std::size_t k = 0; k < got.size() && k < conic_rows().size(); ++k) {
    const auto& t = got[k];
    const auto& r = conic_rows()[k];
    const std::string at = "row " + std::to_string(k + 1);
    c.expect_eq(t.n, r.n, at + " n");
    c.expect_eq(t.tau, Rat(r.tau), at + " tau");
    c.expect_eq(t.tau_prime, Rat(r.tau_prime), at + " tau'");
    c.expect_eq(t.delta, r.delta, at + " Delta");
    c.expect_eq(*t.c1_prime, r.c1_prime, at + " c1'");
    c.expect_eq(*t.y_dot_f, r.y_dot_f, at + " Y.f");
    c.expect_eq(*t.deg_x, r.deg_x, at + " deg X");
    c.expect_eq(*t.deg_x_prime, r.deg_x_prime, at + " deg X'");
    c.expect_eq(t.name_x.value_or(""), std::string(r.x), at + " X");
    c.expect_eq(t.name_x_prime.value_or(""), std::string(r.x_prime), at + " X'");
    if (r.d > 0) {
      c.expect_eq(t.d.value_or(0), r.d, at + " d");
      c.expect_eq(t.c2().value_or(Rat(-1)), r.c2, at + " c2");
    }
  }
  return c.done();
}

CheckResult blowdown_table(const FanoDataset& data) {
  Check c("blowdown_table", "blow-down table before the geometric filters, and its citations");
  const TypeDResult d = enumerate_type_D(data);
  std::vector<std::vector<std::string>> raw;
  for (const auto& t : d.raw) raw.push_back(type_D_raw_fields(t));
  c.expect_eq(raw, type_D_rows(), "raw rows");
  for (const auto& e : d.exclusions) c.expect(!e.citation.empty(), "citation for " + e.rule);
  std::vector<std::string> labels;
  for (const auto& t : d.survivors) labels.push_back(t.reason);
  c.expect_eq(labels, std::vector<std::string>{"(D1)"}, "survivor labels");
  return c.done();
}

CheckResult emitted_valid(const FanoDataset& data) {
  Check c("emitted_tuples_valid", "every enumerated tuple passes validation");
  for (const auto& t : all_emitted(data)) {
    const auto err = t.validate();
    c.expect_eq(err ? to_string(*err) : std::string("valid"), std::string("valid"),
                to_string(t.kind) + " n=" + std::to_string(t.n) + " tau=" + t.tau.str() + " tau'=" + t.tau_prime.str());
  }
  return c.done();
}

CheckResult congruence_scan() {
  Check c("congruence_scan", "congruences of lines with at least three VMRT components");
  std::vector<std::string> scan;
  for (int m = 2; m <= 19; ++m) {
    for (int z = 1; z < m; ++z) {
      const int den = m - z - 1;
      if (den <= 0 || (m - 1) % den != 0) continue;
      const int alpha = (m - 1) / den;
      if (alpha >= 3 && 3 * z <= 2 * m) scan.push_back(std::to_string(alpha) + "," + std::to_string(z) + "," + std::to_string(m));
    }
  }
  std::sort(scan.begin(), scan.end());
  std::vector<std::string> got;
  for (const auto& t : enumerate_congruences(19)) {
    got.push_back(std::to_string(t.alpha) + "," + std::to_string(t.z) + "," + std::to_string(t.m));
  }
  std::sort(got.begin(), got.end());
  c.expect_eq(got, scan, "tuples up to m=19");
  return c.done();
}

CheckResult determinism(const FanoDataset& data) {
  Check c("deterministic_output", "repeated runs give identical, byte-stable CSV sorted by (n, tau, tau')");
  const Bounds b;
  for (int rep = 0; rep < 2; ++rep) {
    const std::string c1 = render(report_type_C(data, std::nullopt), Format::Csv);
    const std::string c2 = render(report_type_C(data, std::nullopt), Format::Csv);
    const std::string d1 = render(report_type_D(data, b), Format::Csv);
    const std::string d2 = render(report_type_D(data, b), Format::Csv);
    c.expect_eq(c1, c2, "type C csv");
    c.expect_eq(d1, d2, "type D csv");
    c.expect(c1.find('\r') == std::string::npos && d1.find('\r') == std::string::npos, "LF line endings");
  }
  for (int n : {2, 3, 5}) {
    const auto rows = enumerate_type_C(n, data).all_rows();
    for (std::size_t k = 1; k < rows.size(); ++k) {
      const auto key = [](const InvariantTuple& t) { return std::make_tuple(t.n, t.tau, t.tau_prime); };
      c.expect(!(key(rows[k]) < key(rows[k - 1])), "order at n=" + std::to_string(n));
    }
  }
  return c.done();
}

CheckResult parser_roundtrip(Rng& rng) {
  Check c("parser_roundtrip", "parse(print(parse(s))) = parse(s)");
  const std::vector<std::string> symbols = {"L", "H", "K'", "Hp", "c1"};
  for (int k = 0; k < 100; ++k) {
    const ExprPtr tree = random_tree(rng, 4, symbols);
    const std::string text = print(*tree);
    const ExprPtr once = parse(text);
    const ExprPtr twice = parse(print(*once));
    c.expect(same_tree(*tree, *once), "tree of \"" + text + "\"");
    c.expect(same_tree(*once, *twice), "reparse of \"" + text + "\"");
  }
  return c.done();
}

CheckResult eval_laws(Rng& rng) {
  Check c("evaluate_laws", "evaluation distributes over sums and returns normal forms");
  const std::vector<std::string> symbols = {"L", "H", "K", "c1"};
  for (int k = 0; k < 100; ++k) {
    const auto ctx = random_ctx(rng);
    const Bindings b = default_bindings(ctx);
    const ExprPtr x = random_tree(rng, 3, symbols);
    const ExprPtr y = random_tree(rng, 3, symbols);
    const auto as_elem = [&](const Value& v) {
      if (const auto* r = std::get_if<Rat>(&v)) return RingElem::constant(ctx, *r);
      return std::get<RingElem>(v);
    };
    const RingElem sum = as_elem(evaluate(*make_binary(NodeKind::Sum, x, y), ctx, b).value);
    const RingElem parts = as_elem(evaluate(*x, ctx, b).value) + as_elem(evaluate(*y, ctx, b).value);
    c.expect_eq(sum, parts, "sum of \"" + print(*x) + "\" and \"" + print(*y) + "\"");
    c.expect_eq(reduce(as_poly(sum), ctx), sum, "normal form of \"" + print(*x) + " + " + print(*y) + "\"");
  }
  return c.done();
}

}  // namespace

std::vector<CheckResult> run_verify(const FanoDataset& data, std::uint32_t seed) {
  Rng rng{std::mt19937(seed)};
  std::vector<CheckResult> out;
  const auto guarded = [&](const std::string& name, const std::function<CheckResult()>& f) {
    try {
      out.push_back(f());
    } catch (const std::exception& e) {
      out.push_back({name, "check raised an exception", false, "no exception", e.what(), 0});
    }
  };
  guarded("quad_pow_additive", [&] { return quad_pow_additive(rng); });
  guarded("norm_multiplicative", [&] { return norm_multiplicative(rng); });
  guarded("slope_angle", [&] { return slope_angle(); });
  guarded("arg_less_than_antitone", [&] { return arg_antitone(rng); });
  guarded("reduce_laws", [&] { return reduce_laws(rng); });
  guarded("chern_wu_identity", [&] { return chern_wu(rng); });
  guarded("basis_roundtrip", [&] { return basis_roundtrip(data, rng); });
  guarded("cross_basis_1_4", [&] { return cross_basis(); });
  guarded("conic_table_slopes", [&] { return conic_slope_rows(); });
  guarded("blowdown_table_slopes", [&] { return blowdown_slope_rows(); });
  guarded("tuple_rejections", [&] { return tuple_rejections(); });
  guarded("c2_integral", [&] { return c2_integral(data); });
  guarded("conic_tables", [&] { return conic_tables(data); });
  guarded("blowdown_table", [&] { return blowdown_table(data); });
  guarded("emitted_tuples_valid", [&] { return emitted_valid(data); });
  guarded("congruence_scan", [&] { return congruence_scan(); });
  guarded("deterministic_output", [&] { return determinism(data); });
  guarded("parser_roundtrip", [&] { return parser_roundtrip(rng); });
  guarded("evaluate_laws", [&] { return eval_laws(rng); });
  return out;
}

}  // namespace fanocalc

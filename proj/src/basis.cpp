#include "fanocalc/basis.hpp"

#include <stdexcept>

namespace fanocalc {

std::string to_string(BasisLabel label) {
  switch (label) {
    case BasisLabel::A: return "A";
    case BasisLabel::AInverse: return "A_inverse";
    case BasisLabel::B: return "B";
    case BasisLabel::Substitution: return "substitution";
  }
  return "?";
}

Rat BasisMap::det() const {
  return entries(0, 0) * entries(1, 1) - entries(0, 1) * entries(1, 0);
}

BasisMap BasisMap::inverse() const {
  const Rat d = det();
  if (d.is_zero()) throw std::invalid_argument("basis map is singular");
  BasisMap inv;
  inv.entries << entries(1, 1) / d, -entries(0, 1) / d, -entries(1, 0) / d, entries(0, 0) / d;
  switch (label) {
    case BasisLabel::A: inv.label = BasisLabel::AInverse; break;
    case BasisLabel::AInverse: inv.label = BasisLabel::A; break;
    default: inv.label = label; break;
  }
  return inv;
}

BasisMap basis_map_A(int nu, int nu_prime, int mu, int mu_prime, int lambda) {
  if (lambda != 1 && lambda != 2) throw std::invalid_argument("lambda must be 1 or 2");
  if (mu <= 0 || mu_prime <= 0) throw std::invalid_argument("mu and mu' must be positive");
  const Rat l(lambda);
  const Rat m(mu);
  const Rat mp(mu_prime);
  BasisMap a;
  a.label = BasisLabel::A;
  a.entries << Rat(-nu) / l, (Rat(2 * lambda) - Rat(nu) * Rat(nu_prime)) / (l * mp),
      m / l, m * Rat(nu_prime) / (l * mp);
  return a;
}

BasisBReport basis_map_B(const Rat& nu, const Rat& nu_prime, const Rat& mu, const Rat& c1,
                         const Rat& delta, const Rat& d, const Rat& b, const Rat& d_prime) {
  if (mu.sign() <= 0 || b.sign() <= 0 || d.sign() <= 0 || d_prime.sign() <= 0) {
    throw std::invalid_argument("basis_map_B needs positive mu, b, d, d'");
  }
  const Rat nn = nu * nu_prime;
  BasisBReport r;
  r.map.label = BasisLabel::B;
  r.map.entries(0, 0) = (nn - Rat(1)) / b;
  r.map.entries(0, 1) = d / (Rat(4) * b * mu) *
                        (nu_prime * mu * mu * delta + Rat(2) * c1 * (Rat(1) - nn) * mu +
                         nu * (nn - Rat(2)));
  r.map.entries(1, 0) = nu * mu / d_prime;
  r.map.entries(1, 1) = d / (Rat(4) * d_prime) * (delta * mu * mu - Rat(2) * c1 * nu * mu + nu * nu);

  r.all_integral = true;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) r.all_integral = r.all_integral && r.map.entries(i, j).is_integer();
  }
  r.det = r.map.det();
  r.det_is_unit = r.det == Rat(1) || r.det == Rat(-1);
  r.identity_lhs = d * (nu * nu - delta * mu * mu);
  r.identity_rhs = Rat(4) * b * d_prime;
  r.identity_holds = r.identity_lhs == r.identity_rhs || r.identity_lhs == -r.identity_rhs;
  return r;
}

Matrix2r new_from_old(const BasisMap& map) {
  switch (map.label) {
    case BasisLabel::A: return map.inverse().entries;
    case BasisLabel::AInverse:
    case BasisLabel::Substitution: return map.entries;
    case BasisLabel::B: break;
  }
  throw std::invalid_argument("matrix B acts on codimension-2 classes, not on generators");
}

BasisMap reverse_transition(const BasisMap& map) {
  BasisMap fwd{new_from_old(map), BasisLabel::Substitution};
  return {fwd.inverse().entries, BasisLabel::Substitution};
}

namespace {

RingElem linear(const std::shared_ptr<const RingCtx>& ctx, const Rat& x, const Rat& y) {
  return x * RingElem::generator(ctx, 0) + y * RingElem::generator(ctx, 1);
}

}  // namespace

RingCtx derived_context(const RingCtx& ctx, const BasisMap& map,
                        std::optional<std::pair<std::string, std::string>> names) {
  const Matrix2r m = new_from_old(map);
  const Rat det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if (det.is_zero()) throw std::invalid_argument("degenerate basis map");

  auto old = std::make_shared<const RingCtx>(ctx);
  const RingElem g1 = linear(old, m(0, 0), m(0, 1));
  const RingElem g2 = linear(old, m(1, 0), m(1, 1));
  const int n = ctx.n;

  if (!pow(g2, n + 1).is_zero()) {
    throw std::invalid_argument("new second generator has nonzero top power");
  }

  // Solve g1^2 = a g1 g2 + b g2^2 in the degree-2 piece, coordinates (G1 G2, G2^2).
  const RingElem s = g1 * g1;
  const RingElem p = g1 * g2;
  const RingElem q = g2 * g2;
  Matrix2r sys;
  sys << p.coeff(1, 1), q.coeff(1, 1), p.coeff(0, 2), q.coeff(0, 2);
  Vector2r rhs(s.coeff(1, 1), s.coeff(0, 2));
  const Rat sys_det = sys(0, 0) * sys(1, 1) - sys(0, 1) * sys(1, 0);
  if (sys_det.is_zero()) throw std::invalid_argument("degenerate basis map");
  const Vector2r ab = sys.inverse() * rhs;

  const Rat degree = intersection_degree(g1 * pow(g2, n));
  if (degree.sign() <= 0) {
    throw std::invalid_argument("new generators give nonpositive degree " + degree.str());
  }
  return RingCtx::make(n, ab(0), ab(1), degree, names.value_or(ctx.gen_names));
}

RingElem transport(const RingElem& x, const BasisMap& map, std::shared_ptr<const RingCtx> target) {
  const Matrix2r m = new_from_old(map);
  const Rat det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if (det.is_zero()) throw std::invalid_argument("degenerate basis map");
  if (target->n != x.ctx().n) throw ContextMismatch("target ring has a different dimension");
  // old = m^-1 new
  const Matrix2r back = m.inverse();
  const RingElem g1 = linear(target, back(0, 0), back(0, 1));
  const RingElem g2 = linear(target, back(1, 0), back(1, 1));

  RingElem out(target);
  RingElem g2_pow = RingElem::constant(target, Rat(1));
  for (int j = 0; j <= x.ctx().n; ++j) {
    if (!x.coeff(0, j).is_zero()) out += x.coeff(0, j) * g2_pow;
    if (!x.coeff(1, j).is_zero()) out += x.coeff(1, j) * (g1 * g2_pow);
    g2_pow *= g2;
  }
  return out;
}

RingCtx minus_k_context(const RingCtx& lh_ctx) {
  BasisMap sub;
  sub.label = BasisLabel::Substitution;
  sub.entries << Rat(2), -lh_ctx.rel_a, Rat(0), Rat(1);
  return derived_context(lh_ctx, sub, std::make_pair(std::string("-K"), lh_ctx.gen_names.second));
}

}  // namespace fanocalc

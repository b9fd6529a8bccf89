#include "fanocalc/slope.hpp"

#include "fanocalc/niven.hpp"

#include <stdexcept>
#include <string>

namespace fanocalc {

namespace {

void require_cone_data(const Rat& tau, const Rat& delta) {
  if (delta.sign() >= 0) throw std::invalid_argument("rho/tau relation needs Delta < 0, got " + delta.str());
  if (tau.sign() <= 0) throw std::invalid_argument("rho/tau relation needs tau > 0, got " + tau.str());
}

Rat cos_sq(int n) {
  auto c = cos_sq_pi_over(n + 1);
  if (!c) throw std::invalid_argument("cos^2(pi/" + std::to_string(n + 1) + ") is not rational");
  return *c;
}

Rat cos_pow(int n, int e) {
  auto c = cos_pow_pi_over(n + 1, e);
  if (!c) {
    throw std::invalid_argument("cos^" + std::to_string(e) + "(pi/" + std::to_string(n + 1) +
                                ") is not rational");
  }
  return *c;
}

}  // namespace

bool check_rho_tau(int n, const Rat& tau, const Rat& rho, const Rat& delta) {
  require_cone_data(tau, delta);
  if (n < 1) throw std::invalid_argument("rho/tau relation needs n >= 1");
  const QuadNum t = tau_point(tau, delta);
  const QuadNum r(rho, Rat(1), delta);
  if (!is_negative_real(r * quad_pow(t, static_cast<unsigned>(n)))) return false;
  return arg_less_than(t, n);
}

std::optional<int> solve_nu_prime(int n, const Rat& tau, const Rat& delta, int mu) {
  require_cone_data(tau, delta);
  if (mu <= 0) return std::nullopt;
  const QuadNum t = tau_point(tau, delta);
  const QuadNum zn = quad_pow(t, static_cast<unsigned>(n));
  const QuadNum zn1 = zn * t;
  if (zn1.im_coeff().is_zero()) return std::nullopt;
  const Rat nu_prime = Rat(2) * zn.im_coeff() / (Rat(mu) * zn1.im_coeff());
  if (!nu_prime.is_integer() || nu_prime.sign() <= 0) return std::nullopt;
  const Rat rho = tau - Rat(2) / (Rat(mu) * nu_prime);
  if (!check_rho_tau(n, tau, rho, delta)) return std::nullopt;
  return static_cast<int>(nu_prime.to_int64());
}

Rat c1_prime(int n, const Rat& tau, const Rat& tau_prime) {
  if (tau.is_zero()) throw std::invalid_argument("c1' needs tau != 0");
  return Rat(8) / tau * cos_sq(n) - Rat(4) * tau_prime;
}

Rat base_degree_ratio(int n, const Rat& tau) {
  if (tau.sign() <= 0) throw std::invalid_argument("degree ratio needs tau > 0");
  return pow(tau, n - 1) / (pow(Rat(2), n) * cos_pow(n, n - 1));
}

Rat y_dot_f(const Rat& c1_prime, const Rat& tau_prime, int mu) {
  return -(c1_prime * Rat(mu) + Rat(2) * tau_prime);
}

Rat pushforward_R(int nu, int nu_prime, const Rat& c2_push_coeff) {
  return Rat((nu_prime + 2) * (nu * nu_prime - 1) + 2 * (nu + 1)) - c2_push_coeff;
}

bool adjunction_check(const RingCtx& kprime_ctx, const Rat& c1_prime, const Rat& deg_x_prime) {
  auto ctx = std::make_shared<const RingCtx>(
      RingCtx::make(kprime_ctx.n, kprime_ctx.rel_a, kprime_ctx.rel_b, kprime_ctx.degree_s,
                    kprime_ctx.gen_names));
  const RingElem g1 = RingElem::generator(ctx, 0);
  const RingElem g2 = RingElem::generator(ctx, 1);
  // (-K')^2 = K'^2
  const Rat k2 = intersection_degree(g1 * g1 * pow(g2, static_cast<unsigned>(ctx->n - 1)));
  return k2 == c1_prime * deg_x_prime;
}

std::pair<Rat, Rat> kprime_degree_formulas(int n, const Rat& tau, int nu_prime, int mu,
                                           const Rat& minus_khn) {
  const Rat m(mu);
  const Rat c_pow = cos_pow(n, n - 1);
  const Rat first = pow(m * tau, n - 1) / (pow(Rat(2), n) * c_pow) * minus_khn;
  const Rat second = pow(m, n - 3) * pow(tau, n - 2) / (pow(Rat(2), n - 1) * c_pow) *
                     (Rat(2) * cos_sq(n) - Rat(nu_prime) * m * tau) * minus_khn;
  return {first, second};
}

}  // namespace fanocalc

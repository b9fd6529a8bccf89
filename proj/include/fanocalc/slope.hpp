#ifndef FANOCALC_SLOPE_HPP
#define FANOCALC_SLOPE_HPP

#include "fanocalc/chow.hpp"
#include "fanocalc/quadratic.hpp"
#include "fanocalc/rational.hpp"

#include <optional>
#include <utility>

namespace fanocalc {

/**
 * Exact form of n arg(tau + sqrt(D)) + arg(rho + sqrt(D)) = pi.
 *
 * Checks that (rho + sqrt(D)) (tau + sqrt(D))^n is a negative real and
 * that n arg(tau + sqrt(D)) < pi; the second condition rules out the
 * solutions where the angles add up to 3 pi, 5 pi, ...
 * Throws std::invalid_argument unless D < 0 and tau > 0.
 */
bool check_rho_tau(int n, const Rat& tau, const Rat& rho, const Rat& delta);

/// nu' = 2 b_n / (mu b_(n+1)) where (tau + sqrt(D))^k = a_k + b_k sqrt(D),
/// kept only if it is a positive integer and rho = tau - 2/(mu nu') passes
/// check_rho_tau.
std::optional<int> solve_nu_prime(int n, const Rat& tau, const Rat& delta, int mu);

/// (8/tau) cos^2(pi/(n+1)) - 4 tau'. Requires a rational cos^2.
Rat c1_prime(int n, const Rat& tau, const Rat& tau_prime);

/// Factor r with H_X'^n = r H_X^n in the conic case:
/// tau^(n-1) / (2^n cos^(n-1)(pi/(n+1))).
Rat base_degree_ratio(int n, const Rat& tau);

/// -(c1' mu + 2 tau').
Rat y_dot_f(const Rat& c1_prime, const Rat& tau_prime, int mu);

/// Coefficient of H_X in the pushforward of the ramification class:
/// (nu'+2)(nu nu'-1) + 2(nu+1) - c2_push_coeff.
Rat pushforward_R(int nu, int nu_prime, const Rat& c2_push_coeff);

/// In a (-K', H') context: K'^2 H'^(n-1) == c1' * deg_X'.
bool adjunction_check(const RingCtx& kprime_ctx, const Rat& c1_prime, const Rat& deg_x_prime);

/// Closed forms for (-K' H'^n, K'^2 H'^(n-1)) in terms of -K H^n.
std::pair<Rat, Rat> kprime_degree_formulas(int n, const Rat& tau, int nu_prime, int mu,
                                           const Rat& minus_khn);

/// tau + sqrt(delta) as an element of Q(sqrt(delta)).
inline QuadNum tau_point(const Rat& tau, const Rat& delta) { return QuadNum(tau, Rat(1), delta); }

}  // namespace fanocalc

#endif  // FANOCALC_SLOPE_HPP

#ifndef FANOCALC_NIVEN_HPP
#define FANOCALC_NIVEN_HPP

#include "fanocalc/rational.hpp"

#include <optional>

namespace fanocalc {

// Rational values of trigonometric functions at pi/q. By Niven's theorem
// these are the only rational values, so an empty result means the value
// is irrational (or, for tan at q = 2, undefined).

/// tan^2(pi/q): q = 1 -> 0, q = 3 -> 3, q = 4 -> 1, q = 6 -> 1/3.
std::optional<Rat> tan_sq_pi_over(int q);

/// cos^2(pi/q): q = 1 -> 1, q = 2 -> 0, q = 3 -> 1/4, q = 4 -> 1/2, q = 6 -> 3/4.
std::optional<Rat> cos_sq_pi_over(int q);

/// cos(pi/q): q = 1 -> -1, q = 2 -> 0, q = 3 -> 1/2.
std::optional<Rat> cos_pi_over(int q);

/// cos^e(pi/q) whenever it is rational: even exponents go through cos^2,
/// odd ones need cos itself to be rational.
std::optional<Rat> cos_pow_pi_over(int q, int e);

}  // namespace fanocalc

#endif  // FANOCALC_NIVEN_HPP

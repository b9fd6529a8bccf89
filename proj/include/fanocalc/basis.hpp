#ifndef FANOCALC_BASIS_HPP
#define FANOCALC_BASIS_HPP

#include "fanocalc/chow.hpp"
#include "fanocalc/eigen_rational.hpp"

#include <optional>
#include <string>
#include <utility>

namespace fanocalc {

enum class BasisLabel {
  A,             // rows give (-K, H) in terms of (-K', H')
  AInverse,      // rows give (-K', H') in terms of (-K, H)
  B,             // codimension-2 bases; matrix data only
  Substitution,  // rows give new generators in terms of old ones
};

std::string to_string(BasisLabel label);

struct BasisMap {
  Matrix2r entries;
  BasisLabel label = BasisLabel::Substitution;

  Rat det() const;
  /// Inverse matrix; A <-> AInverse swap labels, others keep theirs.
  BasisMap inverse() const;
};

/**
 * Divisor change of basis for a pair of extremal contractions:
 * -K = (-nu/l)(-K') + ((2l - nu nu')/(l mu'))H',
 *  H = (mu/l)(-K') + (mu nu'/(l mu'))H'.
 * Determinant is -2 mu / (l mu'). Throws unless lambda is 1 or 2 and mu, mu' > 0.
 */
BasisMap basis_map_A(int nu, int nu_prime, int mu, int mu_prime, int lambda);

struct BasisBReport {
  BasisMap map;
  bool all_integral = false;
  Rat det;
  bool det_is_unit = false;
  Rat identity_lhs;  // d (nu^2 - Delta mu^2)
  Rat identity_rhs;  // 4 b d'
  bool identity_holds = false;  // lhs == +-rhs

  bool ok() const { return all_integral && det_is_unit && identity_holds; }
};

/// Matrix relating the two integral bases of codimension-2 classes in the
/// blow-down case. Violations are reported, not thrown.
BasisBReport basis_map_B(const Rat& nu, const Rat& nu_prime, const Rat& mu, const Rat& c1,
                         const Rat& delta, const Rat& d, const Rat& b, const Rat& d_prime);

/// Rows of the matrix that writes the new generators in terms of the old ones.
Matrix2r new_from_old(const BasisMap& map);

/// The transition back from the new generators to the old ones. Unlike
/// inverse(), which restates the same transition (A and A^-1 both relate
/// (-K, H) to (-K', H')), this swaps which basis is old.
BasisMap reverse_transition(const BasisMap& map);

/**
 * Context whose generators are the classes named by `map`, with the
 * relation and degree recomputed so that every intersection number agrees
 * with `ctx`. Throws std::invalid_argument when the map is singular, when
 * the new second generator does not satisfy G2'^(n+1) = 0, or when the new
 * degree G1' G2'^n is not positive.
 */
RingCtx derived_context(const RingCtx& ctx, const BasisMap& map,
                        std::optional<std::pair<std::string, std::string>> names = std::nullopt);

/// Rewrites x (an element of the old ring) in the ring `target`, which
/// must be derived from x's ring through `map`.
RingElem transport(const RingElem& x, const BasisMap& map, std::shared_ptr<const RingCtx> target);

/// The (-K, H) context of an (L, H) context, using K = -2L + c1 H with c1 = rel_a.
RingCtx minus_k_context(const RingCtx& lh_ctx);

}  // namespace fanocalc

#endif  // FANOCALC_BASIS_HPP

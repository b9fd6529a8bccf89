#ifndef FANOCALC_CHOW_HPP
#define FANOCALC_CHOW_HPP

#include "fanocalc/eigen_rational.hpp"
#include "fanocalc/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace fanocalc {

/**
 * Truncated intersection ring Q[G1, G2] / (G1^2 - a G1 G2 - b G2^2, G2^(n+1))
 * of a P^1-bundle over an n-dimensional base, plus the degree functional
 * G1 G2^n -> degree_s.
 */
struct RingCtx {
  int n = 2;
  std::pair<std::string, std::string> gen_names{"L", "H"};
  Rat rel_a;
  Rat rel_b;
  Rat degree_s{1};

  /// Validating constructor: n >= 2 and degree_s > 0.
  static RingCtx make(int n, Rat rel_a, Rat rel_b, Rat degree_s,
                      std::pair<std::string, std::string> names = {"L", "H"});

  /// rel_a^2 + 4 rel_b; for an (L, H) context this is c1^2 - 4 c2/d.
  Rat discriminant() const { return rel_a * rel_a + Rat(4) * rel_b; }

  friend bool operator==(const RingCtx&, const RingCtx&) = default;
};

/// Raised when elements of different rings are combined.
class ContextMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/**
 * Element of the ring in normal form. Coefficients live in an (n+1) x 2
 * matrix: entry (j, i) multiplies G1^i G2^j. Since G1^2 is always
 * rewritten and G2^(n+1) = 0, this basis is complete.
 */
class RingElem {
 public:
  using Coeffs = Eigen::Matrix<Rat, Eigen::Dynamic, 2>;

  explicit RingElem(std::shared_ptr<const RingCtx> ctx);
  RingElem(std::shared_ptr<const RingCtx> ctx, Coeffs coeffs);

  static RingElem constant(std::shared_ptr<const RingCtx> ctx, const Rat& c);
  /// G1 for which = 0, G2 for which = 1.
  static RingElem generator(std::shared_ptr<const RingCtx> ctx, int which);
  /// Single normal-form monomial G1^i G2^j (i in {0, 1}); zero past the top degree.
  static RingElem monomial(std::shared_ptr<const RingCtx> ctx, int i, int j, const Rat& c = Rat(1));

  const RingCtx& ctx() const { return *ctx_; }
  const std::shared_ptr<const RingCtx>& ctx_ptr() const { return ctx_; }
  const Coeffs& coeffs() const { return coeffs_; }

  /// Coefficient of G1^i G2^j; zero outside the basis.
  Rat coeff(int i, int j) const;
  bool is_zero() const;
  /// Total degree when the element is nonzero and homogeneous.
  std::optional<int> homogeneous_degree() const;

  RingElem operator-() const;
  RingElem& operator+=(const RingElem& rhs);
  RingElem& operator-=(const RingElem& rhs);
  RingElem& operator*=(const RingElem& rhs);
  RingElem& operator*=(const Rat& k);

  friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
  friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
  friend RingElem operator*(RingElem a, const RingElem& b) { return a *= b; }
  friend RingElem operator*(RingElem a, const Rat& k) { return a *= k; }
  friend RingElem operator*(const Rat& k, RingElem a) { return a *= k; }

  friend bool operator==(const RingElem& a, const RingElem& b);

  /// Human readable form such as "1/9*L*H^4 - 2*H^5".
  std::string str() const;

 private:
  void require_same_ctx(const RingElem& rhs) const;

  std::shared_ptr<const RingCtx> ctx_;
  Coeffs coeffs_;
};

RingElem pow(const RingElem& x, unsigned e);

/// Formal polynomial in G1, G2 before reduction: (G1 exponent, G2 exponent) -> coefficient.
using Polynomial = std::map<std::pair<int, int>, Rat>;

/// Normal form of a formal polynomial.
RingElem reduce(const Polynomial& raw, std::shared_ptr<const RingCtx> ctx);

/**
 * Degree of a top-degree class: coefficient of G1 G2^n times degree_s.
 * Throws std::invalid_argument when e has a component below degree n+1.
 */
Rat intersection_degree(const RingElem& e);

std::string serialize_context(const RingCtx& ctx);
/// Parses the key=value record written by serialize_context. '#' lines and
/// blank lines are skipped. Throws std::invalid_argument on bad input.
RingCtx parse_context(const std::string& text);
RingCtx load_context(const std::string& path);

}  // namespace fanocalc

#endif  // FANOCALC_CHOW_HPP

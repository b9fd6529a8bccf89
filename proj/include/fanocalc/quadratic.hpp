#ifndef FANOCALC_QUADRATIC_HPP
#define FANOCALC_QUADRATIC_HPP

#include "fanocalc/rational.hpp"

#include <stdexcept>
#include <string>

namespace fanocalc {

/// Thrown when two quadratic numbers with different discriminants are combined.
class DeltaMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/**
 * Element re + im * sqrt(delta) of the imaginary quadratic extension
 * Q(sqrt(delta)), delta < 0.
 *
 * sqrt(delta) is the root in the upper half plane, so the imaginary part
 * of the number has the sign of `im`. Mixing two numbers requires equal
 * deltas; a mismatch throws DeltaMismatch.
 */
template <class Scalar>
class Quadratic {
 public:
  Quadratic(Scalar re, Scalar im, Scalar delta)
      : re_(std::move(re)), im_(std::move(im)), delta_(std::move(delta)) {
    if (!(delta_ < Scalar(0))) {
      throw std::invalid_argument("quadratic extension requires delta < 0");
    }
  }

  /// The real number `re` embedded with the given delta.
  static Quadratic real(Scalar re, Scalar delta) {
    return Quadratic(std::move(re), Scalar(0), std::move(delta));
  }
  /// sqrt(delta) itself.
  static Quadratic root(Scalar delta) { return Quadratic(Scalar(0), Scalar(1), std::move(delta)); }

  const Scalar& re() const { return re_; }
  const Scalar& im_coeff() const { return im_; }
  const Scalar& delta() const { return delta_; }

  bool is_zero() const { return re_ == Scalar(0) && im_ == Scalar(0); }
  /// Sign of the imaginary part; sqrt(-delta) > 0 so it is the sign of im.
  int im_sign() const { return im_ < Scalar(0) ? -1 : (im_ == Scalar(0) ? 0 : 1); }

  /// |z|^2 = re^2 - delta * im^2.
  Scalar norm() const { return re_ * re_ - delta_ * im_ * im_; }
  Quadratic conj() const { return Quadratic(re_, -im_, delta_); }

  Quadratic operator-() const { return Quadratic(-re_, -im_, delta_); }

  Quadratic& operator+=(const Quadratic& rhs) {
    require_same_delta(rhs);
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
  }
  Quadratic& operator-=(const Quadratic& rhs) {
    require_same_delta(rhs);
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
  }
  Quadratic& operator*=(const Quadratic& rhs) {
    require_same_delta(rhs);
    Scalar re = re_ * rhs.re_ + delta_ * im_ * rhs.im_;
    Scalar im = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  Quadratic& operator*=(const Scalar& k) {
    re_ *= k;
    im_ *= k;
    return *this;
  }

  friend Quadratic operator+(Quadratic a, const Quadratic& b) { return a += b; }
  friend Quadratic operator-(Quadratic a, const Quadratic& b) { return a -= b; }
  friend Quadratic operator*(Quadratic a, const Quadratic& b) { return a *= b; }
  friend Quadratic operator*(Quadratic a, const Scalar& k) { return a *= k; }
  friend Quadratic operator*(const Scalar& k, Quadratic a) { return a *= k; }

  friend bool operator==(const Quadratic& a, const Quadratic& b) {
    return a.re_ == b.re_ && a.im_ == b.im_ && a.delta_ == b.delta_;
  }

 private:
  void require_same_delta(const Quadratic& rhs) const {
    if (!(delta_ == rhs.delta_)) {
      throw DeltaMismatch("cannot combine quadratic numbers with different discriminants");
    }
  }

  Scalar re_;
  Scalar im_;
  Scalar delta_;
};

using QuadNum = Quadratic<Rat>;

/// z^m by repeated squaring; z^0 is 1 with the same delta.
template <class Scalar>
Quadratic<Scalar> quad_pow(const Quadratic<Scalar>& z, unsigned m) {
  Quadratic<Scalar> result = Quadratic<Scalar>::real(Scalar(1), z.delta());
  Quadratic<Scalar> base = z;
  while (m > 0) {
    if (m & 1U) result *= base;
    base *= base;
    m >>= 1U;
  }
  return result;
}

/// True iff z is a strictly negative real number, i.e. arg(z) = pi.
template <class Scalar>
bool is_negative_real(const Quadratic<Scalar>& z) {
  return z.im_coeff() == Scalar(0) && z.re() < Scalar(0);
}

/**
 * Exact test for arg(z) < pi / q, for z nonzero in the closed upper half
 * plane and q >= 1.
 *
 * With theta = arg(z) in (0, pi), sin(k theta) > 0 for every k = 1..q holds
 * exactly when q theta < pi, so it suffices to look at the signs of
 * Im(z^k). Positive reals (theta = 0) are accepted directly.
 */
template <class Scalar>
bool arg_less_than(const Quadratic<Scalar>& z, int q) {
  if (z.is_zero()) throw std::invalid_argument("arg is undefined at zero");
  if (q < 1) throw std::invalid_argument("arg_less_than requires q >= 1");
  if (z.im_coeff() < Scalar(0)) {
    throw std::invalid_argument("arg_less_than requires z in the closed upper half plane");
  }
  if (z.im_coeff() == Scalar(0)) return z.re() > Scalar(0);
  Quadratic<Scalar> power = z;
  for (int k = 2; k <= q; ++k) {
    power *= z;
    if (power.im_sign() <= 0) return false;
  }
  return true;
}

template <class Scalar>
std::string to_string(const Quadratic<Scalar>& z) {
  return z.re().str() + " + " + z.im_coeff().str() + "*sqrt(" + z.delta().str() + ")";
}

}  // namespace fanocalc

#endif  // FANOCALC_QUADRATIC_HPP

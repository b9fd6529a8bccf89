#ifndef FANOCALC_RATIONAL_HPP
#define FANOCALC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace fanocalc {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rat {
 public:
  Rat() = default;

  template <std::integral T>
  Rat(T value) : num_(value) {}  // NOLINT: integers promote implicitly

  Rat(BigInt num, BigInt den);

  /// Parses "p" or "p/q" (optional leading sign on p). Throws
  /// std::invalid_argument on malformed text or a zero denominator.
  static Rat parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  /// Only valid when is_integer() and the value fits.
  std::int64_t to_int64() const;
  double to_double() const;

  /// Canonical rendering: "p" for integers, "p/q" otherwise.
  std::string str() const;

  Rat operator-() const;
  Rat& operator+=(const Rat& rhs);
  Rat& operator-=(const Rat& rhs);
  Rat& operator*=(const Rat& rhs);
  Rat& operator/=(const Rat& rhs);  // throws std::domain_error on division by zero

  friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
  friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
  friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
  friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

 private:
  void normalize();

  BigInt num_{0};
  BigInt den_{1};
};

Rat pow(const Rat& base, int exponent);
Rat abs(const Rat& x);

std::ostream& operator<<(std::ostream& os, const Rat& x);

}  // namespace fanocalc

#endif  // FANOCALC_RATIONAL_HPP

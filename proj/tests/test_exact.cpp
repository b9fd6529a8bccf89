#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fanocalc/niven.hpp"
#include "fanocalc/quadratic.hpp"
#include "support.hpp"

#include <cmath>
#include <complex>
#include <numbers>

using fanocalc::QuadNum;
using fanocalc::BigInt;
using fanocalc::Rat;
using testing::Rng;

TEST_CASE("rationals stay in lowest terms") {
  CHECK(Rat(BigInt(6), BigInt(-4)).str() == "-3/2");
  CHECK(Rat(BigInt(0), BigInt(-7)).str() == "0");
  CHECK(Rat::parse("10/4") == Rat(5, 1) / Rat(2));
  CHECK(Rat::parse("-3") == Rat(-3));
  CHECK(Rat::parse("7/1").is_integer());
  CHECK((Rat(1, 1) / Rat(3) + Rat(1) / Rat(6)).str() == "1/2");
}

TEST_CASE("rational parse errors") {
  CHECK_THROWS_AS(Rat::parse("2/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

TEST_CASE("rational ordering and powers") {
  CHECK(Rat::parse("-1/3") < Rat(0));
  CHECK(Rat::parse("2/3") > Rat::parse("3/5"));
  CHECK(pow(Rat::parse("-2/3"), 3) == Rat::parse("-8/27"));
  CHECK(pow(Rat(2), -2) == Rat::parse("1/4"));
  CHECK(abs(Rat::parse("-5/2")) == Rat::parse("5/2"));
  const Rat big = pow(Rat(10), 40);
  CHECK(big.str() == "1" + std::string(40, '0'));
}

TEST_CASE("quadratic arithmetic") {
  const Rat d(-3);
  const QuadNum z(Rat(1), Rat(2), d);
  const QuadNum w(Rat(-1), Rat(1), d);
  // (1 + 2s)(-1 + s) with s^2 = -3: -1 + s - 2s + 2(-3) = -7 - s
  CHECK(z * w == QuadNum(Rat(-7), Rat(-1), d));
  CHECK(z.norm() == Rat(13));
  CHECK((z * z.conj()).im_coeff().is_zero());
  CHECK_THROWS_AS(QuadNum(Rat(1), Rat(1), Rat(0)), std::invalid_argument);
  CHECK_THROWS(z + QuadNum(Rat(1), Rat(1), Rat(-2)));
}

namespace {

QuadNum random_quad(Rng& rng) {
  Rat delta = -Rat(BigInt(rng.integer(1, 20)), BigInt(rng.integer(1, 5)));
  return QuadNum(rng.rat(5, 4), rng.rat(5, 4), delta);
}

std::complex<long double> as_complex(const QuadNum& z) {
  return {static_cast<long double>(z.re().to_double()),
          static_cast<long double>(z.im_coeff().to_double()) * std::sqrt(-static_cast<long double>(z.delta().to_double()))};
}

}  // namespace

TEST_CASE("quad_pow adds exponents and norm is multiplicative (randomized)") {
  Rng rng(7);
  for (int k = 0; k < 300; ++k) {
    const QuadNum z = random_quad(rng);
    const unsigned a = static_cast<unsigned>(rng.integer(0, 12));
    const unsigned b = static_cast<unsigned>(rng.integer(0, 12));
    CHECK(quad_pow(z, a + b) == quad_pow(z, a) * quad_pow(z, b));
    const QuadNum w(rng.rat(5, 4), rng.rat(5, 4), z.delta());
    CHECK((z * w).norm() == z.norm() * w.norm());
  }
}

TEST_CASE("quad_pow agrees with complex floating point") {
  Rng rng(11);
  for (int k = 0; k < 100; ++k) {
    const QuadNum z = random_quad(rng);
    const unsigned e = static_cast<unsigned>(rng.integer(0, 8));
    const auto exact = as_complex(quad_pow(z, e));
    const auto approx = std::pow(as_complex(z), static_cast<int>(e));
    CHECK(std::abs(exact - approx) <= 1e-9L * (1 + std::abs(approx)));
  }
}

TEST_CASE("tau + sqrt(Delta) has argument pi/(n+1) on the slope locus") {
  for (int n : {2, 3, 5}) {
    for (int tau = 1; tau <= 3; ++tau) {
      const Rat delta = -Rat(tau * tau) * *fanocalc::tan_sq_pi_over(n + 1);
      const QuadNum z(Rat(tau), Rat(1), delta);
      CHECK(is_negative_real(quad_pow(z, static_cast<unsigned>(n + 1))));
      CHECK_FALSE(is_negative_real(quad_pow(z, static_cast<unsigned>(n))));
    }
  }
}

TEST_CASE("arg_less_than matches atan2 away from the boundary") {
  Rng rng(3);
  int compared = 0;
  for (int k = 0; k < 400; ++k) {
    QuadNum z = random_quad(rng);
    if (z.is_zero()) continue;
    if (z.im_sign() < 0) z = z.conj();
    const auto c = as_complex(z);
    const long double theta = std::atan2(c.imag(), c.real());
    for (int q = 1; q <= 10; ++q) {
      const long double bound = std::numbers::pi_v<long double> / q;
      if (std::abs(theta - bound) < 1e-12L) continue;
      CHECK(arg_less_than(z, q) == (theta < bound));
      ++compared;
    }
  }
  CHECK(compared > 3000);
}

TEST_CASE("arg_less_than is antitone in q") {
  Rng rng(5);
  for (int k = 0; k < 300; ++k) {
    QuadNum z = random_quad(rng);
    if (z.is_zero()) continue;
    if (z.im_sign() < 0) z = z.conj();
    for (int q = 3; q <= 14; ++q) {
      if (!arg_less_than(z, q)) continue;
      for (int p = 2; p < q; ++p) CHECK(arg_less_than(z, p));
    }
  }
}

TEST_CASE("arg_less_than edge cases") {
  const Rat d(-1);
  CHECK(arg_less_than(QuadNum(Rat(1), Rat(0), d), 7));
  CHECK_FALSE(arg_less_than(QuadNum(Rat(-1), Rat(0), d), 1));
  // 1 + i has argument pi/4 exactly: not below pi/4, below pi/3.
  CHECK_FALSE(arg_less_than(QuadNum(Rat(1), Rat(1), d), 4));
  CHECK(arg_less_than(QuadNum(Rat(1), Rat(1), d), 3));
  CHECK_THROWS_AS(arg_less_than(QuadNum(Rat(0), Rat(0), d), 2), std::invalid_argument);
  CHECK_THROWS_AS(arg_less_than(QuadNum(Rat(1), Rat(-1), d), 2), std::invalid_argument);
}

TEST_CASE("rational trigonometric values match cmath") {
  for (int q = 1; q <= 24; ++q) {
    const double x = std::numbers::pi / q;
    if (auto c2 = fanocalc::cos_sq_pi_over(q)) {
      CHECK(c2->to_double() == doctest::Approx(std::cos(x) * std::cos(x)));
    }
    if (auto t2 = fanocalc::tan_sq_pi_over(q)) {
      CHECK(t2->to_double() == doctest::Approx(std::tan(x) * std::tan(x)));
    }
    if (auto c = fanocalc::cos_pi_over(q)) CHECK(c->to_double() == doctest::Approx(std::cos(x)));
  }
  CHECK(*fanocalc::tan_sq_pi_over(6) == Rat::parse("1/3"));
  CHECK(*fanocalc::cos_sq_pi_over(4) == Rat::parse("1/2"));
  CHECK_FALSE(fanocalc::tan_sq_pi_over(5).has_value());
  CHECK_FALSE(fanocalc::cos_sq_pi_over(5).has_value());
  CHECK_FALSE(fanocalc::cos_pi_over(4).has_value());
  CHECK(*fanocalc::cos_pow_pi_over(6, 4) == Rat::parse("9/16"));
  CHECK_FALSE(fanocalc::cos_pow_pi_over(6, 3).has_value());
  CHECK(*fanocalc::cos_pow_pi_over(3, 3) == Rat::parse("1/8"));
}

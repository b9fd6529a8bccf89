#ifndef FANOCALC_EIGEN_RATIONAL_HPP
#define FANOCALC_EIGEN_RATIONAL_HPP

#include "fanocalc/rational.hpp"

#include <Eigen/Core>
#include <Eigen/LU>

namespace Eigen {

template <>
struct NumTraits<fanocalc::Rat> : GenericNumTraits<fanocalc::Rat> {
  using Real = fanocalc::Rat;
  using NonInteger = fanocalc::Rat;
  using Literal = fanocalc::Rat;
  using Nested = fanocalc::Rat;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 16
  };

  // Exact arithmetic: no rounding tolerance.
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace fanocalc {

using Matrix2r = Eigen::Matrix<Rat, 2, 2>;
using Vector2r = Eigen::Matrix<Rat, 2, 1>;

}  // namespace fanocalc

#endif  // FANOCALC_EIGEN_RATIONAL_HPP

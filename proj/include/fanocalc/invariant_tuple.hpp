#ifndef FANOCALC_INVARIANT_TUPLE_HPP
#define FANOCALC_INVARIANT_TUPLE_HPP

#include "fanocalc/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fanocalc {

enum class ContractionKind { P, D, C };
enum class TupleStatus { Candidate, Admissible, Excluded };

std::string to_string(ContractionKind kind);
std::string to_string(TupleStatus status);

/// Distinct reason codes for InvariantTuple validation failures.
enum class TupleError {
  NonPositive,        // n < 2, or mu, mu', nu, nu', i, i' not positive
  LambdaKind,         // lambda must be 2 exactly for kind P
  MuMismatch,         // mu != mu'
  TauRatio,           // tau != nu / mu
  TauPrimeRatio,      // tau' != nu' / mu'
  IndexRelation,      // i mu - nu != lambda
  IndexPrimeRelation, // i' mu' - nu' != 2
  DeltaNonNegative,
  C2Mismatch,         // c2/d != (c1^2 - Delta) / 4
  Parity,             // kinds D, C: c1 - i and mu must be odd
  RhoMismatch,        // rho = tau (P, C) or (nu nu' - 2)/(mu nu') (D)
  RhoTau,             // angle relation fails
  C2NotIntegral,      // (c2/d) d not an integer
};

std::string to_string(TupleError e);

class InvalidTuple : public std::invalid_argument {
 public:
  InvalidTuple(TupleError code, const std::string& detail)
      : std::invalid_argument(to_string(code) + ": " + detail), code_(code) {}
  TupleError code() const { return code_; }

 private:
  TupleError code_;
};

/// One candidate pair (X, E) with every numerical invariant spelled out.
struct InvariantTuple {
  int n = 2;
  ContractionKind kind = ContractionKind::C;
  int lambda = 1;
  int mu = 1;
  int mu_prime = 1;
  int nu = 1;
  int nu_prime = 1;
  Rat tau;
  Rat tau_prime;
  Rat rho;
  int i = 1;
  int i_prime = 1;
  int c1 = 0;
  Rat delta;
  Rat c2_over_d;
  std::optional<Rat> deg_x;
  std::optional<Rat> deg_x_prime;
  std::optional<Rat> c1_prime;
  std::optional<Rat> y_dot_f;
  std::optional<int> d;
  std::optional<int> d_prime;
  std::optional<int> b;
  std::optional<std::string> name_x;
  std::optional<std::string> name_x_prime;
  TupleStatus status = TupleStatus::Candidate;
  std::string reason;  // family label when admissible, rule code when excluded

  std::optional<TupleError> validate() const;
  /// Throws InvalidTuple when validate() finds a problem.
  const InvariantTuple& checked() const;

  /// c2 = (c2/d) d when d is known.
  std::optional<Rat> c2() const;

  friend bool operator==(const InvariantTuple&, const InvariantTuple&) = default;
};

/**
 * Builds a tuple from (n, kind, nu, nu', mu, c1, Delta) and fills the
 * derived fields (lambda, tau, tau', rho, i, i', c2/d), then validates.
 */
InvariantTuple make_tuple(int n, ContractionKind kind, int nu, int nu_prime, int mu, int c1,
                          const Rat& delta);

/// The c1 in {0, -1} with c1 mu - nu even.
int normalized_c1(int nu, int mu);

const std::vector<std::string>& tuple_csv_header();
std::vector<std::string> tuple_csv_fields(const InvariantTuple& t);

}  // namespace fanocalc

#endif  // FANOCALC_INVARIANT_TUPLE_HPP

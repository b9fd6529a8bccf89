#include "fanocalc/invariant_tuple.hpp"

#include "fanocalc/slope.hpp"

namespace fanocalc {

std::string to_string(ContractionKind kind) {
  switch (kind) {
    case ContractionKind::P: return "P";
    case ContractionKind::D: return "D";
    case ContractionKind::C: return "C";
  }
  return "?";
}

std::string to_string(TupleStatus status) {
  switch (status) {
    case TupleStatus::Candidate: return "candidate";
    case TupleStatus::Admissible: return "admissible";
    case TupleStatus::Excluded: return "excluded";
  }
  return "?";
}

std::string to_string(TupleError e) {
  switch (e) {
    case TupleError::NonPositive: return "non_positive";
    case TupleError::LambdaKind: return "lambda_kind";
    case TupleError::MuMismatch: return "mu_mismatch";
    case TupleError::TauRatio: return "tau_ratio";
    case TupleError::TauPrimeRatio: return "tau_prime_ratio";
    case TupleError::IndexRelation: return "index_relation";
    case TupleError::IndexPrimeRelation: return "index_prime_relation";
    case TupleError::DeltaNonNegative: return "delta_nonnegative";
    case TupleError::C2Mismatch: return "c2_mismatch";
    case TupleError::Parity: return "parity";
    case TupleError::RhoMismatch: return "rho_mismatch";
    case TupleError::RhoTau: return "rho_tau";
    case TupleError::C2NotIntegral: return "c2_not_integral";
  }
  return "?";
}

namespace {

bool odd(int x) { return x % 2 != 0; }

Rat expected_rho(const InvariantTuple& t) {
  if (t.kind == ContractionKind::D) {
    return Rat(t.nu * t.nu_prime - 2) / Rat(t.mu * t.nu_prime);
  }
  return t.tau;
}

}  // namespace

std::optional<TupleError> InvariantTuple::validate() const {
  if (n < 2 || mu <= 0 || mu_prime <= 0 || nu <= 0 || nu_prime <= 0 || i <= 0 || i_prime <= 0) {
    return TupleError::NonPositive;
  }
  if ((kind == ContractionKind::P) != (lambda == 2) || (lambda != 1 && lambda != 2)) {
    return TupleError::LambdaKind;
  }
  if (mu != mu_prime) return TupleError::MuMismatch;
  if (tau != Rat(nu) / Rat(mu)) return TupleError::TauRatio;
  if (tau_prime != Rat(nu_prime) / Rat(mu_prime)) return TupleError::TauPrimeRatio;
  if (i * mu - nu != lambda) return TupleError::IndexRelation;
  if (i_prime * mu_prime - nu_prime != 2) return TupleError::IndexPrimeRelation;
  if (delta.sign() >= 0) return TupleError::DeltaNonNegative;
  if (c2_over_d != (Rat(c1) * Rat(c1) - delta) / Rat(4)) return TupleError::C2Mismatch;
  if (kind != ContractionKind::P && (!odd(c1 - i) || !odd(mu))) return TupleError::Parity;
  if (rho != expected_rho(*this)) return TupleError::RhoMismatch;
  if (!check_rho_tau(n, tau, rho, delta)) return TupleError::RhoTau;
  if (d && !(c2_over_d * Rat(*d)).is_integer()) return TupleError::C2NotIntegral;
  return std::nullopt;
}

const InvariantTuple& InvariantTuple::checked() const {
  if (auto err = validate()) {
    throw InvalidTuple(*err, "n=" + std::to_string(n) + " kind=" + to_string(kind) +
                                 " tau=" + tau.str() + " tau'=" + tau_prime.str() +
                                 " Delta=" + delta.str());
  }
  return *this;
}

std::optional<Rat> InvariantTuple::c2() const {
  if (!d) return std::nullopt;
  return c2_over_d * Rat(*d);
}

int normalized_c1(int nu, int mu) { return odd(nu) && odd(mu) ? -1 : 0; }

InvariantTuple make_tuple(int n, ContractionKind kind, int nu, int nu_prime, int mu, int c1,
                          const Rat& delta) {
  InvariantTuple t;
  t.n = n;
  t.kind = kind;
  t.lambda = kind == ContractionKind::P ? 2 : 1;
  t.mu = mu;
  t.mu_prime = mu;
  t.nu = nu;
  t.nu_prime = nu_prime;
  if (mu <= 0) throw InvalidTuple(TupleError::NonPositive, "mu must be positive");
  t.tau = Rat(nu) / Rat(mu);
  t.tau_prime = Rat(nu_prime) / Rat(mu);
  if ((t.lambda + nu) % mu != 0) throw InvalidTuple(TupleError::IndexRelation, "mu does not divide lambda + nu");
  if ((2 + nu_prime) % mu != 0) throw InvalidTuple(TupleError::IndexPrimeRelation, "mu does not divide 2 + nu'");
  t.i = (t.lambda + nu) / mu;
  t.i_prime = (2 + nu_prime) / mu;
  t.c1 = c1;
  t.delta = delta;
  t.c2_over_d = (Rat(c1) * Rat(c1) - delta) / Rat(4);
  t.rho = expected_rho(t);
  t.checked();
  return t;
}

const std::vector<std::string>& tuple_csv_header() {
  static const std::vector<std::string> header{
      "n", "kind", "tau", "i", "d", "deg_X", "tau_prime", "i_prime", "deg_X_prime",
      "c1", "Delta", "c2_over_d", "name_X", "name_X_prime", "c1_prime", "y_dot_f",
      "status", "reason"};
  return header;
}

namespace {

std::string opt(const std::optional<Rat>& x) { return x ? x->str() : ""; }
std::string opt(const std::optional<int>& x) { return x ? std::to_string(*x) : ""; }
std::string opt(const std::optional<std::string>& x) { return x.value_or(""); }

}  // namespace

std::vector<std::string> tuple_csv_fields(const InvariantTuple& t) {
  return {std::to_string(t.n),
          to_string(t.kind),
          t.tau.str(),
          std::to_string(t.i),
          opt(t.d),
          opt(t.deg_x),
          t.tau_prime.str(),
          std::to_string(t.i_prime),
          opt(t.deg_x_prime),
          std::to_string(t.c1),
          t.delta.str(),
          t.c2_over_d.str(),
          opt(t.name_x),
          opt(t.name_x_prime),
          opt(t.c1_prime),
          opt(t.y_dot_f),
          to_string(t.status),
          t.reason};
}

}  // namespace fanocalc

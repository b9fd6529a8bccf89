#include "fanocalc/basis.hpp"
#include "fanocalc/classify.hpp"
#include "fanocalc/niven.hpp"
#include "fanocalc/slope.hpp"

#include <stdexcept>

namespace fanocalc {

std::string to_string(const WitnessValue& v) {
  if (const auto* r = std::get_if<Rat>(&v)) return r->str();
  if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  const auto& list = std::get<std::vector<Rat>>(v);
  std::string out = "{";
  for (std::size_t k = 0; k < list.size(); ++k) {
    if (k > 0) out += ",";
    out += list[k].str();
  }
  return out + "}";
}

const WitnessValue& ExclusionReport::at(const std::string& key) const {
  for (const auto& w : witness) {
    if (w.key == key) return w.value;
  }
  throw std::out_of_range("no witness named " + key);
}

namespace {

InvariantTuple conic_tuple(int tau, int tau_prime) {
  const Rat delta = -Rat(tau * tau) * *tan_sq_pi_over(6);
  InvariantTuple t = make_tuple(5, ContractionKind::C, tau, tau_prime, 1, normalized_c1(tau, 1), delta);
  t.c1_prime = c1_prime(5, t.tau, t.tau_prime);
  t.y_dot_f = y_dot_f(*t.c1_prime, t.tau_prime, 1);
  t.status = TupleStatus::Excluded;
  return t;
}

constexpr int kMukaiDegreeBound = 22;  // H^7 of a Fano sevenfold of index 5 and b2 = 1

}  // namespace

ExclusionReport exclude_2_1(const FanoDataset& data) {
  InvariantTuple t = conic_tuple(2, 1);
  t.reason = "degree_2_1";

  // X and X' both of index 3 with H_X^5 = (9/8) H_X'^5.
  const Rat r = base_degree_ratio(5, t.tau);
  std::vector<std::pair<int, int>> matches;
  for (const FanoEntry& xp : data.with_index(5, t.i_prime)) {
    const Rat deg_x = Rat(xp.degree) / r;
    for (const FanoEntry& x : data.match_manifolds(5, t.i, deg_x).entries) {
      matches.emplace_back(x.degree, xp.degree);
      t.name_x = x.name;
      t.name_x_prime = xp.name;
    }
  }
  if (matches.size() != 1) throw std::logic_error("expected a single degree pair for (2,1)");
  const int deg_x = matches.front().first;
  t.deg_x = Rat(deg_x);
  t.deg_x_prime = Rat(matches.front().second);

  // Blow-up Z of dimension 7 with -K_Z = 5 H_Z. With X = m Sigma_Z, H_Z^2 = d_Z Sigma_Z
  // and u = H_Z Sigma_Z^3: H_Z^7 = d_Z^3 u <= 22 and H_X^5 = d_Z^2 m u.
  std::vector<int> d_z_values;
  for (int d_z = 1; d_z * d_z * d_z <= kMukaiDegreeBound; ++d_z) {
    bool found = false;
    for (int u = 1; d_z * d_z * d_z * u <= kMukaiDegreeBound && !found; ++u) {
      found = deg_x % (d_z * d_z * u) == 0;
    }
    if (found) d_z_values.push_back(d_z);
  }
  if (d_z_values != std::vector<int>{1}) throw std::logic_error("d_Z is not forced to be 1");

  // X^2 = c2(E(1)) = (c2/d + c1 + 1) H_X^2, so m^2 H_Z^7 = X^2 H_Z^3 = coeff * H_Z^5 X.
  const Rat x2_coeff = t.c2_over_d + Rat(t.c1) + Rat(1);
  const Rat m_sq_hz7 = x2_coeff * Rat(deg_x);
  // Together with H_X^5 = m H_Z^7 this gives m = m^2 H_Z^7 / (m H_Z^7).
  const Rat m = m_sq_hz7 / Rat(deg_x);

  ExclusionReport rep;
  rep.candidate = t;
  rep.rule = "degree_2_1";
  rep.witness = {
      {"deg_X", Rat(deg_x)},
      {"deg_X_prime", *t.deg_x_prime},
      {"mukai_degree_bound", Rat(kMukaiDegreeBound)},
      {"d_Z", Rat(d_z_values.front())},
      {"X_squared_coeff", x2_coeff},
      {"m_H_Z7", Rat(deg_x)},
      {"m2_H_Z7", m_sq_hz7},
      {"m", m},
      {"m_integral", m.is_integer()},
      {"c1_prime", *t.c1_prime},
      {"y_dot_f", *t.y_dot_f},
  };
  rep.citation =
      "X would be the centre of a smooth blow-up of a Fano sevenfold Z of index 5, whose degree is "
      "at most 22 (Mukai); X = m Sigma_Z then needs m = 4/3";
  return rep;
}

ExclusionReport exclude_1_4() {
  InvariantTuple t = conic_tuple(1, 4);
  t.reason = "schwarzenberger_1_4";
  const int n = 5;
  // X' = P^5, and H_X^5 = H_X'^5 / r.
  const Rat deg_xp(1);
  const Rat deg_x = deg_xp / base_degree_ratio(n, t.tau);
  t.deg_x = deg_x;
  t.deg_x_prime = deg_xp;
  t.name_x_prime = "P^5";

  const RingCtx lh = RingCtx::make(n, Rat(t.c1), -t.c2_over_d, deg_x);
  const RingCtx kp = derived_context(minus_k_context(lh), basis_map_A(t.nu, t.nu_prime, t.mu, t.mu_prime, 1),
                                     std::make_pair(std::string("-K'"), std::string("H'")));
  auto kp_ptr = std::make_shared<const RingCtx>(kp);
  const RingElem mk = RingElem::generator(kp_ptr, 0);  // -K'
  const RingElem h = RingElem::generator(kp_ptr, 1);

  // K'^a H'^(6-a) for a = 4, 3, 2, 1.
  std::vector<Rat> monomials;
  for (int a = 4; a >= 1; --a) {
    const Rat sign = a % 2 == 0 ? Rat(1) : Rat(-1);
    monomials.push_back(sign * intersection_degree(pow(mk, a) * pow(h, 6 - a)));
  }

  // Same numbers straight from (L, H): K' = 4L + 3H, H' = L + H for this case.
  auto lh_ptr = std::make_shared<const RingCtx>(lh);
  const RingElem l = RingElem::generator(lh_ptr, 0);
  const RingElem hh = RingElem::generator(lh_ptr, 1);
  const BasisMap a_inv = basis_map_A(t.nu, t.nu_prime, t.mu, t.mu_prime, 1).inverse();
  // -K' = a_inv(0,0) (-K) + a_inv(0,1) H with -K = 2L - c1 H.
  const RingElem minus_k = Rat(2) * l - Rat(t.c1) * hh;
  const RingElem kprime = -(a_inv.entries(0, 0) * minus_k + a_inv.entries(0, 1) * hh);
  const RingElem hprime = a_inv.entries(1, 0) * minus_k + a_inv.entries(1, 1) * hh;
  std::vector<Rat> direct;
  for (int a = 4; a >= 1; --a) direct.push_back(intersection_degree(pow(kprime, a) * pow(hprime, 6 - a)));

  const Rat c = *t.c1_prime;
  // L'^5 H'^2 written through Y = 2L' - c1' H' restricted to Y.
  const Rat value = Rat(1, 2) * monomials[0] - c / Rat(4) * monomials[1] +
                    c * c / Rat(8) * monomials[2] - c * c * c / Rat(16) * monomials[3];
  const bool odd = value.is_integer() && boost::multiprecision::abs(value.num()) % 2 == 1;
  const bool c1_even = c.is_integer() && c.num() % 2 == 0;

  ExclusionReport rep;
  rep.candidate = t;
  rep.rule = "schwarzenberger_1_4";
  rep.witness = {
      {"kprime_relation", std::vector<Rat>{-kp.rel_a, kp.rel_b}},
      {"monomials", monomials},
      {"monomials_direct", direct},
      {"bases_agree", monomials == direct},
      {"c1_prime", c},
      {"value", value},
      {"value_odd", odd},
      {"c1_prime_even", c1_even},
      {"schwarzenberger_violated", odd && c1_even},
  };
  rep.citation =
      "rank-3 bundles on P^5 satisfy c1 c2 = c3 mod 2 (Schwarzenberger); L'^5 H'^2 = c1^3 - 2 c1 c2 + c3 "
      "is odd while c1' is even";
  return rep;
}

}  // namespace fanocalc

#include "fanocalc/classify.hpp"

#include "fanocalc/niven.hpp"

#include <numeric>
#include <stdexcept>

namespace fanocalc {

namespace {

std::string p_label(int n) {
  switch (n) {
    case 2: return "(P1)";
    case 3: return "(P2)/(P3)";
    case 5: return "(P4)/(P5)";
  }
  return "";
}

}  // namespace

std::vector<InvariantTuple> enumerate_type_P(int n, const FanoDataset& data) {
  const auto cos2 = cos_sq_pi_over(n + 1);
  const auto tan2 = tan_sq_pi_over(n + 1);
  const auto cos_pow = cos_pow_pi_over(n + 1, n - 1);
  const Rat k = cos2 ? Rat(4) * *cos2 : Rat(0);
  if (n < 2 || !cos2 || !tan2 || !cos_pow || !k.is_integer()) {
    throw std::invalid_argument("type P needs n in {2, 3, 5}: no rational cos^2(pi/" +
                                std::to_string(n + 1) + ")");
  }
  const int kk = static_cast<int>(k.to_int64());

  std::vector<InvariantTuple> out;
  for (int nu = 1; nu <= kk; ++nu) {
    if (kk % nu != 0) continue;
    const int nu_prime = kk / nu;
    if (nu < nu_prime) continue;  // the swapped pair is the same pair of manifolds
    const int g = std::gcd(nu + 2, nu_prime + 2);
    for (int mu = 1; mu <= g; ++mu) {
      if (g % mu != 0) continue;
      const Rat tau = Rat(nu) / Rat(mu);
      const Rat delta = -tau * tau * *tan2;
      InvariantTuple t = make_tuple(n, ContractionKind::P, nu, nu_prime, mu, normalized_c1(nu, mu), delta);

      // H_X'^n = H_X^n (2 cos(pi/(n+1)) / (mu tau'))^(n-1)
      const Rat ratio = pow(Rat(2) / (Rat(mu) * t.tau_prime), n - 1) * *cos_pow;
      for (const FanoEntry& x : data.with_index(n, t.i)) {
        const Rat deg_xp = Rat(x.degree) * ratio;
        auto xp = data.match_manifolds(n, t.i_prime, deg_xp);
        if (xp.entries.empty()) continue;
        InvariantTuple row = t;
        row.deg_x = Rat(x.degree);
        row.deg_x_prime = deg_xp;
        row.name_x = x.name;
        row.name_x_prime = xp.entries.front().name;
        row.status = TupleStatus::Admissible;
        row.reason = p_label(n);
        out.push_back(row.checked());
      }
    }
  }
  return out;
}

}  // namespace fanocalc

#include "fanocalc/classify.hpp"

namespace fanocalc {

std::vector<FamilyRow> family_table() {
  struct Raw {
    const char* x_prime;
    const char* family;
    int tau_m;
    const char* x;
    int tau;
  };
  static constexpr Raw kRows[] = {
      {"P^2", "P^2", 2, "P^2", 1},
      {"P^3", "G(1,3)", 1, "V_4^3", 1},
      {"Q^3", "P^3", 2, "Q^3", 2},
      {"K(G2)", "Q^5", 3, "V_4^5", 3},
      {"Q^5", "G(1,6)_{Q^5}", 1, "W_36^5", 1},
  };
  std::vector<FamilyRow> out;
  for (const auto& r : kRows) {
    out.push_back({r.x_prime, r.family, Rat(r.tau_m), r.x, Rat(r.tau), Rat(r.tau_m) / Rat(r.tau)});
  }
  return out;
}

}  // namespace fanocalc

#include "fanocalc/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace fanocalc {

namespace {

bool valid(const CongruenceTuple& t) {
  const int denom = t.m - t.z - 1;
  return t.z > 0 && denom > 0 && (t.m - 1) % denom == 0 && t.alpha == (t.m - 1) / denom &&
         t.alpha >= 3 && 3 * t.z <= 2 * t.m;
}

}  // namespace

std::vector<CongruenceTuple> enumerate_congruences(int m_max) {
  if (m_max < 3) throw std::invalid_argument("m_max must be at least 3");
  std::vector<CongruenceTuple> out;
  for (int m = 3; m <= m_max; ++m) {
    for (int z = 1; z <= m - 2; ++z) {
      const int denom = m - z - 1;
      if ((m - 1) % denom != 0) continue;
      const int alpha = (m - 1) / denom;
      if (alpha <= 2) continue;  // two components are ruled out separately
      if (3 * z > 2 * m) continue;
      out.push_back({alpha, z, m});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CongruenceProfile congruence_profile(const CongruenceTuple& t, const Rat& lzh) {
  if (!valid(t)) {
    throw std::invalid_argument("(" + std::to_string(t.alpha) + "," + std::to_string(t.z) + "," +
                                std::to_string(t.m) + ") is not an admissible congruence");
  }
  if (lzh.sign() <= 0) throw std::invalid_argument("L^z H must be positive");
  CongruenceProfile p;
  p.index = t.m - t.z;
  p.vmrt_components = t.alpha;
  p.vmrt_dim = t.m - t.z - 2;
  // deg Z = alpha L^(z+1) H^(m-z-1) - L^z H^(m-z) with L^(z+1) H^(m-z-1) = alpha^(m-z-1).
  p.bound = pow(Rat(t.alpha), t.m - t.z);
  p.deg_z = p.bound - lzh;
  p.below_bound = p.deg_z < p.bound;
  return p;
}

}  // namespace fanocalc

#include "fanocalc/niven.hpp"

namespace fanocalc {

std::optional<Rat> tan_sq_pi_over(int q) {
  switch (q) {
    case 1: return Rat(0);
    case 3: return Rat(3);
    case 4: return Rat(1);
    case 6: return Rat(1, 3);
    default: return std::nullopt;
  }
}

std::optional<Rat> cos_sq_pi_over(int q) {
  switch (q) {
    case 1: return Rat(1);
    case 2: return Rat(0);
    case 3: return Rat(1, 4);
    case 4: return Rat(1, 2);
    case 6: return Rat(3, 4);
    default: return std::nullopt;
  }
}

std::optional<Rat> cos_pi_over(int q) {
  switch (q) {
    case 1: return Rat(-1);
    case 2: return Rat(0);
    case 3: return Rat(1, 2);
    default: return std::nullopt;
  }
}

std::optional<Rat> cos_pow_pi_over(int q, int e) {
  if (e % 2 == 0) {
    auto c2 = cos_sq_pi_over(q);
    if (!c2) return std::nullopt;
    return pow(*c2, e / 2);
  }
  auto c = cos_pi_over(q);
  if (!c) return std::nullopt;
  return pow(*c, e);
}

}  // namespace fanocalc

#ifndef FANOCALC_VERIFY_HPP
#define FANOCALC_VERIFY_HPP

#include "fanocalc/dataset.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fanocalc {

struct CheckResult {
  std::string name;
  std::string anchor;  // the result or table the check reproduces
  bool passed = true;
  std::string expected;  // filled on failure
  std::string actual;
  int cases = 0;
};

constexpr std::uint32_t kVerifySeed = 20240617;

/// Runs the full invariant suite. Randomized checks draw from one
/// mt19937 seeded with `seed`, so the run is reproducible.
std::vector<CheckResult> run_verify(const FanoDataset& data, std::uint32_t seed = kVerifySeed);

}  // namespace fanocalc

#endif  // FANOCALC_VERIFY_HPP

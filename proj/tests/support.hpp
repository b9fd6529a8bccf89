// Shared helpers and independent oracles for the test binaries.
#ifndef FANOCALC_TESTS_SUPPORT_HPP
#define FANOCALC_TESTS_SUPPORT_HPP

#include "fanocalc/dataset.hpp"
#include "fanocalc/rational.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace testing {

using fanocalc::BigInt;
using fanocalc::Rat;

inline std::string data_dir() { return FANOCALC_TEST_DATA_DIR; }
inline std::string ctx_path(const std::string& name) { return data_dir() + "/contexts/" + name; }

inline const fanocalc::FanoDataset& dataset() {
  static const fanocalc::FanoDataset d = fanocalc::FanoDataset::load(data_dir());
  return d;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::string golden(const std::string& name) { return read_file(std::string(FANOCALC_GOLDEN_DIR) + "/" + name); }

struct Rng {
  std::mt19937 gen;
  explicit Rng(std::uint32_t seed) : gen(seed) {}
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
  Rat rat(int span, int max_den) { return Rat(BigInt(integer(-span, span)), BigInt(integer(1, max_den))); }
};

/**
 * Naive oracle for Q[G1, G2] / (G1^2 - a G1 G2 - b G2^2, G2^(n+1)):
 * rewrites the largest power of G1 until none above 1 remain. Shares no
 * code with the library's normal form.
 */
class NaiveRing {
 public:
  using Poly = std::map<std::pair<int, int>, Rat>;  // (G1 exp, G2 exp) -> coeff

  NaiveRing(int n, Rat a, Rat b, Rat top) : n_(n), a_(std::move(a)), b_(std::move(b)), top_(std::move(top)) {}

  Poly reduce(Poly p) const {
    for (;;) {
      auto it = std::find_if(p.rbegin(), p.rend(), [](const auto& kv) { return kv.first.first >= 2; });
      if (it == p.rend()) break;
      const auto [e, c] = *it;
      p.erase(e);
      add(p, {e.first - 1, e.second + 1}, a_ * c);
      add(p, {e.first - 2, e.second + 2}, b_ * c);
    }
    Poly out;
    for (const auto& [e, c] : p) {
      if (e.second <= n_ && !c.is_zero()) out[e] = c;
    }
    return out;
  }

  Poly mul(const Poly& x, const Poly& y) const {
    Poly out;
    for (const auto& [ex, cx] : x) {
      for (const auto& [ey, cy] : y) add(out, {ex.first + ey.first, ex.second + ey.second}, cx * cy);
    }
    return reduce(out);
  }

  Poly pow(const Poly& x, int e) const {
    Poly out = {{{0, 0}, Rat(1)}};
    for (int k = 0; k < e; ++k) out = mul(out, x);
    return out;
  }

  /// Value on the top degree G1 G2^n (lower parts are ignored).
  Rat degree(const Poly& x) const {
    const Poly r = reduce(x);
    auto it = r.find({1, n_});
    return it == r.end() ? Rat(0) : it->second * top_;
  }

  static Poly linear(const Rat& g1, const Rat& g2) { return {{{1, 0}, g1}, {{0, 1}, g2}}; }

 private:
  static void add(Poly& p, std::pair<int, int> e, const Rat& c) {
    if (e.first < 0 || e.second < 0) return;
    p[e] += c;
  }

  int n_;
  Rat a_;
  Rat b_;
  Rat top_;
};

}  // namespace testing

#endif  // FANOCALC_TESTS_SUPPORT_HPP

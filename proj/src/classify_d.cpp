#include "fanocalc/classify.hpp"

#include "fanocalc/basis.hpp"
#include "fanocalc/niven.hpp"
#include "fanocalc/slope.hpp"

#include <algorithm>
#include <stdexcept>

namespace fanocalc {

namespace {

const char* kB4Citation =
    "H^4 of the base must be cyclic; a smooth quadric of dimension 4 has b4 = 2";
const char* kHKG2Citation =
    "a Mukai fourfold of degree divisible by 9 is a hyperplane section of K(G2) (Mukai), "
    "and such a section has H^4 of rank 2";
const char* kIndexCitation = "no Fano manifold of Picard number one with this dimension and index";

// H^2 = d Sigma with Sigma generating H^4: the degree H^dim is a multiple of d
// (dim 3) or d^2 (dim >= 4); on a surface H^2 = d exactly.
bool degree_compatible(int dim, int degree, int d) {
  if (dim <= 2) return degree == d;
  if (dim == 3) return degree % d == 0;
  return degree % (d * d) == 0;
}

bool is_kg2_section(const FanoEntry& e) { return e.dim == 4 && e.index == 2 && e.degree % 9 == 0; }

bool b4_too_big(const FanoEntry& e) { return e.b4_rank && *e.b4_rank >= 2; }

bool by_key(const InvariantTuple& a, const InvariantTuple& b) {
  if (a.n != b.n) return a.n < b.n;
  if (a.tau != b.tau) return a.tau < b.tau;
  return a.tau_prime < b.tau_prime;
}

ExclusionReport report(const InvariantTuple& t, std::string rule, std::vector<Witness> w,
                       std::string citation) {
  InvariantTuple c = t;
  c.status = TupleStatus::Excluded;
  c.reason = rule;
  return {c, std::move(rule), std::move(w), std::move(citation)};
}

}  // namespace

TypeDResult enumerate_type_D(const FanoDataset& data, int n_max, int tau_prime_max) {
  if (n_max < 2) throw std::invalid_argument("n_max must be at least 2");
  TypeDResult result;
  std::vector<InvariantTuple> candidates;

  // b = 1 and 4 = (tau^2 - Delta) d / d' = P (tau - Delta/tau) with P = B21 d,
  // and Delta < 0 forces tau P < 4.
  for (int tau = 1; tau < 4; ++tau) {
    for (int p = 1; tau * p < 4; ++p) {
      const Rat delta = Rat(tau * tau) - Rat(4 * tau) / Rat(p);
      if (delta.sign() >= 0) continue;
      const QuadNum z = tau_point(Rat(tau), delta);
      for (int n = 2; n <= n_max; ++n) {
        if (!arg_less_than(z, n + 1)) continue;
        auto nu_prime = solve_nu_prime(n, Rat(tau), delta, 1);
        if (!nu_prime || *nu_prime > tau_prime_max) continue;
        for (int b21 = 1; b21 <= p; ++b21) {
          if (p % b21 != 0 || tau % b21 != 0) continue;
          InvariantTuple t = make_tuple(n, ContractionKind::D, tau, *nu_prime, 1,
                                        normalized_c1(tau, 1), delta);
          t.b = 1;
          t.d = p / b21;
          t.d_prime = tau / b21;
          candidates.push_back(t.checked());
        }
      }
    }
  }
  std::sort(candidates.begin(), candidates.end(), by_key);

  for (const InvariantTuple& t : candidates) {
    const int dim_xp = t.n + 1;
    if (!data.has_index(t.n, t.i) || !data.has_index(dim_xp, t.i_prime)) {
      const bool x_missing = !data.has_index(t.n, t.i);
      result.exclusions.push_back(report(
          t, "no_index",
          {{"dim", Rat(x_missing ? t.n : dim_xp)}, {"index", Rat(x_missing ? t.i : t.i_prime)}},
          kIndexCitation));
      continue;
    }
    result.raw.push_back(t);

    // The two integral bases of H^4 must differ by a unimodular matrix.
    const BasisBReport bm = basis_map_B(Rat(t.nu), Rat(t.nu_prime), Rat(t.mu), Rat(t.c1), t.delta,
                                        Rat(*t.d), Rat(*t.b), Rat(*t.d_prime));
    if (!bm.ok()) {
      result.exclusions.push_back(report(t, "basis_B", {{"det", bm.det}},
                                         "codimension-2 change of basis must be unimodular"));
      continue;
    }

    std::vector<FanoEntry> xs;
    std::vector<FanoEntry> xps;
    for (const auto& e : data.with_index(t.n, t.i)) {
      if (degree_compatible(e.dim, e.degree, *t.d)) xs.push_back(e);
    }
    for (const auto& e : data.with_index(dim_xp, t.i_prime)) {
      if (degree_compatible(e.dim, e.degree, *t.d_prime)) xps.push_back(e);
    }
    if (xs.empty() || xps.empty()) {
      result.exclusions.push_back(report(t, "degree_divisibility", {{"d", Rat(*t.d)}, {"d_prime", Rat(*t.d_prime)}},
                                         "H^2 = d Sigma forces the degree to be a multiple of d"));
      continue;
    }

    std::erase_if(xs, b4_too_big);
    std::erase_if(xps, b4_too_big);
    if (xs.empty() || xps.empty()) {
      result.exclusions.push_back(report(t, "b4_rank", {{"b4_rank", Rat(2)}}, kB4Citation));
      continue;
    }

    std::erase_if(xs, is_kg2_section);
    if (xs.empty()) {
      result.exclusions.push_back(report(t, "kg2_hyperplane_section",
                                         {{"degree", Rat(18)}, {"b4_rank", Rat(2)}}, kHKG2Citation));
      continue;
    }

    InvariantTuple s = t;
    if (xs.size() == 1) {
      s.deg_x = Rat(xs.front().degree);
      s.name_x = xs.front().name;
    }
    if (xps.size() == 1) {
      s.deg_x_prime = Rat(xps.front().degree);
      s.name_x_prime = xps.front().name;
    }
    s.status = TupleStatus::Admissible;
    // The fibre of pi inside E maps to a line of X' = Q^3.
    s.reason = (s.n == 2 && s.name_x_prime == "Q^3") ? "(D1)" : "";
    result.survivors.push_back(s.checked());
  }
  return result;
}

FinAnalysis type_D_fin_analysis(const FanoDataset& data, int tau_prime_max, int n_max) {
  FinAnalysis out;

  // (a) The j-th factor of the top Chern class of S^tau' E (tau'-1) is
  // (tau'-2)/2 + (tau'-2j)/2 sqrt(Delta); with Delta < 0 it vanishes only if
  // both coefficients do.
  for (int tp = 1; tp <= tau_prime_max; ++tp) {
    for (int j = 0; j <= tp; ++j) {
      if (tp - 2 == 0 && tp - 2 * j == 0) out.vanishing_factors.emplace_back(tp, j);
    }
  }

  // (b) tau' = 2 gives rho = 0 and tau = 1, so sqrt(Delta) (1 + sqrt(Delta))^n
  // must be a negative real: sqrt(-Delta) = tan(pi/(2n)).
  for (int n = 2; n <= n_max; ++n) {
    auto t2 = tan_sq_pi_over(2 * n);
    if (!t2) continue;
    const Rat delta = -*t2;
    if (!check_rho_tau(n, Rat(1), Rat(0), delta)) continue;
    out.rational_n.emplace_back(n, delta);

    // Not X' = P^(n+1) here, so i = 2 and c1 = -1.
    InvariantTuple t = make_tuple(n, ContractionKind::D, 1, 2, 1, -1, delta);
    if (!data.has_index(n, t.i)) {
      out.exclusions.push_back(report(t, "no_index", {{"dim", Rat(n)}, {"index", Rat(t.i)}}, kIndexCitation));
      continue;
    }
    auto xps = data.with_index(n + 1, t.i_prime);
    if (!xps.empty() && std::all_of(xps.begin(), xps.end(), b4_too_big)) {
      out.exclusions.push_back(report(t, "b4_rank", {{"b4_rank", Rat(2)}}, kB4Citation));
      continue;
    }
    out.exclusions.push_back(report(t, "unresolved", {}, "no rule applies"));
  }

  // (c) X' = P^(n+1): X is a first order congruence of n-secant lines to a
  // codimension-2 T with one apparent n-tuple point.
  out.outcomes = {
      {"(D2)", "v_2(P^2) in G(1,3)", "P^3", "twisted cubic v_3(P^1)"},
      {"(D3)", "V_5^3 in G(1,4)", "P^4", "isomorphic projection of v_2(P^2)"},
  };
  return out;
}

}  // namespace fanocalc

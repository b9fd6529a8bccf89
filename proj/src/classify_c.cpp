#include "fanocalc/classify.hpp"

#include "fanocalc/niven.hpp"
#include "fanocalc/slope.hpp"

#include <algorithm>
#include <stdexcept>

namespace fanocalc {

namespace {

struct Labelled {
  int n;
  const char* x;
  const char* x_prime;
  const char* label;
};

// Families realizing each surviving pair of bases.
constexpr Labelled kLabels[] = {
    {2, "P^2", "P^2", "(C1)"},
    {3, "V_4^3", "P^3", "(C2)/(C6)"},
    {3, "Q^3", "Q^3", "(C3)"},
    {5, "V_4^5", "K(G2)", "(C4)"},
    {5, "W_36^5", "Q^5", "(C5)"},
};

std::string label_for(int n, const std::string& x, const std::string& xp) {
  for (const auto& l : kLabels) {
    if (l.n == n && x == l.x && xp == l.x_prime) return l.label;
  }
  return "";
}

bool b4_too_big(const FanoEntry& e) { return e.b4_rank && *e.b4_rank >= 2; }

struct DegreePair {
  Rat deg_x;
  std::optional<FanoEntry> x;  // empty when X lies outside the classified range
  FanoEntry xp;
};

// On a surface or threefold H^2 = d Sigma with Sigma the class of a point or a line.
void fill_d(InvariantTuple& t, const Rat& deg_x) {
  if (t.n <= 3) t.d = static_cast<int>(deg_x.to_int64());
}

ExclusionReport excluded(InvariantTuple t, std::string rule, std::vector<Witness> w, std::string citation) {
  t.status = TupleStatus::Excluded;
  t.reason = rule;
  return {t, std::move(rule), std::move(w), std::move(citation)};
}

void fill_unique(InvariantTuple& t, const std::vector<DegreePair>& pairs) {
  if (pairs.size() != 1) return;
  const DegreePair& p = pairs.front();
  t.deg_x = p.deg_x;
  t.deg_x_prime = Rat(p.xp.degree);
  if (p.x) t.name_x = p.x->name;
  t.name_x_prime = p.xp.name;
  fill_d(t, p.deg_x);
}

}  // namespace

std::vector<InvariantTuple> TypeCResult::all_rows() const {
  std::vector<InvariantTuple> rows = survivors;
  for (const auto& e : exclusions) rows.push_back(e.candidate);
  std::stable_sort(rows.begin(), rows.end(), [](const InvariantTuple& a, const InvariantTuple& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.tau != b.tau) return a.tau < b.tau;
    return a.tau_prime < b.tau_prime;
  });
  return rows;
}

TypeCResult enumerate_type_C(int n, const FanoDataset& data) {
  const auto tan2 = tan_sq_pi_over(n + 1);
  if ((n != 2 && n != 3 && n != 5) || !tan2) {
    throw std::invalid_argument("type C needs n in {2, 3, 5}");
  }
  TypeCResult result;

  // mu = 1, so tau = nu = i - 1 and tau' = nu' = i' - 2.
  for (int tau = 1; tau + 1 <= n + 1; ++tau) {
    for (int tau_prime = 1; tau_prime + 2 <= n + 1; ++tau_prime) {
      const Rat c1p = c1_prime(n, Rat(tau), Rat(tau_prime));
      if (!c1p.is_integer()) continue;
      const Rat delta = -Rat(tau * tau) * *tan2;
      InvariantTuple t = make_tuple(n, ContractionKind::C, tau, tau_prime, 1, normalized_c1(tau, 1), delta);
      t.c1_prime = c1p;
      t.y_dot_f = y_dot_f(c1p, t.tau_prime, 1);

      // Degrees: H_X'^n = r H_X^n. Unclassified X give no constraint.
      const Rat r = base_degree_ratio(n, t.tau);
      std::vector<DegreePair> pairs;
      for (const FanoEntry& xp : data.with_index(n, t.i_prime)) {
        if (b4_too_big(xp)) continue;
        const Rat deg_x = Rat(xp.degree) / r;
        if (!deg_x.is_integer()) continue;
        auto xs = data.match_manifolds(n, t.i, deg_x).entries;
        std::erase_if(xs, b4_too_big);
        if (!classified(n, t.i)) {
          // Only a label, when one is recorded.
          pairs.push_back({deg_x, xs.empty() ? std::nullopt : std::optional<FanoEntry>(xs.front()), xp});
          continue;
        }
        for (const FanoEntry& x : xs) pairs.push_back({deg_x, x, xp});
      }
      if (pairs.empty()) continue;  // not realizable by any pair of listed manifolds
      fill_unique(t, pairs);
      t.checked();

      // Ramification of the conic bundle pushes forward to -c1' H_X'.
      if (c1p.sign() > 0) {
        result.exclusions.push_back(excluded(t, "R_effectivity", {{"pi_prime_R", -c1p}},
                                             "the discriminant divisor of a conic bundle is effective"));
        continue;
      }

      // pi_*R = ((nu'+2)(nu nu'-1) + 2(nu+1) - c2 push) H_X for every listed X'.
      std::vector<Rat> push_values;
      bool push_known = true;
      for (const auto& p : pairs) {
        auto coeff = data.c2_push_coeff(p.xp.dim, p.xp.index, p.xp.degree);
        if (!coeff) {
          push_known = false;
          break;
        }
        push_values.push_back(pushforward_R(t.nu, t.nu_prime, *coeff));
      }
      if (push_known && !push_values.empty()) {
        const bool all_fail = std::all_of(push_values.begin(), push_values.end(), [&](const Rat& v) {
          return v.sign() < 0 || (v.is_zero() && tau == 1);
        });
        if (all_fail) {
          result.exclusions.push_back(excluded(
              t, "pushforward_R",
              {{"pi_R", push_values}, {"zero_case_uniform_splitting", tau == 1}},
              "pi_*R must be effective; pi_*R = 0 contradicts splitting type (0,-1) on lines"));
          continue;
        }
      }

      if (n == 5 && tau == 2 && tau_prime == 1) {
        result.exclusions.push_back(exclude_2_1(data));
        continue;
      }
      if (n == 5 && tau == 1 && tau_prime == 4) {
        result.exclusions.push_back(exclude_1_4());
        continue;
      }

      for (const auto& p : pairs) {
        InvariantTuple s = t;
        s.deg_x = p.deg_x;
        s.deg_x_prime = Rat(p.xp.degree);
        s.name_x = p.x ? std::optional<std::string>(p.x->name) : std::nullopt;
        s.name_x_prime = p.xp.name;
        fill_d(s, p.deg_x);
        s.status = TupleStatus::Admissible;
        s.reason = label_for(n, s.name_x.value_or(""), p.xp.name);
        result.survivors.push_back(s.checked());
      }
    }
  }
  return result;
}

}  // namespace fanocalc

#ifndef FANOCALC_CLASSIFY_HPP
#define FANOCALC_CLASSIFY_HPP

#include "fanocalc/dataset.hpp"
#include "fanocalc/invariant_tuple.hpp"
#include "fanocalc/rational.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace fanocalc {

/// Exact witness value attached to an exclusion: a number, a list of numbers, or a flag.
using WitnessValue = std::variant<Rat, std::vector<Rat>, bool>;

struct Witness {
  std::string key;
  WitnessValue value;

  friend bool operator==(const Witness&, const Witness&) = default;
};

std::string to_string(const WitnessValue& v);

struct ExclusionReport {
  InvariantTuple candidate;
  std::string rule;
  std::vector<Witness> witness;
  std::string citation;

  /// Value stored under key; throws std::out_of_range when absent.
  const WitnessValue& at(const std::string& key) const;
};

// ---- type P ---------------------------------------------------------------

/// Factorizations nu nu' = 4 cos^2(pi/(n+1)) for n in {2, 3, 5}, realized in
/// the dataset. Throws std::invalid_argument for other n.
std::vector<InvariantTuple> enumerate_type_P(int n, const FanoDataset& data);

// ---- type D ---------------------------------------------------------------

struct TypeDResult {
  std::vector<InvariantTuple> raw;        // candidates whose indices exist in the data
  std::vector<InvariantTuple> survivors;  // after the geometric filters, labelled
  std::vector<ExclusionReport> exclusions;
};

TypeDResult enumerate_type_D(const FanoDataset& data, int n_max = 6, int tau_prime_max = 8);

struct FinOutcome {
  std::string label;
  std::string x;        // embedded base
  std::string x_prime;  // target of the blow-down
  std::string center;   // blown-up locus
};

struct FinAnalysis {
  /// (tau', j) for which the j-th factor of the top Chern class vanishes identically in Delta.
  std::vector<std::pair<int, int>> vanishing_factors;
  /// n with rational Delta = -tan^2(pi/(2n)), together with that Delta.
  std::vector<std::pair<int, Rat>> rational_n;
  std::vector<ExclusionReport> exclusions;
  std::vector<FinOutcome> outcomes;
};

/// Case analysis when the exceptional divisor maps finitely onto X.
FinAnalysis type_D_fin_analysis(const FanoDataset& data, int tau_prime_max = 8, int n_max = 6);

// ---- type C ---------------------------------------------------------------

struct TypeCResult {
  std::vector<InvariantTuple> survivors;
  std::vector<ExclusionReport> exclusions;

  /// Survivors and excluded candidates together, sorted by (n, tau, tau').
  std::vector<InvariantTuple> all_rows() const;
};

TypeCResult enumerate_type_C(int n, const FanoDataset& data);

/// (tau, tau') = (2, 1) at n = 5: the blow-up would need X = m Sigma_Z with m = 4/3.
ExclusionReport exclude_2_1(const FanoDataset& data);
/// (tau, tau') = (1, 4) at n = 5: the rank-3 bundle on P^5 fails c1 c2 = c3 mod 2.
ExclusionReport exclude_1_4();

// ---- conic family table ---------------------------------------------------

struct FamilyRow {
  std::string x_prime;
  std::string family;  // the family M of lines on X'
  Rat tau_m;
  std::string x;
  Rat tau;
  Rat pullback_factor;  // tau_M / tau
};

std::vector<FamilyRow> family_table();

// ---- congruences of lines ---------------------------------------------------

struct CongruenceTuple {
  int alpha = 0;
  int z = 0;
  int m = 0;

  friend auto operator<=>(const CongruenceTuple&, const CongruenceTuple&) = default;
};

/// All (alpha, z, m) with m <= m_max, alpha = (m-1)/(m-z-1) an integer >= 3
/// and 0 < z <= 2m/3, sorted. alpha = 2 is dropped by rule.
std::vector<CongruenceTuple> enumerate_congruences(int m_max);

struct CongruenceProfile {
  int index = 0;
  int vmrt_components = 0;
  int vmrt_dim = 0;
  Rat deg_z;
  Rat bound;  // alpha^(m-z)
  bool below_bound = false;
};

/// Throws std::invalid_argument if t violates the tuple constraints or lzh <= 0.
CongruenceProfile congruence_profile(const CongruenceTuple& t, const Rat& lzh);

}  // namespace fanocalc

#endif  // FANOCALC_CLASSIFY_HPP

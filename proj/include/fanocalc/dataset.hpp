#ifndef FANOCALC_DATASET_HPP
#define FANOCALC_DATASET_HPP

#include "fanocalc/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fanocalc {

/// A Fano manifold of Picard number one, as recorded in the data file.
struct FanoEntry {
  int dim = 0;
  int index = 0;
  int degree = 0;
  std::string name;
  std::optional<int> b4_rank;  // blank when H^4 is not recorded
  std::string source_note;

  friend bool operator==(const FanoEntry&, const FanoEntry&) = default;
};

struct MatchResult {
  std::vector<FanoEntry> entries;
  bool non_integral_degree = false;
};

/**
 * True when Fano manifolds of this dimension and index are fully listed in
 * the data: coindex dim + 1 - index at most 3, or dim at most 3. Outside
 * that range an empty match carries no information.
 */
bool classified(int dim, int index);

class FanoDataset {
 public:
  FanoDataset() = default;

  /// Accepts a directory holding fano_manifolds.csv (and optionally
  /// c2_pushforward.csv) or a path to the manifold file itself.
  static FanoDataset load(const std::string& path);
  static FanoDataset from_csv(const std::string& manifolds, const std::string& c2_push = "");

  const std::vector<FanoEntry>& entries() const { return entries_; }

  MatchResult match_manifolds(int dim, int index, const Rat& degree) const;
  std::vector<FanoEntry> with_index(int dim, int index) const;
  bool has_index(int dim, int index) const { return !with_index(dim, index).empty(); }
  /// First matching name, if any.
  std::optional<std::string> name_of(int dim, int index, const Rat& degree) const;

  /// Degree of pi_* pi'^* c2(T_X') in units of H_X, for the target X'.
  std::optional<Rat> c2_push_coeff(int dim, int index, int degree) const;

 private:
  struct PushRow {
    int dim;
    int index;
    int degree;
    Rat coeff;
  };

  std::vector<FanoEntry> entries_;
  std::vector<PushRow> push_;
};

/// FANOCALC_DATA if set, else the data directory baked in at build time.
std::string default_data_path();

}  // namespace fanocalc

#endif  // FANOCALC_DATASET_HPP

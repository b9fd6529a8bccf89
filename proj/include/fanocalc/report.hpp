#ifndef FANOCALC_REPORT_HPP
#define FANOCALC_REPORT_HPP

#include "fanocalc/classify.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fanocalc {

enum class Format { Table, Csv, Json };

/// "table", "csv" or "json"; throws std::invalid_argument otherwise.
Format parse_format(const std::string& text);

struct Table {
  std::string title;  // empty for single-table reports
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  std::vector<std::string> comments;  // rendered as "# ..." lines (bounds, citations)
  std::vector<Table> tables;
};

/// CSV: comment lines, then each table (titled tables get a "# title" line,
/// tables are separated by a blank line). JSON mirrors the CSV fields, with
/// empty fields as null.
std::string render(const Report& report, Format format);

struct Bounds {
  int n_max = 6;
  int tau_prime_max = 8;
  int m_max = 19;
};

/// n unset means every n in {2, 3, 5}.
Report report_type_C(const FanoDataset& data, std::optional<int> n);
Report report_type_P(const FanoDataset& data, std::optional<int> n);
Report report_type_D(const FanoDataset& data, const Bounds& bounds);
Report report_congruences(const Bounds& bounds);
Report report_exclusion(const ExclusionReport& rep);
Report report_family_table();

/// Columns of the raw type-D table: n, i, tau, c1, c2, d, d', tau', i'.
const std::vector<std::string>& type_D_raw_header();
std::vector<std::string> type_D_raw_fields(const InvariantTuple& t);

}  // namespace fanocalc

#endif  // FANOCALC_REPORT_HPP

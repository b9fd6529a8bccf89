#ifndef FANOCALC_CSV_HPP
#define FANOCALC_CSV_HPP

#include <string>
#include <vector>

namespace fanocalc {

using CsvRow = std::vector<std::string>;

/// One CSV record terminated by '\n'. Fields containing a comma, quote or
/// newline are quoted, with embedded quotes doubled.
std::string csv_line(const CsvRow& fields);

/// Parses CSV text. Lines starting with '#' outside quotes are skipped, as
/// are empty lines. Throws std::invalid_argument on an unterminated quote.
std::vector<CsvRow> parse_csv(const std::string& text);

}  // namespace fanocalc

#endif  // FANOCALC_CSV_HPP

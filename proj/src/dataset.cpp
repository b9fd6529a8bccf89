#include "fanocalc/dataset.hpp"

#include "fanocalc/csv.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifndef FANOCALC_DEFAULT_DATA_DIR
#define FANOCALC_DEFAULT_DATA_DIR "data"
#endif

namespace fanocalc {

namespace {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot read data file " + p.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int to_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad integer for " + what + ": '" + s + "'");
  }
}

void require_header(const CsvRow& got, const CsvRow& want, const std::string& file) {
  if (got != want) throw std::invalid_argument(file + ": unexpected header");
}

}  // namespace

bool classified(int dim, int index) { return dim <= 3 || dim + 1 - index <= 3; }

FanoDataset FanoDataset::from_csv(const std::string& manifolds, const std::string& c2_push) {
  FanoDataset ds;
  auto rows = parse_csv(manifolds);
  if (rows.empty()) throw std::invalid_argument("manifold data is empty");
  require_header(rows.front(), {"dim", "index", "degree", "name", "b4_rank", "source_note"},
                 "manifold data");
  if (rows.size() == 1) throw std::invalid_argument("manifold data has a header but no rows");
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const CsvRow& r = rows[k];
    if (r.size() != 6) {
      throw std::invalid_argument("manifold data row " + std::to_string(k) + " has " +
                                  std::to_string(r.size()) + " fields");
    }
    FanoEntry e;
    e.dim = to_int(r[0], "dim");
    e.index = to_int(r[1], "index");
    e.degree = to_int(r[2], "degree");
    e.name = r[3];
    if (!r[4].empty()) e.b4_rank = to_int(r[4], "b4_rank");
    e.source_note = r[5];
    if (e.index < 1 || e.index > e.dim + 1 || e.degree < 1) {
      throw std::invalid_argument("manifold data row " + std::to_string(k) + " (" + e.name +
                                  ") violates 1 <= index <= dim+1, degree >= 1");
    }
    ds.entries_.push_back(std::move(e));
  }

  if (!c2_push.empty()) {
    auto push_rows = parse_csv(c2_push);
    if (push_rows.empty()) throw std::invalid_argument("pushforward data is empty");
    require_header(push_rows.front(), {"dim", "index", "degree", "c2_push_coeff", "source_note"},
                   "pushforward data");
    for (std::size_t k = 1; k < push_rows.size(); ++k) {
      const CsvRow& r = push_rows[k];
      if (r.size() != 5) throw std::invalid_argument("pushforward data row " + std::to_string(k));
      ds.push_.push_back({to_int(r[0], "dim"), to_int(r[1], "index"), to_int(r[2], "degree"),
                          Rat::parse(r[3])});
    }
  }
  return ds;
}

FanoDataset FanoDataset::load(const std::string& path) {
  namespace fs = std::filesystem;
  fs::path manifolds = path;
  if (fs::is_directory(manifolds)) manifolds /= "fano_manifolds.csv";
  const fs::path push = manifolds.parent_path() / "c2_pushforward.csv";
  const std::string push_text = fs::exists(push) ? read_file(push) : "";
  try {
    return from_csv(read_file(manifolds), push_text);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(manifolds.string() + ": " + e.what());
  }
}

MatchResult FanoDataset::match_manifolds(int dim, int index, const Rat& degree) const {
  MatchResult out;
  if (!degree.is_integer()) {
    out.non_integral_degree = true;
    return out;
  }
  for (const auto& e : entries_) {
    if (e.dim == dim && e.index == index && Rat(e.degree) == degree) out.entries.push_back(e);
  }
  return out;
}

std::vector<FanoEntry> FanoDataset::with_index(int dim, int index) const {
  std::vector<FanoEntry> out;
  for (const auto& e : entries_) {
    if (e.dim == dim && e.index == index) out.push_back(e);
  }
  return out;
}

std::optional<std::string> FanoDataset::name_of(int dim, int index, const Rat& degree) const {
  auto m = match_manifolds(dim, index, degree);
  if (m.entries.empty()) return std::nullopt;
  return m.entries.front().name;
}

std::optional<Rat> FanoDataset::c2_push_coeff(int dim, int index, int degree) const {
  for (const auto& r : push_) {
    if (r.dim == dim && r.index == index && r.degree == degree) return r.coeff;
  }
  return std::nullopt;
}

std::string default_data_path() {
  if (const char* env = std::getenv("FANOCALC_DATA"); env != nullptr && *env != '\0') return env;
  return FANOCALC_DEFAULT_DATA_DIR;
}

}  // namespace fanocalc

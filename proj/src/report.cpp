#include "fanocalc/report.hpp"

#include "fanocalc/csv.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fanocalc {

Format parse_format(const std::string& text) {
  if (text == "table") return Format::Table;
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw std::invalid_argument("unknown format \"" + text + "\" (expected table, csv or json)");
}

namespace {

std::string render_csv(const Report& r) {
  std::string out;
  for (const auto& c : r.comments) out += "# " + c + "\n";
  for (std::size_t k = 0; k < r.tables.size(); ++k) {
    const Table& t = r.tables[k];
    if (k > 0) out += "\n";
    if (!t.title.empty()) out += "# " + t.title + "\n";
    out += csv_line(t.columns);
    for (const auto& row : t.rows) out += csv_line(row);
  }
  return out;
}

std::string render_table(const Report& r) {
  std::ostringstream out;
  for (const auto& c : r.comments) out << "# " << c << "\n";
  for (std::size_t k = 0; k < r.tables.size(); ++k) {
    const Table& t = r.tables[k];
    if (k > 0 || !r.comments.empty()) out << "\n";
    if (!t.title.empty()) out << "[" << t.title << "]\n";
    std::vector<std::size_t> width(t.columns.size());
    for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
    for (const auto& row : t.rows) {
      for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
      std::string s;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c > 0) s += "  ";
        s += cells[c];
        if (c + 1 < cells.size()) s.append(width[c] - cells[c].size(), ' ');
      }
      out << s << "\n";
    };
    line(t.columns);
    if (t.rows.empty()) out << "(none)\n";
    for (const auto& row : t.rows) line(row);
  }
  return out.str();
}

std::string render_json(const Report& r) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["comments"] = r.comments;
  doc["tables"] = ordered_json::array();
  for (const Table& t : r.tables) {
    ordered_json jt;
    jt["title"] = t.title;
    jt["rows"] = ordered_json::array();
    for (const auto& row : t.rows) {
      ordered_json jr = ordered_json::object();
      for (std::size_t c = 0; c < t.columns.size(); ++c) {
        const std::string& v = c < row.size() ? row[c] : std::string();
        if (v.empty()) {
          jr[t.columns[c]] = nullptr;
        } else {
          jr[t.columns[c]] = v;
        }
      }
      jt["rows"].push_back(std::move(jr));
    }
    doc["tables"].push_back(std::move(jt));
  }
  return doc.dump(2) + "\n";
}

std::string opt(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

std::string witness_text(const std::vector<Witness>& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k > 0) s += ";";
    s += w[k].key + "=" + to_string(w[k].value);
  }
  return s;
}

Table exclusion_table(const std::vector<ExclusionReport>& reps, std::string title) {
  Table t{std::move(title), {"n", "tau", "tau_prime", "rule", "witness", "citation"}, {}};
  for (const auto& e : reps) {
    t.rows.push_back({std::to_string(e.candidate.n), e.candidate.tau.str(), e.candidate.tau_prime.str(), e.rule,
                      witness_text(e.witness), e.citation});
  }
  return t;
}

std::vector<int> c_dims(std::optional<int> n) {
  if (n) return {*n};
  return {2, 3, 5};
}

}  // namespace

std::string render(const Report& report, Format format) {
  switch (format) {
    case Format::Csv: return render_csv(report);
    case Format::Json: return render_json(report);
    case Format::Table: break;
  }
  return render_table(report);
}

const std::vector<std::string>& type_D_raw_header() {
  static const std::vector<std::string> h = {"n", "i", "tau", "c1", "c2", "d", "d_prime", "tau_prime", "i_prime"};
  return h;
}

std::vector<std::string> type_D_raw_fields(const InvariantTuple& t) {
  const auto c2 = t.c2();
  return {std::to_string(t.n), std::to_string(t.i), t.tau.str(), std::to_string(t.c1), c2 ? c2->str() : "",
          opt(t.d), opt(t.d_prime), t.tau_prime.str(), std::to_string(t.i_prime)};
}

Report report_type_C(const FanoDataset& data, std::optional<int> n) {
  Report r;
  Table t{"", tuple_csv_header(), {}};
  for (int dim : c_dims(n)) {
    for (const auto& row : enumerate_type_C(dim, data).all_rows()) t.rows.push_back(tuple_csv_fields(row));
  }
  r.tables.push_back(std::move(t));
  return r;
}

Report report_type_P(const FanoDataset& data, std::optional<int> n) {
  Report r;
  std::vector<std::string> cols = {"nu", "nu_prime", "mu"};
  cols.insert(cols.begin(), tuple_csv_header().begin(), tuple_csv_header().end());
  Table t{"", cols, {}};
  for (int dim : c_dims(n)) {
    for (const auto& row : enumerate_type_P(dim, data)) {
      auto f = tuple_csv_fields(row);
      f.push_back(std::to_string(row.nu));
      f.push_back(std::to_string(row.nu_prime));
      f.push_back(std::to_string(row.mu));
      t.rows.push_back(std::move(f));
    }
  }
  r.tables.push_back(std::move(t));
  return r;
}

Report report_type_D(const FanoDataset& data, const Bounds& bounds) {
  Report r;
  r.comments.push_back("n_max=" + std::to_string(bounds.n_max));
  r.comments.push_back("tau_prime_max=" + std::to_string(bounds.tau_prime_max));
  const TypeDResult d = enumerate_type_D(data, bounds.n_max, bounds.tau_prime_max);

  Table raw{"raw", type_D_raw_header(), {}};
  for (const auto& t : d.raw) raw.rows.push_back(type_D_raw_fields(t));
  Table surv{"survivors", tuple_csv_header(), {}};
  for (const auto& t : d.survivors) surv.rows.push_back(tuple_csv_fields(t));
  r.tables.push_back(std::move(raw));
  r.tables.push_back(std::move(surv));
  r.tables.push_back(exclusion_table(d.exclusions, "exclusions"));

  const FinAnalysis fin = type_D_fin_analysis(data, bounds.tau_prime_max, bounds.n_max);
  Table vanish{"fin_vanishing_factors", {"tau_prime", "j"}, {}};
  for (const auto& [tp, j] : fin.vanishing_factors) vanish.rows.push_back({std::to_string(tp), std::to_string(j)});
  Table rational{"fin_rational_n", {"n", "Delta"}, {}};
  for (const auto& [n, delta] : fin.rational_n) rational.rows.push_back({std::to_string(n), delta.str()});
  Table outcomes{"fin_outcomes", {"label", "X", "X_prime", "center"}, {}};
  for (const auto& o : fin.outcomes) outcomes.rows.push_back({o.label, o.x, o.x_prime, o.center});
  r.tables.push_back(std::move(vanish));
  r.tables.push_back(std::move(rational));
  r.tables.push_back(exclusion_table(fin.exclusions, "fin_exclusions"));
  r.tables.push_back(std::move(outcomes));
  return r;
}

Report report_congruences(const Bounds& bounds) {
  Report r;
  r.comments.push_back("m_max=" + std::to_string(bounds.m_max));
  Table t{"", {"alpha", "z", "m", "index", "vmrt_components", "vmrt_dim", "deg_Z_bound"}, {}};
  for (const auto& c : enumerate_congruences(bounds.m_max)) {
    // Any positive L^z H gives the same structural fields.
    const CongruenceProfile p = congruence_profile(c, Rat(1));
    t.rows.push_back({std::to_string(c.alpha), std::to_string(c.z), std::to_string(c.m), std::to_string(p.index),
                      std::to_string(p.vmrt_components), std::to_string(p.vmrt_dim), p.bound.str()});
  }
  r.tables.push_back(std::move(t));
  return r;
}

Report report_exclusion(const ExclusionReport& rep) {
  Report r;
  r.comments.push_back("rule=" + rep.rule);
  r.comments.push_back("candidate n=" + std::to_string(rep.candidate.n) + " tau=" + rep.candidate.tau.str() +
                       " tau_prime=" + rep.candidate.tau_prime.str());
  r.comments.push_back("citation: " + rep.citation);
  Table t{"", {"key", "value"}, {}};
  for (const auto& w : rep.witness) t.rows.push_back({w.key, to_string(w.value)});
  r.tables.push_back(std::move(t));
  return r;
}

Report report_family_table() {
  Report r;
  Table t{"", {"X_prime", "family", "tau_M", "X", "tau", "pullback_factor"}, {}};
  for (const auto& row : family_table()) {
    t.rows.push_back({row.x_prime, row.family, row.tau_m.str(), row.x, row.tau.str(), row.pullback_factor.str()});
  }
  r.tables.push_back(std::move(t));
  return r;
}

}  // namespace fanocalc

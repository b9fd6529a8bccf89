#include "cli.hpp"

#include "fanocalc/classify.hpp"
#include "fanocalc/expr.hpp"
#include "fanocalc/report.hpp"
#include "fanocalc/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>

namespace fanocalc::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string data_path;
  std::string type;
  std::optional<int> n;
  Bounds bounds;
  std::string format = "table";
  std::string ctx_path;
  std::string expression;
  std::vector<std::string> lets;
  std::string exclusion_case;
};

FanoDataset load_data(const std::string& path) {
  try {
    return FanoDataset::load(path);
  } catch (const std::exception& e) {
    throw UsageError("cannot load dataset " + path + ": " + e.what());
  }
}

int cmd_verify(const Options& o, std::ostream& out) {
  const FanoDataset data = load_data(o.data_path);
  int failed = 0;
  for (const CheckResult& r : run_verify(data)) {
    if (r.passed) {
      out << "PASS " << r.name << " (" << r.cases << " cases)\n";
      continue;
    }
    ++failed;
    out << "FAIL " << r.name << ": " << r.anchor << "\n";
    out << "  - expected " << r.expected << "\n";
    out << "  + actual   " << r.actual << "\n";
  }
  out << (failed == 0 ? "all checks passed\n" : std::to_string(failed) + " check(s) failed\n");
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  if (o.type == "congruence") {
    out << render(report_congruences(o.bounds), format);
    return kExitOk;
  }
  const FanoDataset data = load_data(o.data_path);
  if (o.type == "C") {
    out << render(report_type_C(data, o.n), format);
  } else if (o.type == "P") {
    out << render(report_type_P(data, o.n), format);
  } else {
    Bounds b = o.bounds;
    if (o.n) b.n_max = *o.n;
    out << render(report_type_D(data, b), format);
  }
  return kExitOk;
}

std::shared_ptr<const RingCtx> load_ctx(const std::string& path) {
  try {
    return std::make_shared<const RingCtx>(load_context(path));
  } catch (const std::exception& e) {
    throw UsageError("cannot load context " + path + ": " + e.what());
  }
}

int cmd_eval(const Options& o, std::ostream& out, std::ostream& err) {
  const auto ctx = load_ctx(o.ctx_path);
  Bindings b = default_bindings(ctx);
  try {
    for (const std::string& let : o.lets) {
      const auto eq = let.find('=');
      if (eq == std::string::npos || eq == 0) throw UsageError("--let expects NAME=EXPR, got \"" + let + "\"");
      const std::string name = let.substr(0, eq);
      const auto toks = tokenize(name);
      if (toks.size() != 1 || toks.front().kind != TokenKind::Symbol) {
        throw UsageError("--let name \"" + name + "\" is not a symbol");
      }
      b.insert_or_assign(name, evaluate(*parse(let.substr(eq + 1)), ctx, b).value);
    }
    const EvalResult r = evaluate(*parse(o.expression), ctx, b);
    for (const auto& note : r.notes) err << "note: " << note << "\n";
    out << render(r) << "\n";
  } catch (const ExprError& e) {
    throw UsageError(e.what());
  }
  return kExitOk;
}

int cmd_exclusions(const Options& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  if (o.exclusion_case == "1-4") {
    out << render(report_exclusion(exclude_1_4()), format);
  } else {
    out << render(report_exclusion(exclude_2_1(load_data(o.data_path))), format);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  o.data_path = default_data_path();

  CLI::App app{"Exact intersection numbers and case tables for rank-two Fano bundles", "fanocalc"};
  app.require_subcommand(1);
  app.add_option("--data", o.data_path, "dataset directory or fano_manifolds.csv (env FANOCALC_DATA)");

  auto* verify = app.add_subcommand("verify", "run the invariant suite");

  auto* enumerate = app.add_subcommand("enumerate", "regenerate a case table");
  enumerate->add_option("--type", o.type, "P, D, C or congruence")
      ->required()
      ->check(CLI::IsMember({"P", "D", "C", "congruence"}));
  enumerate->add_option("--n", o.n, "base dimension (P, C) or largest dimension (D)");
  enumerate->add_option("--n-max", o.bounds.n_max, "largest dimension for type D")->check(CLI::Range(2, 64));
  enumerate->add_option("--tau-prime-max", o.bounds.tau_prime_max, "largest tau' scanned for type D")
      ->check(CLI::Range(1, 64));
  enumerate->add_option("--m-max", o.bounds.m_max, "largest ambient dimension for congruences")
      ->check(CLI::Range(3, 10000));
  enumerate->add_option("--format", o.format, "table, csv or json")->check(CLI::IsMember({"table", "csv", "json"}));

  auto* eval = app.add_subcommand("eval", "evaluate an expression in a context file");
  eval->add_option("--ctx", o.ctx_path, "context file")->required();
  eval->add_option("--let", o.lets, "bind NAME=EXPR before evaluating (repeatable)");
  eval->add_option("expr", o.expression, "expression")->required();

  auto* exclusions = app.add_subcommand("exclusions", "print an exclusion dossier");
  exclusions->add_option("--case", o.exclusion_case, "1-4 or 2-1")->required()->check(CLI::IsMember({"1-4", "2-1"}));
  exclusions->add_option("--format", o.format, "table, csv or json")->check(CLI::IsMember({"table", "csv", "json"}));

  auto* family = app.add_subcommand("family-table", "print the conic family table");
  family->add_option("--format", o.format, "table, csv or json")->check(CLI::IsMember({"table", "csv", "json"}));

  std::vector<std::string> argv_store = {"fanocalc"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "fanocalc: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(o, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (eval->parsed()) return cmd_eval(o, out, err);
    if (exclusions->parsed()) return cmd_exclusions(o, out);
    if (family->parsed()) {
      out << render(report_family_table(), parse_format(o.format));
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "fanocalc: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "fanocalc: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fanocalc::cli

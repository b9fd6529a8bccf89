#include "fanocalc/chow.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace fanocalc {

RingCtx RingCtx::make(int n, Rat rel_a, Rat rel_b, Rat degree_s,
                      std::pair<std::string, std::string> names) {
  if (n < 2) throw std::invalid_argument("ring context requires n >= 2");
  if (degree_s.sign() <= 0) throw std::invalid_argument("ring context requires degree_s > 0");
  if (names.first.empty() || names.second.empty() || names.first == names.second) {
    throw std::invalid_argument("ring context needs two distinct generator names");
  }
  RingCtx ctx;
  ctx.n = n;
  ctx.gen_names = std::move(names);
  ctx.rel_a = std::move(rel_a);
  ctx.rel_b = std::move(rel_b);
  ctx.degree_s = std::move(degree_s);
  return ctx;
}

RingElem::RingElem(std::shared_ptr<const RingCtx> ctx)
    : ctx_(std::move(ctx)), coeffs_(Coeffs::Zero(ctx_->n + 1, 2)) {}

RingElem::RingElem(std::shared_ptr<const RingCtx> ctx, Coeffs coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  if (coeffs_.rows() != ctx_->n + 1) throw std::invalid_argument("coefficient matrix has wrong size");
}

RingElem RingElem::constant(std::shared_ptr<const RingCtx> ctx, const Rat& c) {
  return monomial(std::move(ctx), 0, 0, c);
}

RingElem RingElem::generator(std::shared_ptr<const RingCtx> ctx, int which) {
  if (which == 0) return monomial(std::move(ctx), 1, 0);
  if (which == 1) return monomial(std::move(ctx), 0, 1);
  throw std::invalid_argument("generator index must be 0 or 1");
}

RingElem RingElem::monomial(std::shared_ptr<const RingCtx> ctx, int i, int j, const Rat& c) {
  if (i < 0 || i > 1 || j < 0) throw std::invalid_argument("not a normal-form monomial");
  RingElem e(std::move(ctx));
  if (j <= e.ctx_->n) e.coeffs_(j, i) = c;
  return e;
}

Rat RingElem::coeff(int i, int j) const {
  if (i < 0 || i > 1 || j < 0 || j > ctx_->n) return Rat(0);
  return coeffs_(j, i);
}

bool RingElem::is_zero() const {
  for (Eigen::Index j = 0; j < coeffs_.rows(); ++j) {
    if (!coeffs_(j, 0).is_zero() || !coeffs_(j, 1).is_zero()) return false;
  }
  return true;
}

std::optional<int> RingElem::homogeneous_degree() const {
  std::optional<int> deg;
  for (int j = 0; j <= ctx_->n; ++j) {
    for (int i = 0; i < 2; ++i) {
      if (coeffs_(j, i).is_zero()) continue;
      if (deg && *deg != i + j) return std::nullopt;
      deg = i + j;
    }
  }
  return deg;
}

void RingElem::require_same_ctx(const RingElem& rhs) const {
  if (ctx_ != rhs.ctx_ && !(*ctx_ == *rhs.ctx_)) {
    throw ContextMismatch("cannot combine elements of different intersection rings");
  }
}

RingElem RingElem::operator-() const { return RingElem(ctx_, -coeffs_); }

RingElem& RingElem::operator+=(const RingElem& rhs) {
  require_same_ctx(rhs);
  coeffs_ += rhs.coeffs_;
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& rhs) {
  require_same_ctx(rhs);
  coeffs_ -= rhs.coeffs_;
  return *this;
}

RingElem& RingElem::operator*=(const Rat& k) {
  coeffs_ *= k;
  return *this;
}

RingElem& RingElem::operator*=(const RingElem& rhs) {
  require_same_ctx(rhs);
  const int n = ctx_->n;
  Coeffs out = Coeffs::Zero(n + 1, 2);
  for (int j1 = 0; j1 <= n; ++j1) {
    for (int i1 = 0; i1 < 2; ++i1) {
      const Rat& x = coeffs_(j1, i1);
      if (x.is_zero()) continue;
      for (int j2 = 0; j1 + j2 <= n; ++j2) {
        for (int i2 = 0; i2 < 2; ++i2) {
          const Rat& y = rhs.coeffs_(j2, i2);
          if (y.is_zero()) continue;
          const int i = i1 + i2;
          const int j = j1 + j2;
          Rat c = x * y;
          if (i < 2) {
            out(j, i) += c;
            continue;
          }
          // G1^2 G2^j = a G1 G2^(j+1) + b G2^(j+2)
          if (j + 1 <= n) out(j + 1, 1) += ctx_->rel_a * c;
          if (j + 2 <= n) out(j + 2, 0) += ctx_->rel_b * c;
        }
      }
    }
  }
  coeffs_ = std::move(out);
  return *this;
}

bool operator==(const RingElem& a, const RingElem& b) {
  if (a.ctx_ != b.ctx_ && !(*a.ctx_ == *b.ctx_)) return false;
  return a.coeffs_ == b.coeffs_;
}

namespace {

std::string factor(const std::string& name, int e) {
  std::string base = name.starts_with('-') ? "(" + name + ")" : name;
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

}  // namespace

std::string RingElem::str() const {
  std::string out;
  for (int deg = 0; deg <= ctx_->n + 1; ++deg) {
    for (int i = 1; i >= 0; --i) {
      const int j = deg - i;
      if (j < 0 || j > ctx_->n) continue;
      Rat c = coeffs_(j, i);
      if (c.is_zero()) continue;
      std::string mono;
      if (i == 1) mono = factor(ctx_->gen_names.first, 1);
      if (j > 0) mono += (mono.empty() ? "" : "*") + factor(ctx_->gen_names.second, j);
      const bool negative = c.sign() < 0;
      Rat mag = negative ? -c : c;
      std::string term;
      if (mono.empty()) {
        term = mag.str();
      } else if (mag == Rat(1)) {
        term = mono;
      } else {
        term = mag.str() + "*" + mono;
      }
      if (out.empty()) {
        out = negative ? "-" + term : term;
      } else {
        out += negative ? " - " : " + ";
        out += term;
      }
    }
  }
  return out.empty() ? "0" : out;
}

RingElem pow(const RingElem& x, unsigned e) {
  RingElem result = RingElem::constant(x.ctx_ptr(), Rat(1));
  RingElem base = x;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

RingElem reduce(const Polynomial& raw, std::shared_ptr<const RingCtx> ctx) {
  RingElem out(ctx);
  const RingElem g1 = RingElem::generator(ctx, 0);
  std::vector<RingElem> g1_powers{RingElem::constant(ctx, Rat(1))};
  for (const auto& [exps, c] : raw) {
    const auto [p, q] = exps;
    if (p < 0 || q < 0) throw std::invalid_argument("negative exponent in polynomial");
    if (c.is_zero() || p + q > ctx->n + 1) continue;
    while (static_cast<int>(g1_powers.size()) <= p) g1_powers.push_back(g1_powers.back() * g1);
    out += g1_powers[p] * RingElem::monomial(ctx, 0, q, c);
  }
  return out;
}

Rat intersection_degree(const RingElem& e) {
  const int n = e.ctx().n;
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i < 2; ++i) {
      if (i == 1 && j == n) continue;
      if (!e.coeffs()(j, i).is_zero()) {
        throw std::invalid_argument("intersection_degree needs a class of degree " +
                                    std::to_string(n + 1) + ", got " + e.str());
      }
    }
  }
  return e.coeffs()(n, 1) * e.ctx().degree_s;
}

std::string serialize_context(const RingCtx& ctx) {
  std::ostringstream os;
  os << "n=" << ctx.n << '\n'
     << "gen_names=" << ctx.gen_names.first << ',' << ctx.gen_names.second << '\n'
     << "rel_a=" << ctx.rel_a.str() << '\n'
     << "rel_b=" << ctx.rel_b.str() << '\n'
     << "degree_s=" << ctx.degree_s.str() << '\n';
  return os.str();
}

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

RingCtx parse_context(const std::string& text) {
  std::istringstream in(text);
  std::map<std::string, std::string> fields;
  static const std::set<std::string> known{"n", "gen_names", "rel_a", "rel_b", "degree_s"};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("context line " + std::to_string(lineno) + ": expected key=value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (!known.contains(key)) {
      throw std::invalid_argument("context line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    if (!fields.emplace(key, value).second) {
      throw std::invalid_argument("context line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    }
  }
  for (const auto& key : known) {
    if (key != "gen_names" && !fields.contains(key)) {
      throw std::invalid_argument("context is missing '" + key + "'");
    }
  }

  std::pair<std::string, std::string> names{"L", "H"};
  if (auto it = fields.find("gen_names"); it != fields.end()) {
    const auto comma = it->second.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("gen_names must be two comma-separated labels");
    names = {trim(it->second.substr(0, comma)), trim(it->second.substr(comma + 1))};
  }

  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(fields["n"], &used);
    if (used != fields["n"].size()) throw std::invalid_argument("trailing text");
  } catch (const std::exception&) {
    throw std::invalid_argument("context field n is not an integer: '" + fields["n"] + "'");
  }
  return RingCtx::make(n, Rat::parse(fields["rel_a"]), Rat::parse(fields["rel_b"]),
                       Rat::parse(fields["degree_s"]), names);
}

RingCtx load_context(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read context file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_context(buf.str());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

}  // namespace fanocalc

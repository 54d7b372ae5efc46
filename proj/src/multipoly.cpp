#include "simplexbound/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "simplexbound/errors.hpp"

namespace simplexbound {

unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

MultiPoly MultiPoly::constant(std::size_t nvars, const Integer& c) {
  MultiPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t i) {
  if (i < 1 || i > nvars) throw Error(ErrorCode::IndexOutOfRange, "variable X" + std::to_string(i));
  Exponent e(nvars, 0);
  e[i - 1] = 1;
  MultiPoly p(nvars);
  p.add_term(e, 1);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Integer MultiPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer MultiPoly::constant_term() const { return coeff(Exponent(nvars_, 0)); }

void MultiPoly::add_term(const Exponent& e, const Integer& c) {
  if (e.size() != nvars_) {
    throw Error(ErrorCode::DimensionMismatch, "exponent length " + std::to_string(e.size()) +
                                                  " for " + std::to_string(nvars_) + " variables");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_same_nvars(const MultiPoly& other) const {
  if (nvars_ != other.nvars_) {
    throw Error(ErrorCode::DimensionMismatch, "mixing polynomials in " + std::to_string(nvars_) +
                                                  " and " + std::to_string(other.nvars_) + " variables");
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  check_same_nvars(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  check_same_nvars(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_nvars(b);
  MultiPoly r(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly result = constant(nvars_, 1);
  for (unsigned i = 0; i < n; ++i) result = result * *this;
  return result;
}

ProblemInstance make_instance(const MultiPoly& p) {
  ProblemInstance inst{p, p.nvars(), total_degree(p), bitsize(p)};
  return inst;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  struct RawTerm {
    Integer coeff;
    std::map<std::size_t, unsigned> powers;
  };

  std::vector<RawTerm> parse() {
    std::vector<RawTerm> terms;
    skip_ws();
    if (at_end()) fail(ErrorCode::SyntaxError, "empty polynomial");
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    terms.push_back(parse_term(sign));
    while (true) {
      skip_ws();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') fail(ErrorCode::SyntaxError, std::string("unexpected '") + op + "'");
      ++pos_;
      terms.push_back(parse_term(op == '-' ? -1 : 1));
    }
    return terms;
  }

  std::size_t max_var() const { return max_var_; }

 private:
  [[noreturn]] void fail(ErrorCode code, const std::string& msg) const {
    throw ParseError(code, pos_, msg);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(text_[pos_++]);
    return out;
  }

  Integer parse_integer() {
    const std::string ds = digits();
    if (!at_end() && (peek() == '.' || peek() == '/' || peek() == 'e' || peek() == 'E')) {
      fail(ErrorCode::NonIntegerCoefficient, "coefficient must be an integer");
    }
    return Integer(ds, 10);
  }

  unsigned long parse_posint(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    const std::string ds = digits();
    if (ds.empty()) fail(ErrorCode::SyntaxError, std::string("expected ") + what);
    if (ds.size() > 9) {
      pos_ = start;
      fail(ErrorCode::SyntaxError, std::string(what) + " too large");
    }
    const unsigned long v = std::stoul(ds);
    if (v == 0) {
      pos_ = start;
      fail(ErrorCode::SyntaxError, std::string(what) + " must be positive");
    }
    return v;
  }

  void parse_factor(RawTerm& t) {
    skip_ws();
    if (at_end() || peek() != 'X') fail(ErrorCode::SyntaxError, "expected variable X<n>");
    ++pos_;
    const std::size_t var = parse_posint("variable index");
    max_var_ = std::max(max_var_, var);
    unsigned power = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      power = static_cast<unsigned>(parse_posint("exponent"));
    }
    t.powers[var] += power;
  }

  RawTerm parse_term(int sign) {
    skip_ws();
    if (at_end()) fail(ErrorCode::SyntaxError, "expected term");
    RawTerm t{Integer(sign), {}};
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coeff *= parse_integer();
      skip_ws();
      if (at_end() || peek() != '*') return t;
      ++pos_;
    } else if (peek() == '.') {
      fail(ErrorCode::NonIntegerCoefficient, "coefficient must be an integer");
    }
    parse_factor(t);
    while (true) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
      parse_factor(t);
    }
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t max_var_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, std::optional<std::size_t> nvars_hint) {
  Parser parser(text);
  const auto raw = parser.parse();
  const std::size_t k = nvars_hint.value_or(parser.max_var());
  if (parser.max_var() > k) {
    throw Error(ErrorCode::DimensionMismatch, "X" + std::to_string(parser.max_var()) +
                                                  " exceeds the declared " + std::to_string(k) +
                                                  " variables");
  }
  MultiPoly p(k);
  for (const auto& t : raw) {
    Exponent e(k, 0);
    for (const auto& [var, power] : t.powers) e[var - 1] = power;
    p.add_term(e, t.coeff);
  }
  return p;
}

std::string format_poly(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Exponent, Integer>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const unsigned da = total_degree(a.first), db = total_degree(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const Integer mag = abs(c);
    const bool is_const = total_degree(e) == 0;
    if (is_const) {
      os << mag;
      continue;
    }
    bool need_star = false;
    if (mag != 1) {
      os << mag;
      need_star = true;
    }
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (need_star) os << "*";
      os << "X" << (v + 1);
      if (e[v] > 1) os << "^" << e[v];
      need_star = true;
    }
  }
  return os.str();
}

unsigned total_degree(const MultiPoly& p) {
  unsigned d = 0;
  for (const auto& [e, c] : p.terms()) d = std::max(d, total_degree(e));
  return d;
}

unsigned long bitsize(const MultiPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "bitsize of the zero polynomial");
  unsigned long tau = 0;
  for (const auto& [e, c] : p.terms()) tau = std::max(tau, bit_length(c));
  return tau;
}

MultiPoly partial_derivative(const MultiPoly& p, std::size_t i) {
  if (i < 1 || i > p.nvars()) throw Error(ErrorCode::IndexOutOfRange, "derivative in X" + std::to_string(i));
  MultiPoly r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    const unsigned power = e[i - 1];
    if (power == 0) continue;
    Exponent lowered = e;
    --lowered[i - 1];
    r.add_term(lowered, c * power);
  }
  return r;
}

Rational eval_rational(const MultiPoly& p, std::span<const Rational> x) {
  if (x.size() != p.nvars()) {
    throw Error(ErrorCode::DimensionMismatch, "point has " + std::to_string(x.size()) +
                                                  " coordinates, polynomial has " +
                                                  std::to_string(p.nvars()) + " variables");
  }
  Rational sum = 0;
  Rational term;
  Rational power;
  for (const auto& [e, c] : p.terms()) {
    term = c;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      mpz_pow_ui(power.get_num_mpz_t(), x[v].get_num_mpz_t(), e[v]);
      mpz_pow_ui(power.get_den_mpz_t(), x[v].get_den_mpz_t(), e[v]);
      term *= power;
    }
    sum += term;
  }
  return sum;
}

MultiPoly restrict_zero(const MultiPoly& p, std::size_t i) {
  if (i < 1 || i > p.nvars()) throw Error(ErrorCode::IndexOutOfRange, "restriction of X" + std::to_string(i));
  MultiPoly r(p.nvars() - 1);
  for (const auto& [e, c] : p.terms()) {
    if (e[i - 1] != 0) continue;
    Exponent reduced;
    reduced.reserve(e.size() - 1);
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (v != i - 1) reduced.push_back(e[v]);
    }
    r.add_term(reduced, c);
  }
  return r;
}

MultiPoly substitute_simplex_hyperplane(const MultiPoly& p) {
  const std::size_t k = p.nvars();
  if (k == 0) throw Error(ErrorCode::IndexOutOfRange, "hyperplane face of a 0-variable polynomial");
  const std::size_t km1 = k - 1;
  // L = 1 - (X_1 + ... + X_{k-1}); cache its powers by exponent.
  MultiPoly linear = MultiPoly::constant(km1, 1);
  for (std::size_t v = 1; v <= km1; ++v) linear -= MultiPoly::variable(km1, v);
  std::vector<MultiPoly> powers{MultiPoly::constant(km1, 1)};
  MultiPoly r(km1);
  for (const auto& [e, c] : p.terms()) {
    const unsigned last = e[km1];
    while (powers.size() <= last) powers.push_back(powers.back() * linear);
    Exponent head(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(km1));
    MultiPoly mono(km1);
    mono.add_term(head, c);
    r += mono * powers[last];
  }
  return r;
}

unsigned long hyperplane_bitsize_limit(std::size_t k, unsigned d, unsigned long tau) {
  return tau + 1 + ceil_log2_pow(k, d);
}

MultiPoly build_R(const MultiPoly& p, unsigned d) {
  const unsigned deg = total_degree(p);
  if (d < deg) {
    throw Error(ErrorCode::DegreeTooSmall, "d = " + std::to_string(d) + " below total degree " +
                                               std::to_string(deg));
  }
  MultiPoly r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    const unsigned size = total_degree(e);
    if (size < d) r.add_term(e, c * (d - size));
  }
  return r;
}

}  // namespace simplexbound

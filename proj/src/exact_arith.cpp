#include "simplexbound/exact_arith.hpp"

#include <algorithm>
#include <sstream>

#include "simplexbound/errors.hpp"

namespace simplexbound {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NonIntegerCoefficient: return "NonIntegerCoefficient";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::SizeOverflow: return "SizeOverflow";
    case ErrorCode::ConsistencyFailure: return "ConsistencyFailure";
    case ErrorCode::TraceBoundViolation: return "TraceBoundViolation";
    case ErrorCode::NonIntegralCoefficient: return "NonIntegralCoefficient";
    case ErrorCode::PositivityViolated: return "PositivityViolated";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::RootFindingFailure: return "RootFindingFailure";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::strong_ordering rational_compare(const Rational& a, const Rational& b) {
  // mpq_cmp cross-multiplies internally; the operands are canonical.
  const int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Integer pow_int(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Integer pow2(unsigned long exponent) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, exponent);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

unsigned long bit_length(const Integer& a) {
  if (a == 0) return 0;
  return mpz_sizeinbase(a.get_mpz_t(), 2);
}

unsigned long ceil_log2_pow(unsigned long base, unsigned long exponent) {
  if (base == 0) throw Error(ErrorCode::InvalidArgument, "log of zero");
  const Integer value = pow_int(Integer(base), exponent);
  // 2^(m-1) < value <= 2^m
  const Integer below = value - 1;
  return bit_length(below);
}

std::string to_string(const Integer& a) { return a.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

SPoly::SPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

SPoly::SPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

SPoly SPoly::constant(const Integer& c) { return SPoly(std::vector<Integer>{c}); }

SPoly SPoly::monomial(const Integer& c, std::size_t power) {
  std::vector<Integer> v(power + 1);
  v[power] = c;
  return SPoly(std::move(v));
}

Integer SPoly::coeff(std::size_t l) const {
  return l < coeffs_.size() ? coeffs_[l] : Integer(0);
}

void SPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

SPoly& SPoly::operator+=(const SPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

SPoly& SPoly::operator-=(const SPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

SPoly& SPoly::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

void SPoly::add_product(const SPoly& a, const SPoly& b) {
  if (a.is_zero() || b.is_zero()) return;
  const std::size_t n = a.coeffs_.size() + b.coeffs_.size() - 1;
  if (coeffs_.size() < n) coeffs_.resize(n);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  normalize();
}

void SPoly::add_scaled_shifted(const Integer& c, std::size_t shift, const SPoly& a) {
  if (c == 0 || a.is_zero()) return;
  const std::size_t n = a.coeffs_.size() + shift;
  if (coeffs_.size() < n) coeffs_.resize(n);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    mpz_addmul(coeffs_[i + shift].get_mpz_t(), c.get_mpz_t(), a.coeffs_[i].get_mpz_t());
  }
  normalize();
}

SPoly operator*(const SPoly& a, const SPoly& b) {
  SPoly r;
  r.add_product(a, b);
  return r;
}

SPoly operator-(SPoly a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

bool SPoly::divide_exact(const Integer& divisor) {
  for (const auto& x : coeffs_) {
    if (!mpz_divisible_p(x.get_mpz_t(), divisor.get_mpz_t())) return false;
  }
  for (auto& x : coeffs_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), divisor.get_mpz_t());
  return true;
}

std::string SPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t l = 0; l < coeffs_.size(); ++l) {
    const Integer& c = coeffs_[l];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const Integer mag = abs(c);
    if (l == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << "s";
      if (l > 1) os << "^" << l;
    }
    first = false;
  }
  return os.str();
}

SPoly spoly_mul_by_t(const SPoly& a) {
  if (a.is_zero()) return a;
  if (a.coeffs()[0] != 0) {
    throw Error(ErrorCode::NonzeroConstantTerm, "cannot multiply by t: " + a.to_string());
  }
  std::vector<Integer> shifted(a.coeffs().begin() + 1, a.coeffs().end());
  return SPoly(std::move(shifted));
}

}  // namespace simplexbound

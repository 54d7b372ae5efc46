#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace simplexbound {

// GMP values are exact at any magnitude; mpq_class keeps num/den canonical
// (den > 0, gcd 1) after every operation we perform through make_rational.
using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws InvalidArgument on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

std::strong_ordering rational_compare(const Rational& a, const Rational& b);

Integer pow_int(const Integer& base, unsigned long exponent);
Integer pow2(unsigned long exponent);
Integer binomial(unsigned long n, unsigned long k);

/// Number of bits of |a|, i.e. floor(log2|a|) + 1; zero for a == 0.
unsigned long bit_length(const Integer& a);

/// Smallest m with 2^m >= base^exponent (exact ceil(exponent * log2 base)).
unsigned long ceil_log2_pow(unsigned long base, unsigned long exponent);

std::string to_string(const Integer& a);
std::string to_string(const Rational& q);

// Univariate polynomial over Z in s = 1/t, dense ascending storage.
// The zero polynomial has no coefficients and degree kZeroDegree.
class SPoly {
 public:
  static constexpr int kZeroDegree = -1;

  SPoly() = default;
  explicit SPoly(std::vector<Integer> coeffs);
  SPoly(std::initializer_list<long> coeffs);
  static SPoly constant(const Integer& c);
  static SPoly monomial(const Integer& c, std::size_t power);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of s^l; zero beyond the degree.
  Integer coeff(std::size_t l) const;

  SPoly& operator+=(const SPoly& other);
  SPoly& operator-=(const SPoly& other);
  SPoly& operator*=(const Integer& c);
  /// this += a * b without building the temporary product.
  void add_product(const SPoly& a, const SPoly& b);
  /// this += c * s^shift * a.
  void add_scaled_shifted(const Integer& c, std::size_t shift, const SPoly& a);

  friend SPoly operator+(SPoly a, const SPoly& b) { return a += b; }
  friend SPoly operator-(SPoly a, const SPoly& b) { return a -= b; }
  friend SPoly operator*(SPoly a, const Integer& c) { return a *= c; }
  friend SPoly operator*(const Integer& c, SPoly a) { return a *= c; }
  friend SPoly operator*(const SPoly& a, const SPoly& b);
  friend SPoly operator-(SPoly a);
  friend bool operator==(const SPoly& a, const SPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Exact division by every coefficient; false (and unchanged) if some
  /// coefficient is not divisible.
  bool divide_exact(const Integer& divisor);

  std::string to_string() const;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

/// Multiplication by t = 1/s: shifts every coefficient index down by one.
/// Throws NonzeroConstantTerm when s does not divide the input.
SPoly spoly_mul_by_t(const SPoly& a);

}  // namespace simplexbound

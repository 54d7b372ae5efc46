#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simplexbound/exact_arith.hpp"

namespace simplexbound {

using Exponent = std::vector<unsigned>;

unsigned total_degree(const Exponent& e);

// Sparse polynomial in Z[X_1..X_k]. Terms are keyed by exponent vector
// (each of length nvars) and never hold a zero coefficient.
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Integer>;

  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  static MultiPoly constant(std::size_t nvars, const Integer& c);
  /// X_i for 1-based i.
  static MultiPoly variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  Integer coeff(const Exponent& e) const;
  /// The constant term (P at the origin).
  Integer constant_term() const;

  /// Adds c * X^e; drops the term when it cancels.
  void add_term(const Exponent& e, const Integer& c);

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const Integer& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Integer& c) { return a *= c; }
  friend MultiPoly operator*(const Integer& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(unsigned n) const;

 private:
  void check_same_nvars(const MultiPoly& other) const;
  std::size_t nvars_;
  TermMap terms_;
};

struct ProblemInstance {
  MultiPoly poly;
  std::size_t k = 0;
  unsigned d = 0;
  unsigned long tau = 0;
};

/// Measures k, d and tau of a nonzero polynomial.
ProblemInstance make_instance(const MultiPoly& p);

/// Parses text such as "2*X1^2 - 2*X1 + 1". With no hint the variable count
/// is the largest index mentioned (zero for a constant).
MultiPoly parse_poly(std::string_view text, std::optional<std::size_t> nvars_hint = std::nullopt);

/// Prints terms by descending total degree, then descending lex exponent.
/// The output re-parses to the same term map.
std::string format_poly(const MultiPoly& p);

unsigned total_degree(const MultiPoly& p);

/// max over nonzero coefficients of floor(log2|a|) + 1.
unsigned long bitsize(const MultiPoly& p);

/// 1-based variable index.
MultiPoly partial_derivative(const MultiPoly& p, std::size_t i);

Rational eval_rational(const MultiPoly& p, std::span<const Rational> x);

/// Sets X_i = 0 (1-based) and removes the variable; higher indices shift down.
MultiPoly restrict_zero(const MultiPoly& p, std::size_t i);

/// P(X_1, ..., X_{k-1}, 1 - (X_1 + ... + X_{k-1})) in k - 1 variables.
MultiPoly substitute_simplex_hyperplane(const MultiPoly& p);

/// tau + 1 + ceil(d log2 k): the bitsize ceiling for the hyperplane face of
/// a polynomial with k variables, degree d and bitsize tau.
unsigned long hyperplane_bitsize_limit(std::size_t k, unsigned d, unsigned long tau);

/// R = d*P - sum_i X_i dP/dX_i = sum_{|a| <= d-1} (d - |a|) p_a X^a.
MultiPoly build_R(const MultiPoly& p, unsigned d);

}  // namespace simplexbound

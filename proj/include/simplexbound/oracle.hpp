#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "simplexbound/exact_arith.hpp"
#include "simplexbound/multipoly.hpp"
#include "simplexbound/quotient_algebra.hpp"

namespace simplexbound {

struct GridSpec {
  std::size_t k = 0;
  unsigned long resolution = 1;  // N: points (m_1/N, ..., m_k/N), sum m_i <= N
};

struct GridResult {
  Rational value;
  std::vector<Rational> argmin;
};

/// Exact minimum of P over the lattice points of the simplex with
/// denominator N. Upper-bounds the true minimum.
GridResult grid_min(const MultiPoly& p, const GridSpec& grid);

inline constexpr std::size_t kDirectCharpolyMaxDim = 9;

/// det(Y I - M) by cofactor expansion over Z[s][Y], returned in the
/// CharPolyData layout: entry h is the coefficient of Y^(dim-h).
std::vector<SPoly> direct_charpoly(const MultMatrix& m);

struct MembershipResidual {
  /// max over the roots of |X^beta - sum_g c_{beta,g}(1/t0) X^g|, in
  /// scientific notation.
  std::string max_residual;
  double log10_residual = 0;  // -inf when the residual is exactly zero
  /// Decimal digits lost to cancellation: log10 of the largest term summed.
  double estimated_loss = 0;
  std::size_t roots = 0;
};

/// Numerical spot check of the rewriting coefficients for k = 1: finds all
/// complex roots of dP/dX + t0 X^d at the requested decimal precision and
/// evaluates the reduction identity for X^beta at each. Throws
/// RootFindingFailure if the iteration does not converge.
MembershipResidual numeric_membership_check(const MultiPoly& p, const Exponent& beta,
                                            const Rational& t0, unsigned precision_digits);

}  // namespace simplexbound

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "simplexbound/exact_arith.hpp"
#include "simplexbound/multipoly.hpp"
#include "simplexbound/quotient_algebra.hpp"

namespace simplexbound {

/// Trace of M^n for n = 1..n_max; index 0 is unused and left zero.
struct TraceSequence {
  std::vector<SPoly> tr;
  std::size_t size() const noexcept { return tr.empty() ? 0 : tr.size() - 1; }
  const SPoly& operator[](std::size_t n) const { return tr[n]; }
};

// Characteristic polynomial sum_h b[h] Y^(dim-h) with b[h] in Z[s].
// l0 is the largest s-degree among the b[h]; s0coeffs[h] is the s^l0
// coefficient of b[h] (the coefficients of S(0, Y)); h1 is the largest h
// with s0coeffs[h] != 0.
struct CharPolyData {
  std::vector<SPoly> b;
  std::size_t l0 = 0;
  std::size_t h1 = 0;
  std::vector<Integer> s0coeffs;

  std::size_t dim() const noexcept { return b.empty() ? 0 : b.size() - 1; }
};

/// Parameters (k, d, tau) under which the degree and magnitude bounds on
/// traces and characteristic coefficients are checked.
struct GrowthParams {
  std::size_t k = 0;
  unsigned d = 0;
  unsigned long tau = 0;
};

/// Traces of M, M^2, ..., M^n_max by iterated multiplication. When params
/// is given, each trace is checked against its degree and magnitude bounds
/// and TraceBoundViolation is thrown on failure.
TraceSequence power_traces(const MultMatrix& m, std::size_t n_max,
                           const std::optional<GrowthParams>& params = std::nullopt);

/// Violations of deg tr[n] <= n(d-1) and
/// |tr[n]_l| <= 2^((l+n) tau) d^(k+1) C(d+k,k+1)^(l+n-1).
std::vector<BoundViolation> trace_bound_violations(const TraceSequence& tr, const GrowthParams& params);

/// Newton's identities: b[0] = 1, b[h] = -(1/h) sum_{n=1}^h tr[n] b[h-n].
/// Throws NonIntegralCoefficient if a division by h is not exact.
CharPolyData newton_charpoly(const TraceSequence& tr, std::size_t dim);

/// Fills l0, h1 and s0coeffs from b.
void finalize_charpoly(CharPolyData& c);

/// Violations of deg b[h] <= h(d-1) and
/// |b[h]_l| <= 2^((l+h)(tau+1)) d^((k+1)h) C(d+k,k+1)^l (strict for h >= 1),
/// plus the l0 / h1 structural facts.
std::vector<BoundViolation> charpoly_bound_violations(const CharPolyData& c, const GrowthParams& params);

/// S(0, Y) as ascending coefficients in Y: entry j is the coefficient of Y^j.
std::vector<Integer> extract_S0(const CharPolyData& c);

/// max_{h < h1} |s0[h] / s0[h1]| + 1 when h1 >= 1; bounds the reciprocal of
/// every nonzero root of S(0, Y). None when h1 = 0.
std::optional<Rational> cauchy_reciprocal_bound(const CharPolyData& c);

struct InteriorPipeline {
  ProblemInstance instance;
  MultiPoly R;
  MultMatrix m_r;
  TraceSequence traces;
  CharPolyData charpoly;
  std::optional<Rational> cauchy;
  std::optional<Rational> bound;  // 1 / (d * cauchy)
};

struct InteriorOptions {
  std::size_t max_dim = kDefaultMaxDim;
  /// Check the trace and characteristic coefficient bounds while computing.
  bool check_bounds = true;
};

/// Runs R -> reduction table -> M_R -> traces -> Newton -> S(0,Y) -> Cauchy.
/// Requires total degree >= 2.
InteriorPipeline run_interior_pipeline(const MultiPoly& p, const InteriorOptions& options = {});

/// If P attains its minimum over the simplex only at interior points, that
/// minimum is at least the returned value.
std::optional<Rational> interior_bound(const MultiPoly& p, const InteriorOptions& options = {});

}  // namespace simplexbound

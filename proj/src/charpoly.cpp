#include "simplexbound/charpoly.hpp"

#include <algorithm>

#include "simplexbound/errors.hpp"

namespace simplexbound {

std::vector<BoundViolation> trace_bound_violations(const TraceSequence& tr, const GrowthParams& params) {
  std::vector<BoundViolation> out;
  const Integer binom = binomial(params.d + params.k, params.k + 1);
  const Integer two_tau = pow2(params.tau);
  const Integer d_pow = pow_int(Integer(params.d), params.k + 1);
  for (std::size_t n = 1; n <= tr.size(); ++n) {
    const SPoly& t = tr[n];
    const std::string label = "tr[" + std::to_string(n) + "]";
    if (t.degree() > static_cast<int>(n * (params.d - 1))) {
      out.push_back({label + " degree " + std::to_string(t.degree()) + " exceeds n(d-1)"});
    }
    // 2^((l+n) tau) d^(k+1) C^(l+n-1) at l = 0, then multiply by 2^tau C per step.
    Integer limit = pow_int(two_tau, n) * d_pow * pow_int(binom, n - 1);
    for (int l = 0; l <= t.degree(); ++l) {
      if (abs(t.coeffs()[l]) > limit) {
        out.push_back({label + " coefficient of s^" + std::to_string(l) + " exceeds its bound"});
      }
      limit *= two_tau;
      limit *= binom;
    }
  }
  return out;
}

TraceSequence power_traces(const MultMatrix& m, std::size_t n_max,
                           const std::optional<GrowthParams>& params) {
  TraceSequence seq;
  seq.tr.resize(n_max + 1);
  if (n_max == 0) return seq;
  MultMatrix power = m;
  seq.tr[1] = power.trace();
  for (std::size_t n = 2; n <= n_max; ++n) {
    power = power * m;
    seq.tr[n] = power.trace();
  }
  if (params) {
    const auto violations = trace_bound_violations(seq, *params);
    if (!violations.empty()) throw Error(ErrorCode::TraceBoundViolation, violations.front().what);
  }
  return seq;
}

void finalize_charpoly(CharPolyData& c) {
  c.l0 = 0;
  for (const auto& bh : c.b) {
    if (bh.degree() > static_cast<int>(c.l0)) c.l0 = static_cast<std::size_t>(bh.degree());
  }
  c.s0coeffs.clear();
  c.s0coeffs.reserve(c.b.size());
  for (const auto& bh : c.b) c.s0coeffs.push_back(bh.coeff(c.l0));
  c.h1 = 0;
  bool found = false;
  for (std::size_t h = c.s0coeffs.size(); h-- > 0;) {
    if (c.s0coeffs[h] != 0) {
      c.h1 = h;
      found = true;
      break;
    }
  }
  if (!found) throw Error(ErrorCode::ConsistencyFailure, "every top coefficient of S(0,Y) vanishes");
}

CharPolyData newton_charpoly(const TraceSequence& tr, std::size_t dim) {
  if (tr.size() < dim) {
    throw Error(ErrorCode::DimensionMismatch, "need " + std::to_string(dim) + " traces, have " +
                                                  std::to_string(tr.size()));
  }
  CharPolyData c;
  c.b.resize(dim + 1);
  c.b[0] = SPoly::constant(1);
  for (std::size_t h = 1; h <= dim; ++h) {
    SPoly acc;
    for (std::size_t n = 1; n <= h; ++n) acc.add_product(tr[n], c.b[h - n]);
    if (!acc.divide_exact(Integer(static_cast<unsigned long>(h)))) {
      throw Error(ErrorCode::NonIntegralCoefficient,
                  "b[" + std::to_string(h) + "] is not integral: " + acc.to_string() + " / " +
                      std::to_string(h));
    }
    c.b[h] = -acc;
  }
  finalize_charpoly(c);
  return c;
}

std::vector<BoundViolation> charpoly_bound_violations(const CharPolyData& c, const GrowthParams& params) {
  std::vector<BoundViolation> out;
  const std::size_t dim = c.dim();
  if (!(c.b.at(0) == SPoly::constant(1))) out.push_back({"b[0] != 1"});
  const Integer binom = binomial(params.d + params.k, params.k + 1);
  const Integer two_tau1 = pow2(params.tau + 1);
  const Integer d_pow = pow_int(Integer(params.d), params.k + 1);
  std::size_t max_deg = 0;
  for (std::size_t h = 0; h <= dim; ++h) {
    const SPoly& bh = c.b[h];
    const std::string label = "b[" + std::to_string(h) + "]";
    if (bh.degree() > static_cast<int>(h * (params.d - 1))) {
      out.push_back({label + " degree " + std::to_string(bh.degree()) + " exceeds h(d-1)"});
    }
    max_deg = std::max<std::size_t>(max_deg, bh.degree() < 0 ? 0 : bh.degree());
    // 2^((l+h)(tau+1)) d^((k+1)h) C^l
    Integer limit = pow_int(two_tau1, h) * pow_int(d_pow, h);
    for (int l = 0; l <= bh.degree(); ++l) {
      const Integer mag = abs(bh.coeffs()[l]);
      const bool bad = h >= 1 ? mag >= limit : mag > limit;
      if (bad) out.push_back({label + " coefficient of s^" + std::to_string(l) + " exceeds its bound"});
      limit *= two_tau1;
      limit *= binom;
    }
  }
  if (c.l0 != max_deg) out.push_back({"l0 is not the maximal s-degree"});
  if (c.s0coeffs.size() != dim + 1) {
    out.push_back({"S(0,Y) has the wrong length"});
    return out;
  }
  for (std::size_t h = 0; h <= dim; ++h) {
    if (c.s0coeffs[h] != c.b[h].coeff(c.l0)) out.push_back({"S(0,Y) coefficient mismatch"});
  }
  if (c.s0coeffs[c.h1] == 0) out.push_back({"h1 indexes a zero coefficient"});
  for (std::size_t h = c.h1 + 1; h <= dim; ++h) {
    if (c.s0coeffs[h] != 0) out.push_back({"h1 is not the largest nonzero index"});
  }
  if (dim >= 1 && c.l0 > (dim - 1) * (params.d - 1)) {
    for (std::size_t h = 0; h < dim; ++h) {
      if (c.s0coeffs[h] != 0) {
        out.push_back({"l0 > (dim-1)(d-1) but b[" + std::to_string(h) + "] reaches s^l0"});
      }
    }
  }
  return out;
}

std::vector<Integer> extract_S0(const CharPolyData& c) {
  // b[h] multiplies Y^(dim - h).
  return std::vector<Integer>(c.s0coeffs.rbegin(), c.s0coeffs.rend());
}

std::optional<Rational> cauchy_reciprocal_bound(const CharPolyData& c) {
  if (c.h1 == 0) return std::nullopt;
  const Integer lead = abs(c.s0coeffs[c.h1]);
  Integer best = 0;
  for (std::size_t h = 0; h < c.h1; ++h) best = std::max(best, Integer(abs(c.s0coeffs[h])));
  return Rational(make_rational(best, lead) + 1);
}

InteriorPipeline run_interior_pipeline(const MultiPoly& p, const InteriorOptions& options) {
  InteriorPipeline out;
  out.instance = make_instance(p);
  const unsigned d = out.instance.d;
  if (d < 2 || p.nvars() == 0) {
    throw Error(ErrorCode::InvalidArgument, "interior bound needs total degree >= 2");
  }
  out.R = build_R(p, d);
  ReductionTable table(p, d, PivotRule::Smallest, options.max_dim);
  out.m_r = mult_matrix(table, out.R);
  const std::size_t dim = table.basis().size();
  const GrowthParams params{out.instance.k, d, out.instance.tau};
  out.traces = power_traces(out.m_r, dim, options.check_bounds ? std::optional(params) : std::nullopt);
  out.charpoly = newton_charpoly(out.traces, dim);
  if (options.check_bounds) {
    const auto violations = charpoly_bound_violations(out.charpoly, params);
    if (!violations.empty()) throw Error(ErrorCode::ConsistencyFailure, violations.front().what);
  }
  out.cauchy = cauchy_reciprocal_bound(out.charpoly);
  if (out.cauchy) out.bound = Rational(Rational(1) / (Rational(d) * *out.cauchy));
  return out;
}

std::optional<Rational> interior_bound(const MultiPoly& p, const InteriorOptions& options) {
  return run_interior_pipeline(p, options).bound;
}

}  // namespace simplexbound

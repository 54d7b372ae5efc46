#include "simplexbound/oracle.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <limits>

#include "simplexbound/errors.hpp"

namespace simplexbound {

namespace {

void enumerate_grid(std::size_t var, unsigned long remaining, std::vector<unsigned long>& m,
                    const auto& visit) {
  if (var == m.size()) {
    visit();
    return;
  }
  for (unsigned long v = 0; v <= remaining; ++v) {
    m[var] = v;
    enumerate_grid(var + 1, remaining - v, m, visit);
  }
}

}  // namespace

GridResult grid_min(const MultiPoly& p, const GridSpec& grid) {
  if (grid.k != p.nvars()) {
    throw Error(ErrorCode::DimensionMismatch, "grid over " + std::to_string(grid.k) +
                                                  " variables for a polynomial in " +
                                                  std::to_string(p.nvars()));
  }
  if (grid.resolution < 1) throw Error(ErrorCode::InvalidArgument, "grid resolution must be >= 1");
  const unsigned long n = grid.resolution;
  const unsigned d = total_degree(p);

  // N^d P(m/N) = sum_a p_a m^a N^(d-|a|) stays integral.
  std::vector<std::vector<Integer>> powers(n + 1, std::vector<Integer>(d + 1));
  for (unsigned long v = 0; v <= n; ++v) {
    powers[v][0] = 1;
    for (unsigned e = 1; e <= d; ++e) powers[v][e] = powers[v][e - 1] * v;
  }
  struct ScaledTerm {
    const Exponent* exponent;
    Integer coeff;  // p_a N^(d-|a|)
  };
  std::vector<ScaledTerm> terms;
  for (const auto& [e, c] : p.terms()) {
    terms.push_back({&e, c * pow_int(Integer(n), d - total_degree(e))});
  }

  std::vector<unsigned long> m(grid.k, 0);
  std::vector<unsigned long> best_m;
  Integer best;
  bool have = false;
  Integer value, product;
  enumerate_grid(0, n, m, [&] {
    value = 0;
    for (const auto& t : terms) {
      product = t.coeff;
      for (std::size_t v = 0; v < m.size(); ++v) {
        const unsigned e = (*t.exponent)[v];
        if (e != 0) product *= powers[m[v]][e];
      }
      value += product;
    }
    if (!have || value < best) {
      best = value;
      best_m = m;
      have = true;
    }
  });

  GridResult out;
  out.value = make_rational(best, pow_int(Integer(n), d));
  for (unsigned long v : best_m) out.argmin.push_back(make_rational(Integer(v), Integer(n)));
  return out;
}

namespace {

using YPoly = std::vector<SPoly>;  // index = power of Y

YPoly ypoly_mul(const YPoly& a, const YPoly& b) {
  if (a.empty() || b.empty()) return {};
  YPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j].add_product(a[i], b[j]);
  }
  return r;
}

void ypoly_add(YPoly& acc, const YPoly& x, bool negate) {
  if (acc.size() < x.size()) acc.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (negate) acc[i] -= x[i];
    else acc[i] += x[i];
  }
}

}  // namespace

std::vector<SPoly> direct_charpoly(const MultMatrix& m) {
  const std::size_t n = m.dim();
  if (n > kDirectCharpolyMaxDim) {
    throw Error(ErrorCode::DimensionTooLarge, "cofactor expansion limited to dimension " +
                                                  std::to_string(kDirectCharpolyMaxDim));
  }
  // Entries of Y I - M.
  std::vector<YPoly> entry(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      YPoly e{-m.at(i, j)};
      if (i == j) e.push_back(SPoly::constant(1));
      entry[i * n + j] = std::move(e);
    }
  }
  // minor[mask]: determinant of the bottom popcount(mask) rows restricted to
  // the columns in mask, expanded along its first row.
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<YPoly> minor(full + 1);
  minor[0] = YPoly{SPoly::constant(1)};
  for (std::size_t mask = 1; mask <= full; ++mask) {
    const std::size_t row = n - static_cast<std::size_t>(__builtin_popcountll(mask));
    YPoly acc;
    std::size_t position = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (std::size_t{1} << j))) continue;
      const YPoly term = ypoly_mul(entry[row * n + j], minor[mask & ~(std::size_t{1} << j)]);
      ypoly_add(acc, term, position % 2 == 1);
      ++position;
    }
    minor[mask] = std::move(acc);
  }
  YPoly det = std::move(minor[full]);
  det.resize(n + 1);
  return std::vector<SPoly>(det.rbegin(), det.rend());
}

namespace {

using boost::multiprecision::mpfr_float;

struct Complex {
  mpfr_float re;
  mpfr_float im;
};

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator/(const Complex& a, const Complex& b) {
  const mpfr_float den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}
mpfr_float magnitude(const Complex& a) { return sqrt(a.re * a.re + a.im * a.im); }

mpfr_float to_mpfr(const Rational& q) {
  return mpfr_float(q.get_num().get_str()) / mpfr_float(q.get_den().get_str());
}

mpfr_float to_mpfr(const Integer& z) { return mpfr_float(z.get_str()); }

Complex horner(const std::vector<Complex>& coeffs, const Complex& x) {
  Complex acc = coeffs.back();
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits) : saved_(mpfr_float::default_precision()) {
    mpfr_float::default_precision(digits);
  }
  ~PrecisionScope() { mpfr_float::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

// Durand-Kerner on a monic polynomial given by ascending coefficients.
std::vector<Complex> all_roots(const std::vector<Complex>& monic, unsigned digits) {
  const std::size_t deg = monic.size() - 1;
  std::vector<Complex> z(deg);
  const Complex seed{mpfr_float("0.4"), mpfr_float("0.9")};
  Complex w{mpfr_float(1), mpfr_float(0)};
  for (auto& zi : z) {
    w = w * seed;
    zi = w;
  }
  const mpfr_float tol = pow(mpfr_float(10), -static_cast<int>(digits) + 3);
  const int max_iter = 2000;
  for (int iter = 0; iter < max_iter; ++iter) {
    mpfr_float worst = 0;
    for (std::size_t j = 0; j < deg; ++j) {
      Complex den{mpfr_float(1), mpfr_float(0)};
      for (std::size_t l = 0; l < deg; ++l) {
        if (l != j) den = den * (z[j] - z[l]);
      }
      if (den.re == 0 && den.im == 0) {
        z[j] = z[j] + Complex{tol, tol};
        worst = 1;
        continue;
      }
      const Complex step = horner(monic, z[j]) / den;
      z[j] = z[j] - step;
      const mpfr_float scale = std::max(mpfr_float(1), magnitude(z[j]));
      worst = std::max(worst, mpfr_float(magnitude(step) / scale));
    }
    if (worst < tol) return z;
  }
  throw Error(ErrorCode::RootFindingFailure,
              "Durand-Kerner did not converge in " + std::to_string(max_iter) + " iterations");
}

}  // namespace

MembershipResidual numeric_membership_check(const MultiPoly& p, const Exponent& beta,
                                            const Rational& t0, unsigned precision_digits) {
  if (p.nvars() != 1) throw Error(ErrorCode::DimensionMismatch, "membership check needs k = 1");
  if (t0 == 0) throw Error(ErrorCode::InvalidArgument, "t0 must be nonzero");
  if (precision_digits < 10) throw Error(ErrorCode::InvalidArgument, "precision below 10 digits");
  const unsigned d = total_degree(p);
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "membership check needs degree >= 1");

  ReductionTable table(p, d);
  const Coordinates coords = table.reduce(beta);

  PrecisionScope scope(precision_digits);
  // F(X) = dP/dX + t0 X^d, made monic.
  const MultiPoly dp = partial_derivative(p, 1);
  std::vector<Complex> f(d + 1, Complex{mpfr_float(0), mpfr_float(0)});
  for (const auto& [e, c] : dp.terms()) f[e[0]].re += to_mpfr(c);
  f[d].re += to_mpfr(t0);
  const Complex lead = f[d];
  for (auto& c : f) c = c / lead;
  const std::vector<Complex> roots = all_roots(f, precision_digits);

  const mpfr_float s0 = to_mpfr(Rational(1 / t0));
  std::vector<mpfr_float> cvals;
  for (const SPoly& c : coords) {
    mpfr_float acc = 0;
    for (std::size_t l = c.coeffs().size(); l-- > 0;) acc = acc * s0 + to_mpfr(c.coeffs()[l]);
    cvals.push_back(acc);
  }

  mpfr_float worst = 0;
  mpfr_float largest = 1;
  for (const Complex& x : roots) {
    Complex lhs{mpfr_float(1), mpfr_float(0)};
    for (unsigned i = 0; i < beta[0]; ++i) lhs = lhs * x;
    Complex rhs{mpfr_float(0), mpfr_float(0)};
    Complex xp{mpfr_float(1), mpfr_float(0)};
    for (std::size_t g = 0; g < cvals.size(); ++g) {
      const Complex term{cvals[g] * xp.re, cvals[g] * xp.im};
      largest = std::max(largest, magnitude(term));
      rhs = rhs + term;
      xp = xp * x;
    }
    worst = std::max(worst, magnitude(lhs - rhs));
    largest = std::max(largest, magnitude(lhs));
  }

  MembershipResidual out;
  out.roots = roots.size();
  out.max_residual = worst.str(6, std::ios::scientific);
  out.log10_residual = worst == 0 ? -std::numeric_limits<double>::infinity()
                                  : log10(worst).convert_to<double>();
  out.estimated_loss = log10(largest).convert_to<double>();
  return out;
}

}  // namespace simplexbound

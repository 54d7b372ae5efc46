#include "simplexbound/quotient_algebra.hpp"

#include <sstream>

#include "simplexbound/errors.hpp"

namespace simplexbound {

MonomialBasis::MonomialBasis(std::size_t k, unsigned d, std::size_t max_dim) : k_(k), d_(d) {
  if (k < 1 || d < 1) {
    throw Error(ErrorCode::InvalidArgument, "basis needs k >= 1 and d >= 1");
  }
  std::size_t dim = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (dim > max_dim / d) {
      throw Error(ErrorCode::SizeOverflow, std::to_string(d) + "^" + std::to_string(k) +
                                               " exceeds the dimension cap " + std::to_string(max_dim));
    }
    dim *= d;
  }
  if (dim > max_dim) {
    throw Error(ErrorCode::SizeOverflow, "dimension " + std::to_string(dim) + " exceeds the cap " +
                                             std::to_string(max_dim));
  }
  elems_.reserve(dim);
  Exponent e(k, 0);
  // Odometer over the box, last coordinate fastest: ascending lex order.
  for (std::size_t n = 0; n < dim; ++n) {
    elems_.push_back(e);
    for (std::size_t pos = k; pos-- > 0;) {
      if (++e[pos] < d) break;
      e[pos] = 0;
    }
  }
}

bool MonomialBasis::contains(const Exponent& e) const {
  if (e.size() != k_) return false;
  for (unsigned v : e) {
    if (v >= d_) return false;
  }
  return true;
}

std::size_t MonomialBasis::index_of(const Exponent& e) const {
  std::size_t idx = 0;
  for (unsigned v : e) idx = idx * d_ + v;
  return idx;
}

MonomialBasis build_basis(std::size_t k, unsigned d, std::size_t max_dim) {
  return MonomialBasis(k, d, max_dim);
}

ReductionTable::ReductionTable(const MultiPoly& p, unsigned d, PivotRule pivot, std::size_t max_dim)
    : basis_(p.nvars(), d, max_dim), d_(d), pivot_(pivot), rewrite_(p.nvars()) {
  const unsigned deg = total_degree(p);
  if (d < deg) {
    throw Error(ErrorCode::DegreeTooSmall, "d = " + std::to_string(d) + " below total degree " +
                                               std::to_string(deg));
  }
  // X_i^d = s * sum_alpha -a_{alpha+e_i} (alpha_i + 1) X^alpha, i.e. -s dP/dX_i.
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    for (const auto& [e, a] : p.terms()) {
      if (e[i] == 0) continue;
      Exponent alpha = e;
      --alpha[i];
      rewrite_[i].push_back({std::move(alpha), -a * e[i]});
    }
  }
}

Coordinates ReductionTable::unit(const Exponent& beta) const {
  Coordinates c(basis_.size());
  c[basis_.index_of(beta)] = SPoly::constant(1);
  return c;
}

Coordinates ReductionTable::reduce(const Exponent& beta) const {
  if (beta.size() != k()) {
    throw Error(ErrorCode::DimensionMismatch, "exponent length " + std::to_string(beta.size()));
  }
  if (basis_.contains(beta)) return unit(beta);
  std::lock_guard lock(mutex_);
  return reduce_locked(beta);
}

const Coordinates& ReductionTable::reduce_locked(const Exponent& beta) const {
  if (auto it = memo_.find(beta); it != memo_.end()) return it->second;

  std::size_t pivot = beta.size();
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta[i] >= d_) {
      pivot = i;
      if (pivot_ == PivotRule::Smallest) break;
    }
  }
  Exponent rest = beta;
  rest[pivot] -= d_;

  Coordinates result(basis_.size());
  Exponent shifted(beta.size());
  for (const auto& term : rewrite_[pivot]) {
    for (std::size_t v = 0; v < shifted.size(); ++v) shifted[v] = term.alpha[v] + rest[v];
    if (basis_.contains(shifted)) {
      result[basis_.index_of(shifted)] += SPoly::monomial(term.coeff, 1);
    } else {
      const Coordinates& sub = reduce_locked(shifted);
      for (std::size_t g = 0; g < sub.size(); ++g) result[g].add_scaled_shifted(term.coeff, 1, sub[g]);
    }
  }
  return memo_.emplace(beta, std::move(result)).first->second;
}

std::map<Exponent, Coordinates> ReductionTable::computed_entries() const {
  std::lock_guard lock(mutex_);
  return memo_;
}

Coordinates reduce_monomial(const ReductionTable& table, const Exponent& beta) {
  return table.reduce(beta);
}

MultMatrix MultMatrix::identity(std::size_t dim) {
  MultMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = SPoly::constant(1);
  return m;
}

SPoly MultMatrix::trace() const {
  SPoly t;
  for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

MultMatrix operator*(const MultMatrix& a, const MultMatrix& b) {
  if (a.dim_ != b.dim_) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  const std::size_t n = a.dim_;
  MultMatrix r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t m = 0; m < n; ++m) {
      const SPoly& lhs = a.at(i, m);
      if (lhs.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) r.at(i, j).add_product(lhs, b.at(m, j));
    }
  }
  return r;
}

MultMatrix operator-(const MultMatrix& a, const MultMatrix& b) {
  if (a.dim_ != b.dim_) throw Error(ErrorCode::DimensionMismatch, "matrix difference");
  MultMatrix r = a;
  for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] -= b.entries_[i];
  return r;
}

bool MultMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

std::string MultMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < dim_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < dim_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

MultMatrix mult_matrix(const ReductionTable& table, const MultiPoly& g) {
  const MonomialBasis& basis = table.basis();
  if (g.nvars() != basis.k()) {
    throw Error(ErrorCode::DimensionMismatch, "multiplier has " + std::to_string(g.nvars()) +
                                                  " variables, algebra has " + std::to_string(basis.k()));
  }
  const std::size_t n = basis.size();
  MultMatrix m(n);
  Exponent beta(basis.k());
  for (std::size_t col = 0; col < n; ++col) {
    const Exponent& gamma = basis[col];
    for (const auto& [alpha, c] : g.terms()) {
      for (std::size_t v = 0; v < beta.size(); ++v) beta[v] = gamma[v] + alpha[v];
      if (basis.contains(beta)) {
        m.at(basis.index_of(beta), col) += SPoly::constant(c);
        continue;
      }
      const Coordinates coords = table.reduce(beta);
      for (std::size_t row = 0; row < n; ++row) m.at(row, col).add_scaled_shifted(c, 0, coords[row]);
    }
  }
  return m;
}

Coordinates reduce_poly(const ReductionTable& table, const MultiPoly& f) {
  Coordinates acc(table.basis().size());
  for (const auto& [e, c] : f.terms()) {
    const Coordinates coords = table.reduce(e);
    for (std::size_t g = 0; g < acc.size(); ++g) acc[g].add_scaled_shifted(c, 0, coords[g]);
  }
  return acc;
}

Coordinates multiply_coordinates(const ReductionTable& table, const Coordinates& a,
                                 const Coordinates& b) {
  const MonomialBasis& basis = table.basis();
  if (a.size() != basis.size() || b.size() != basis.size()) {
    throw Error(ErrorCode::DimensionMismatch, "coordinate vector length");
  }
  Coordinates acc(basis.size());
  Exponent sum(basis.k());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      const SPoly weight = a[i] * b[j];
      for (std::size_t v = 0; v < sum.size(); ++v) sum[v] = basis[i][v] + basis[j][v];
      const Coordinates coords = table.reduce(sum);
      for (std::size_t g = 0; g < acc.size(); ++g) acc[g].add_product(weight, coords[g]);
    }
  }
  return acc;
}

namespace {

[[noreturn]] void consistency_failure(const std::string& what) {
  throw Error(ErrorCode::ConsistencyFailure, what);
}

}  // namespace

std::vector<Exponent> pivot_check_exponents(const ReductionTable& table) {
  std::vector<Exponent> out;
  for (const auto& [beta, coords] : table.computed_entries()) out.push_back(beta);
  const MonomialBasis& basis = table.basis();
  for (const auto& gamma : basis.elements()) {
    for (std::size_t i = 0; i < basis.k(); ++i) {
      Exponent beta = gamma;
      beta[i] += table.d();
      out.push_back(std::move(beta));
    }
  }
  return out;
}

ConsistencyReport verify_quotient_consistency(const ReductionTable& table, const MultiPoly& p) {
  ConsistencyReport report;
  const MonomialBasis& basis = table.basis();
  const std::size_t k = basis.k();
  if (p.nvars() != k) throw Error(ErrorCode::DimensionMismatch, "polynomial/table variable count");

  std::vector<MultMatrix> xs;
  xs.reserve(k);
  for (std::size_t i = 1; i <= k; ++i) xs.push_back(mult_matrix(table, MultiPoly::variable(k, i)));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (!(xs[i] * xs[j] == xs[j] * xs[i])) {
        consistency_failure("multiplication matrices of X" + std::to_string(i + 1) + " and X" +
                            std::to_string(j + 1) + " do not commute");
      }
      ++report.commuting_pairs;
    }
  }

  // F_i * X^g = (dP/dX_i) X^g + t X_i^d X^g must vanish in W for every g.
  for (std::size_t i = 1; i <= k; ++i) {
    const MultiPoly dpi = partial_derivative(p, i);
    for (const auto& gamma : basis.elements()) {
      MultiPoly shift(k);
      shift.add_term(gamma, 1);
      const Coordinates lhs = reduce_poly(table, dpi * shift);
      Exponent beta = gamma;
      beta[i - 1] += table.d();
      const Coordinates rhs = table.reduce(beta);
      for (std::size_t g = 0; g < lhs.size(); ++g) {
        SPoly sum;
        try {
          sum = lhs[g] + spoly_mul_by_t(rhs[g]);
        } catch (const Error&) {
          consistency_failure("reduction of X" + std::to_string(i) + "^d has a nonzero s^0 term");
        }
        if (!sum.is_zero()) {
          consistency_failure("relation F" + std::to_string(i) + " does not vanish in the quotient");
        }
      }
      ++report.relations_checked;
    }
  }

  const PivotRule other =
      table.pivot_rule() == PivotRule::Smallest ? PivotRule::Largest : PivotRule::Smallest;
  ReductionTable alt(p, table.d(), other, basis.size());
  for (const auto& beta : pivot_check_exponents(table)) {
    if (!(table.reduce(beta) == alt.reduce(beta))) {
      consistency_failure("reduction depends on the pivot choice");
    }
    ++report.pivot_comparisons;
  }
  return report;
}

std::vector<BoundViolation> reduction_bound_violations(const ReductionTable& table,
                                                       unsigned long tau) {
  std::vector<BoundViolation> out;
  const MonomialBasis& basis = table.basis();
  const unsigned d = table.d();
  const std::size_t k = basis.k();
  const Integer binom = binomial(d + k, k + 1);
  const Integer two_tau = pow2(tau);
  auto describe = [](const Exponent& beta, const Exponent& gamma) {
    std::ostringstream os;
    os << "c[(";
    for (std::size_t v = 0; v < beta.size(); ++v) os << (v ? "," : "") << beta[v];
    os << "),(";
    for (std::size_t v = 0; v < gamma.size(); ++v) os << (v ? "," : "") << gamma[v];
    os << ")]";
    return os.str();
  };
  for (const auto& [beta, coords] : table.computed_entries()) {
    const unsigned bsize = total_degree(beta);
    for (std::size_t g = 0; g < coords.size(); ++g) {
      const Exponent& gamma = basis[g];
      const unsigned gsize = total_degree(gamma);
      const SPoly& c = coords[g];
      if (gsize >= bsize) {
        if (!c.is_zero()) out.push_back({describe(beta, gamma) + " nonzero with |g| >= |beta|"});
        continue;
      }
      if (c.degree() > static_cast<int>(bsize - gsize)) {
        out.push_back({describe(beta, gamma) + " degree exceeds |beta| - |g|"});
      }
      if (c.coeff(0) != 0) out.push_back({describe(beta, gamma) + " has nonzero constant term"});
      // bound_l = 2^(l tau) d C^(l-1), built incrementally.
      Integer limit = two_tau * d;
      for (int l = 1; l <= c.degree(); ++l) {
        if (abs(c.coeffs()[l]) > limit) {
          out.push_back({describe(beta, gamma) + " coefficient of s^" + std::to_string(l) +
                         " exceeds its bound"});
        }
        limit *= two_tau;
        limit *= binom;
      }
    }
  }
  return out;
}

}  // namespace simplexbound

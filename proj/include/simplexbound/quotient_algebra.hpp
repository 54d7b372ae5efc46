#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "simplexbound/exact_arith.hpp"
#include "simplexbound/multipoly.hpp"

namespace simplexbound {

inline constexpr std::size_t kDefaultMaxDim = 4096;

// Monomials X^g with 0 <= g_i <= d-1, ascending lex. They form a basis of
// W = Q(t)[X] / (dP/dX_i + t X_i^d : i = 1..k).
class MonomialBasis {
 public:
  MonomialBasis(std::size_t k, unsigned d, std::size_t max_dim = kDefaultMaxDim);

  std::size_t k() const noexcept { return k_; }
  unsigned d() const noexcept { return d_; }
  std::size_t size() const noexcept { return elems_.size(); }
  const Exponent& operator[](std::size_t idx) const { return elems_[idx]; }
  const std::vector<Exponent>& elements() const noexcept { return elems_; }

  bool contains(const Exponent& e) const;
  /// Position of a box exponent; callers must check contains() first.
  std::size_t index_of(const Exponent& e) const;

 private:
  std::size_t k_;
  unsigned d_;
  std::vector<Exponent> elems_;
};

MonomialBasis build_basis(std::size_t k, unsigned d, std::size_t max_dim = kDefaultMaxDim);

enum class PivotRule { Smallest, Largest };

using Coordinates = std::vector<SPoly>;

// Memoized normal forms of monomials. For beta outside the box, X^beta is
// rewritten through X_i^d = -s * dP/dX_i at a pivot i with beta_i >= d and
// the lower-degree monomials that produces are reduced recursively.
// Memo insertion is serialized, so a table may be shared across threads.
class ReductionTable {
 public:
  ReductionTable(const MultiPoly& p, unsigned d, PivotRule pivot = PivotRule::Smallest,
                 std::size_t max_dim = kDefaultMaxDim);

  const MonomialBasis& basis() const noexcept { return basis_; }
  unsigned d() const noexcept { return d_; }
  std::size_t k() const noexcept { return basis_.k(); }
  PivotRule pivot_rule() const noexcept { return pivot_; }

  /// Coordinates of [X^beta] in the basis, one SPoly per basis element.
  Coordinates reduce(const Exponent& beta) const;

  /// Snapshot of every reduced monomial outside the box.
  std::map<Exponent, Coordinates> computed_entries() const;

 private:
  struct RewriteTerm {
    Exponent alpha;
    Integer coeff;  // -a_{alpha+e_i} (alpha_i + 1)
  };

  const Coordinates& reduce_locked(const Exponent& beta) const;
  Coordinates unit(const Exponent& beta) const;

  MonomialBasis basis_;
  unsigned d_;
  PivotRule pivot_;
  std::vector<std::vector<RewriteTerm>> rewrite_;  // per variable
  mutable std::mutex mutex_;
  mutable std::map<Exponent, Coordinates> memo_;
};

/// Convenience wrapper matching the table's reduce().
Coordinates reduce_monomial(const ReductionTable& table, const Exponent& beta);

/// Coordinates of f reduced term by term.
Coordinates reduce_poly(const ReductionTable& table, const MultiPoly& f);

/// Product in W of two coordinate vectors, recombined through the table.
Coordinates multiply_coordinates(const ReductionTable& table, const Coordinates& a,
                                 const Coordinates& b);

// Dense square matrix over Z[s], row-major. Column g holds the coordinates
// of the image of the g-th basis monomial.
class MultMatrix {
 public:
  explicit MultMatrix(std::size_t dim = 0) : dim_(dim), entries_(dim * dim) {}
  static MultMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  SPoly& at(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const SPoly& at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

  SPoly trace() const;
  friend MultMatrix operator*(const MultMatrix& a, const MultMatrix& b);
  friend MultMatrix operator-(const MultMatrix& a, const MultMatrix& b);
  friend bool operator==(const MultMatrix& a, const MultMatrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }
  bool is_zero() const;
  std::string to_string() const;

 private:
  std::size_t dim_;
  std::vector<SPoly> entries_;
};

MultMatrix mult_matrix(const ReductionTable& table, const MultiPoly& g);

struct ConsistencyReport {
  std::size_t commuting_pairs = 0;
  std::size_t relations_checked = 0;
  std::size_t pivot_comparisons = 0;
};

/// Checks that the X_i multiplication matrices commute, that every F_i
/// vanishes in W, and that reduction agrees between the smallest- and
/// largest-index pivot rules. Throws ConsistencyFailure naming the broken
/// identity.
ConsistencyReport verify_quotient_consistency(const ReductionTable& table, const MultiPoly& p);

/// Exponents whose pivot-independence is checked: every entry already in
/// the table plus every X^g * X_i^d for g in the basis.
std::vector<Exponent> pivot_check_exponents(const ReductionTable& table);

// Coefficient bounds on the rewriting coefficients: for beta outside the
// box and |g| < |beta|, deg c <= |beta| - |g|, c_0 = 0 and
// |c_l| <= 2^(l tau) d C(d+k, k+1)^(l-1); c vanishes when |g| >= |beta|.
struct BoundViolation {
  std::string what;
};

std::vector<BoundViolation> reduction_bound_violations(const ReductionTable& table,
                                                       unsigned long tau);

}  // namespace simplexbound

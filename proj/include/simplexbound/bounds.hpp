#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "simplexbound/exact_arith.hpp"
#include "simplexbound/multipoly.hpp"
#include "simplexbound/quotient_algebra.hpp"

namespace simplexbound {

struct ClosedFormParams {
  std::size_t k = 1;
  unsigned d = 1;
  unsigned long tau = 1;
};

/// 2^(-(tau+1) d^(k+1)) d^(-(k+1) d^k) C(d+k, k+1)^(-d^k (d-1)).
Rational closed_form_full(const ClosedFormParams& p);
/// 2^(-(tau+1) d^(k+1)) d^(-(k+1) d^(k+1)).
Rational closed_form_simplified(const ClosedFormParams& p);
/// Same expression as closed_form_full, valid for polynomials whose minimum
/// is attained only in the interior of the simplex.
Rational closed_form_interior(const ClosedFormParams& p);

// A face of the simplex reached by the recursion. Indices are 1-based and
// refer to the variables of the input polynomial.
struct FaceDescriptor {
  std::vector<std::size_t> zeroed;
  /// Variables eliminated by X_last = 1 - (sum of the others), in order.
  std::vector<std::size_t> hyperplane_applied;
  std::size_t dimension = 0;

  std::string label() const;
};

enum class ContributionKind { Interior, VertexConstant };

struct Contribution {
  FaceDescriptor face;
  ContributionKind kind = ContributionKind::Interior;
  std::optional<Rational> value;
  /// Face parameters (k', d', tau') and the interior closed form at them;
  /// only set for interior contributions.
  std::optional<ClosedFormParams> params;
  std::optional<Rational> closed_form_interior;
};

struct BoundReport {
  Rational global_bound;
  std::vector<Contribution> contributions;
  Rational closed_form_full;
  Rational closed_form_simplified;
  ProblemInstance instance;
  std::vector<std::string> diagnostics;
};

struct BoundOptions {
  std::size_t max_dim = kDefaultMaxDim;
  /// When false only the input polynomial itself is examined.
  bool face_recursion = true;
  bool check_bounds = true;
};

/// Certified rational lower bound for min over the standard simplex of a
/// polynomial the caller asserts to be positive there. Explores the face
/// tree depth first (zeroed variables ascending, hyperplane branch last).
/// Throws PositivityViolated when a vertex or constant face value is <= 0.
BoundReport certified_lower_bound(const MultiPoly& p, const BoundOptions& options = {});

/// (2^(tau/2) X1 - 1)^2 + sum_{i>=2} (X_i - X_{i-1}^(d/2))^2 + X_k^d.
/// Requires d, tau even and d >= 4; throws ParityViolation otherwise.
MultiPoly example_family(std::size_t k, unsigned d, unsigned long tau);

/// 2^(-tau (d/2)^k), the family's value at X_i = 2^(-(tau/2)(d/2)^(i-1)).
Rational example_family_upper_bound(std::size_t k, unsigned d, unsigned long tau);

/// The point X_i = 2^(-(tau/2)(d/2)^(i-1)).
std::vector<Rational> example_family_witness(std::size_t k, unsigned d, unsigned long tau);

struct InductionCase {
  unsigned d = 0;
  std::size_t k = 0;
  unsigned long tau = 0;
  bool holds = false;
};

struct InductionReport {
  std::vector<InductionCase> cases;
  std::size_t violations() const;
};

/// Exact check, over the grid, of
///   2^(d^k (tau + 2 + ceil(d log2 k))) d^(k d^(k-1)) C(d+k-1, k)^(d^(k-1)(d-1))
///     <= 2^(d^(k+1)(tau+1)) d^((k+1) d^k) C(d+k, k+1)^(d^k (d-1)),
/// the step that lets boundary faces inherit the interior bound.
InductionReport theorem_induction_check(unsigned d_lo, unsigned d_hi, std::size_t k_lo,
                                        std::size_t k_hi, unsigned long tau_lo,
                                        unsigned long tau_hi);

}  // namespace simplexbound

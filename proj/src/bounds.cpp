#include "simplexbound/bounds.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "simplexbound/charpoly.hpp"
#include "simplexbound/errors.hpp"

namespace simplexbound {

namespace {

// Exponents beyond this many bits are refused rather than materialized.
constexpr unsigned long kMaxExponentBits = 1ul << 28;

unsigned long checked_mul(unsigned long a, unsigned long b) {
  if (a != 0 && b > kMaxExponentBits / a) {
    throw Error(ErrorCode::SizeOverflow, "closed-form exponent too large");
  }
  return a * b;
}

unsigned long checked_pow(unsigned long base, std::size_t exponent) {
  unsigned long r = 1;
  for (std::size_t i = 0; i < exponent; ++i) r = checked_mul(r, base);
  return r;
}

void check_params(const ClosedFormParams& p) {
  if (p.k < 1 || p.d < 1 || p.tau < 1) {
    throw Error(ErrorCode::InvalidArgument, "closed forms need k, d, tau >= 1");
  }
}

// 1 / (2^two_exp * d^d_exp * binom^binom_exp)
Rational reciprocal_of_product(unsigned long two_exp, unsigned d, unsigned long d_exp,
                               const Integer& binom, unsigned long binom_exp) {
  Integer den = pow2(two_exp);
  den *= pow_int(Integer(d), d_exp);
  den *= pow_int(binom, binom_exp);
  return make_rational(1, den);
}

}  // namespace

Rational closed_form_full(const ClosedFormParams& p) {
  check_params(p);
  const unsigned long dk = checked_pow(p.d, p.k);
  const unsigned long dk1 = checked_mul(dk, p.d);
  return reciprocal_of_product(checked_mul(p.tau + 1, dk1), p.d, checked_mul(p.k + 1, dk),
                               binomial(p.d + p.k, p.k + 1), checked_mul(dk, p.d - 1));
}

Rational closed_form_simplified(const ClosedFormParams& p) {
  check_params(p);
  const unsigned long dk1 = checked_pow(p.d, p.k + 1);
  return reciprocal_of_product(checked_mul(p.tau + 1, dk1), p.d, checked_mul(p.k + 1, dk1),
                               Integer(1), 0);
}

Rational closed_form_interior(const ClosedFormParams& p) { return closed_form_full(p); }

std::string FaceDescriptor::label() const {
  std::ostringstream os;
  os << "dim " << dimension;
  if (zeroed.empty() && hyperplane_applied.empty()) return os.str() + ", whole simplex";
  if (!zeroed.empty()) {
    os << ", zeroed {";
    for (std::size_t i = 0; i < zeroed.size(); ++i) os << (i ? "," : "") << "X" << zeroed[i];
    os << "}";
  }
  if (!hyperplane_applied.empty()) {
    os << ", hyperplane [";
    for (std::size_t i = 0; i < hyperplane_applied.size(); ++i) {
      os << (i ? "," : "") << "X" << hyperplane_applied[i];
    }
    os << "]";
  }
  return os.str();
}

namespace {

struct FaceNode {
  MultiPoly poly;
  FaceDescriptor face;
  std::vector<std::size_t> labels;  // original index of each current variable
  // Simplex vertex (0 = origin, i = e_i) at which the current variables vanish.
  std::size_t base = 0;

  // The face as the sorted set of simplex vertices it spans.
  std::vector<std::size_t> vertices() const {
    std::vector<std::size_t> v = labels;
    v.push_back(base);
    std::sort(v.begin(), v.end());
    return v;
  }
};

class FaceExplorer {
 public:
  FaceExplorer(const BoundOptions& options, BoundReport& report)
      : options_(options), report_(report) {}

  void visit(const FaceNode& node) {
    // Different zeroing orders reach the same face; explore it once.
    if (!seen_.insert(node.vertices()).second) return;
    const MultiPoly& p = node.poly;
    if (p.nvars() == 0 || p.is_constant()) {
      const Integer value = p.constant_term();
      if (value <= 0) {
        throw Error(ErrorCode::PositivityViolated,
                    "face (" + node.face.label() + ") has constant value " + value.get_str());
      }
      report_.contributions.push_back(
          {node.face, ContributionKind::VertexConstant, Rational(value), std::nullopt, std::nullopt});
      return;
    }
    const unsigned deg = total_degree(p);
    if (deg >= 2) interior(node, deg);
    if (!options_.face_recursion) return;

    const std::size_t k = p.nvars();
    for (std::size_t i = 1; i <= k; ++i) {
      FaceNode child{restrict_zero(p, i), node.face, node.labels};
      child.face.zeroed.push_back(node.labels[i - 1]);
      std::sort(child.face.zeroed.begin(), child.face.zeroed.end());
      child.face.dimension = k - 1;
      child.labels.erase(child.labels.begin() + static_cast<std::ptrdiff_t>(i - 1));
      visit(child);
    }
    FaceNode child{substitute_simplex_hyperplane(p), node.face, node.labels};
    child.face.hyperplane_applied.push_back(node.labels.back());
    child.face.dimension = k - 1;
    child.base = node.labels.back();
    child.labels.pop_back();
    const unsigned long tau = bitsize(p);
    if (!child.poly.is_zero()) {
      const unsigned long limit = hyperplane_bitsize_limit(k, deg, tau);
      const unsigned long got = bitsize(child.poly);
      if (got > limit) {
        report_.diagnostics.push_back("hyperplane face (" + child.face.label() + ") has bitsize " +
                                      std::to_string(got) + " above tau + 1 + ceil(d log2 k) = " +
                                      std::to_string(limit));
      }
    }
    visit(child);
  }

 private:
  void interior(const FaceNode& node, unsigned deg) {
    InteriorOptions io;
    io.max_dim = options_.max_dim;
    io.check_bounds = options_.check_bounds;
    const auto pipeline = run_interior_pipeline(node.poly, io);
    const ClosedFormParams params{node.poly.nvars(), deg, bitsize(node.poly)};
    const Rational floor = closed_form_interior(params);
    if (pipeline.bound && *pipeline.bound < floor) {
      throw Error(ErrorCode::ConsistencyFailure,
                  "interior bound at face (" + node.face.label() + ") is below the closed form");
    }
    report_.contributions.push_back(
        {node.face, ContributionKind::Interior, pipeline.bound, params, floor});
  }

  const BoundOptions& options_;
  BoundReport& report_;
  std::set<std::vector<std::size_t>> seen_;
};

}  // namespace

BoundReport certified_lower_bound(const MultiPoly& p, const BoundOptions& options) {
  BoundReport report;
  if (p.is_zero()) {
    throw Error(ErrorCode::PositivityViolated, "the zero polynomial is not positive on the simplex");
  }
  report.instance = make_instance(p);
  // A constant lies in the class for every degree bound; d = 1 is the least.
  const ClosedFormParams params{std::max<std::size_t>(report.instance.k, 1),
                                std::max(report.instance.d, 1u), report.instance.tau};
  report.closed_form_full = closed_form_full(params);
  report.closed_form_simplified = closed_form_simplified(params);

  FaceNode root{p, {}, {}};
  root.face.dimension = p.nvars();
  for (std::size_t i = 1; i <= p.nvars(); ++i) root.labels.push_back(i);
  FaceExplorer explorer(options, report);
  explorer.visit(root);

  std::optional<Rational> best;
  for (const auto& c : report.contributions) {
    if (c.value && (!best || *c.value < *best)) best = *c.value;
  }
  if (!best) {
    // Without face recursion a non-constant polynomial of degree <= 1 or an
    // interior pipeline returning None leaves nothing to certify.
    throw Error(ErrorCode::InvalidArgument, "no face produced a bound; enable face recursion");
  }
  report.global_bound = *best;
  return report;
}

MultiPoly example_family(std::size_t k, unsigned d, unsigned long tau) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "example family needs k >= 1");
  if (d % 2 != 0 || tau % 2 != 0 || d < 4 || tau < 2) {
    throw Error(ErrorCode::ParityViolation, "example family needs even d >= 4 and even tau >= 2");
  }
  auto x = [k](std::size_t i) { return MultiPoly::variable(k, i); };
  const MultiPoly one = MultiPoly::constant(k, 1);
  MultiPoly first = pow2(tau / 2) * x(1) - one;
  MultiPoly p = first * first;
  for (std::size_t i = 2; i <= k; ++i) {
    const MultiPoly link = x(i) - x(i - 1).pow(d / 2);
    p += link * link;
  }
  p += x(k).pow(d);
  return p;
}

Rational example_family_upper_bound(std::size_t k, unsigned d, unsigned long tau) {
  if (d % 2 != 0 || tau % 2 != 0 || d < 4 || tau < 2) {
    throw Error(ErrorCode::ParityViolation, "example family needs even d >= 4 and even tau >= 2");
  }
  return make_rational(1, pow2(checked_mul(tau, checked_pow(d / 2, k))));
}

std::vector<Rational> example_family_witness(std::size_t k, unsigned d, unsigned long tau) {
  std::vector<Rational> x;
  for (std::size_t i = 1; i <= k; ++i) {
    x.push_back(make_rational(1, pow2(checked_mul(tau / 2, checked_pow(d / 2, i - 1)))));
  }
  return x;
}

std::size_t InductionReport::violations() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const InductionCase& c) { return !c.holds; }));
}

InductionReport theorem_induction_check(unsigned d_lo, unsigned d_hi, std::size_t k_lo,
                                        std::size_t k_hi, unsigned long tau_lo,
                                        unsigned long tau_hi) {
  if (d_lo < 2 || k_lo < 1 || tau_lo < 1) {
    throw Error(ErrorCode::InvalidArgument, "induction check needs d >= 2, k >= 1, tau >= 1");
  }
  InductionReport report;
  for (unsigned d = d_lo; d <= d_hi; ++d) {
    for (std::size_t k = k_lo; k <= k_hi; ++k) {
      const unsigned long dk1 = checked_pow(d, k - 1);
      const unsigned long dk = checked_mul(dk1, d);
      const unsigned long dk_next = checked_mul(dk, d);
      const unsigned long log_term = ceil_log2_pow(k, d);
      for (unsigned long tau = tau_lo; tau <= tau_hi; ++tau) {
        Integer lhs = pow2(checked_mul(dk, tau + 2 + log_term));
        lhs *= pow_int(Integer(d), checked_mul(k, dk1));
        lhs *= pow_int(binomial(d + k - 1, k), checked_mul(dk1, d - 1));
        Integer rhs = pow2(checked_mul(dk_next, tau + 1));
        rhs *= pow_int(Integer(d), checked_mul(k + 1, dk));
        rhs *= pow_int(binomial(d + k, k + 1), checked_mul(dk, d - 1));
        report.cases.push_back({d, k, tau, lhs <= rhs});
      }
    }
  }
  return report;
}

}  // namespace simplexbound

#include "simplexbound/selftest.hpp"

#include <random>

#include "simplexbound/bounds.hpp"
#include "simplexbound/charpoly.hpp"
#include "simplexbound/errors.hpp"
#include "simplexbound/oracle.hpp"
#include "simplexbound/quotient_algebra.hpp"
#include "simplexbound/random_instances.hpp"

namespace simplexbound {

std::size_t SelftestReport::checks() const {
  std::size_t n = 0;
  for (const auto& s : suites) n += s.checks;
  return n;
}

std::size_t SelftestReport::failures() const {
  std::size_t n = 0;
  for (const auto& s : suites) n += s.failures.size();
  return n;
}

namespace {

struct Shape {
  std::size_t k;
  unsigned d;
};

// Shapes with d^k <= 16 for the growth and consistency suites.
constexpr Shape kShapes[] = {{1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {2, 4}};

template <typename Fn>
void guarded(SuiteResult& suite, const std::string& label, Fn&& fn) {
  ++suite.checks;
  try {
    fn();
  } catch (const std::exception& e) {
    suite.failures.push_back(label + ": " + e.what());
  }
}

void add_violations(SuiteResult& suite, const std::string& label,
                    const std::vector<BoundViolation>& violations) {
  for (const auto& v : violations) suite.failures.push_back(label + ": " + v.what);
}

SuiteResult growth_suite(std::mt19937_64& rng, std::size_t instances) {
  SuiteResult suite{"coefficient-growth", 0, {}};
  std::uniform_int_distribution<unsigned long> tau_dist(1, 4);
  for (std::size_t n = 0; n < instances; ++n) {
    const Shape shape = kShapes[n % std::size(kShapes)];
    const unsigned long tau_target = tau_dist(rng);
    const MultiPoly p = random_poly(rng, shape.k, shape.d, tau_target);
    const std::string label = "instance " + std::to_string(n) + " " + format_poly(p);
    guarded(suite, label, [&] {
      const unsigned long tau = bitsize(p);
      const GrowthParams params{shape.k, shape.d, tau};
      ReductionTable table(p, shape.d);
      const MultMatrix m = mult_matrix(table, build_R(p, shape.d));
      const TraceSequence tr = power_traces(m, table.basis().size());
      const CharPolyData c = newton_charpoly(tr, table.basis().size());
      add_violations(suite, label, reduction_bound_violations(table, tau));
      add_violations(suite, label, trace_bound_violations(tr, params));
      add_violations(suite, label, charpoly_bound_violations(c, params));
    });
  }
  return suite;
}

SuiteResult consistency_suite(std::mt19937_64& rng, std::size_t instances) {
  SuiteResult suite{"quotient-consistency", 0, {}};
  std::uniform_int_distribution<unsigned long> tau_dist(1, 4);
  for (std::size_t n = 0; n < instances; ++n) {
    const Shape shape = kShapes[n % std::size(kShapes)];
    const MultiPoly p = random_poly(rng, shape.k, shape.d, tau_dist(rng));
    const std::string label = "instance " + std::to_string(n) + " " + format_poly(p);
    guarded(suite, label, [&] {
      ReductionTable table(p, shape.d);
      // Populate the table the way the pipeline does before checking it.
      mult_matrix(table, build_R(p, shape.d));
      verify_quotient_consistency(table, p);
      // [X^a][X^b] = [X^(a+b)] for a few pairs just outside the box.
      std::uniform_int_distribution<unsigned> expo(0, shape.d + 1);
      for (int pair = 0; pair < 3; ++pair) {
        Exponent a(shape.k), b(shape.k), ab(shape.k);
        for (std::size_t v = 0; v < shape.k; ++v) {
          a[v] = expo(rng);
          b[v] = expo(rng);
          ab[v] = a[v] + b[v];
        }
        if (!(multiply_coordinates(table, table.reduce(a), table.reduce(b)) == table.reduce(ab))) {
          suite.failures.push_back(label + ": reduction is not multiplicative");
        }
      }
    });
  }
  return suite;
}

SuiteResult oracle_suite(std::mt19937_64& rng, std::size_t instances) {
  SuiteResult suite{"newton-vs-cofactor", 0, {}};
  constexpr Shape shapes[] = {{1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {3, 2}};
  std::uniform_int_distribution<unsigned long> tau_dist(1, 4);
  for (std::size_t n = 0; n < instances; ++n) {
    const Shape shape = shapes[n % std::size(shapes)];
    const MultiPoly p = random_poly(rng, shape.k, shape.d, tau_dist(rng));
    const std::string label = "instance " + std::to_string(n) + " " + format_poly(p);
    guarded(suite, label, [&] {
      ReductionTable table(p, shape.d);
      const MultMatrix m = mult_matrix(table, build_R(p, shape.d));
      const CharPolyData c = newton_charpoly(power_traces(m, m.dim()), m.dim());
      if (c.b != direct_charpoly(m)) suite.failures.push_back(label + ": characteristic polynomials differ");
    });
  }
  return suite;
}

SuiteResult closed_form_suite() {
  SuiteResult suite{"closed-forms", 0, {}};
  for (unsigned d = 1; d <= 5; ++d) {
    for (std::size_t k = 1; k <= 3; ++k) {
      Rational prev;
      for (unsigned long tau = 1; tau <= 8; ++tau) {
        const ClosedFormParams p{k, d, tau};
        const Rational full = closed_form_full(p);
        ++suite.checks;
        if (closed_form_simplified(p) > full) {
          suite.failures.push_back("simplified > full at (k,d,tau) = (" + std::to_string(k) + "," +
                                   std::to_string(d) + "," + std::to_string(tau) + ")");
        }
        if (tau > 1 && !(full < prev)) suite.failures.push_back("closed form not decreasing in tau");
        prev = full;
      }
    }
  }
  return suite;
}

SuiteResult induction_suite() {
  SuiteResult suite{"induction-inequality", 0, {}};
  const InductionReport r = theorem_induction_check(2, 4, 1, 3, 1, 8);
  suite.checks = r.cases.size();
  for (const auto& c : r.cases) {
    if (!c.holds) {
      suite.failures.push_back("violated at (d,k,tau) = (" + std::to_string(c.d) + "," +
                               std::to_string(c.k) + "," + std::to_string(c.tau) + ")");
    }
  }
  return suite;
}

SuiteResult soundness_suite(std::mt19937_64& rng, std::size_t instances,
                            const std::vector<unsigned long>& resolutions) {
  SuiteResult suite{"grid-soundness", 0, {}};
  std::uniform_int_distribution<std::size_t> k_dist(1, 2);
  std::uniform_int_distribution<unsigned> q_deg(1, 2);
  for (std::size_t n = 0; n < instances; ++n) {
    const MultiPoly p = random_positive_poly(rng, k_dist(rng), q_deg(rng), 3, 4);
    const std::string label = "instance " + std::to_string(n) + " " + format_poly(p);
    guarded(suite, label, [&] {
      const BoundReport report = certified_lower_bound(p);
      if (report.global_bound <= 0) suite.failures.push_back(label + ": bound not positive");
      for (unsigned long res : resolutions) {
        const GridResult g = grid_min(p, {p.nvars(), res});
        if (report.global_bound > g.value) {
          suite.failures.push_back(label + ": bound exceeds grid minimum at N = " + std::to_string(res));
        }
      }
      for (const auto& c : report.contributions) {
        if (c.value && c.closed_form_interior && *c.value < *c.closed_form_interior) {
          suite.failures.push_back(label + ": interior value below closed form at " + c.face.label());
        }
      }
    });
  }
  return suite;
}

SuiteResult example_suite(bool include_k2) {
  SuiteResult suite{"example-family", 0, {}};
  std::vector<ClosedFormParams> cases{{1, 4, 2}, {1, 4, 4}};
  if (include_k2) cases.push_back({2, 4, 2});
  for (const auto& c : cases) {
    const std::string label = "(" + std::to_string(c.k) + "," + std::to_string(c.d) + "," +
                              std::to_string(c.tau) + ")";
    guarded(suite, label, [&] {
      const MultiPoly p = example_family(c.k, c.d, c.tau);
      const Rational upper = example_family_upper_bound(c.k, c.d, c.tau);
      const BoundReport report = certified_lower_bound(p);
      if (!(report.global_bound > 0 && report.global_bound <= upper)) {
        suite.failures.push_back(label + ": bound outside (0, 2^(-tau (d/2)^k)]");
      }
    });
  }
  return suite;
}

}  // namespace

SelftestReport run_selftest(SelftestScale scale, unsigned long seed) {
  const bool full = scale == SelftestScale::Full;
  std::mt19937_64 rng(seed);
  SelftestReport report;
  report.suites.push_back(growth_suite(rng, full ? 60 : 12));
  report.suites.push_back(consistency_suite(rng, full ? 30 : 8));
  report.suites.push_back(oracle_suite(rng, full ? 36 : 12));
  report.suites.push_back(closed_form_suite());
  report.suites.push_back(induction_suite());
  report.suites.push_back(soundness_suite(rng, full ? 40 : 6,
                                          full ? std::vector<unsigned long>{50, 100}
                                               : std::vector<unsigned long>{50}));
  report.suites.push_back(example_suite(full));
  return report;
}

}  // namespace simplexbound

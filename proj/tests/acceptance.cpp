// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "simplexbound/bounds.hpp"
#include "simplexbound/charpoly.hpp"
#include "simplexbound/errors.hpp"
#include "simplexbound/oracle.hpp"
#include "simplexbound/quotient_algebra.hpp"
#include "simplexbound/random_instances.hpp"

using namespace simplexbound;

namespace {

struct Outcome {
  std::vector<std::string> failures;
  std::string summary;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

bool run_criterion(int id, const std::string& title, double limit_seconds,
                   const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.failures.push_back(std::string("exception: ") + e.what());
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed > limit_seconds) {
    out.failures.push_back("took " + std::to_string(elapsed) + " s, limit " +
                           std::to_string(limit_seconds) + " s");
  }
  const bool pass = out.failures.empty();
  std::printf("%s criterion %d: %s (%.3f s, limit %.0f s)%s%s\n", pass ? "PASS" : "FAIL", id,
              title.c_str(), elapsed, limit_seconds, out.summary.empty() ? "" : "; ",
              out.summary.c_str());
  for (const auto& f : out.failures) std::printf("    %s\n", f.c_str());
  std::fflush(stdout);
  return pass;
}

Rational inv_pow2(unsigned long e) { return Rational(Integer(1), pow2(e)); }

std::string params_text(std::size_t k, unsigned d, unsigned long tau) {
  return "(k,d,tau) = (" + std::to_string(k) + "," + std::to_string(d) + "," + std::to_string(tau) + ")";
}

void worked_instance(Outcome& out) {
  const MultiPoly p = parse_poly("2*X1^2 - 2*X1 + 1");
  const InteriorPipeline pipe = run_interior_pipeline(p);
  out.expect(pipe.instance.k == 1 && pipe.instance.d == 2 && pipe.instance.tau == 2,
             "instance parameters differ from (1,2,2)");

  MultMatrix expected(2);
  expected.at(0, 0) = SPoly{2};
  expected.at(0, 1) = SPoly{0, -4};
  expected.at(1, 0) = SPoly{-2};
  expected.at(1, 1) = SPoly{2, 8};
  out.expect(pipe.m_r == expected, "M_R = " + pipe.m_r.to_string());
  out.expect(pipe.traces[1] == SPoly{4, 8}, "tr1 = " + pipe.traces[1].to_string());

  const std::vector<SPoly> b{SPoly{1}, SPoly{-4, -8}, SPoly{4, 8}};
  out.expect(pipe.charpoly.b == b, "Newton coefficients differ");
  out.expect(direct_charpoly(pipe.m_r) == b, "cofactor expansion differs");
  out.expect(pipe.charpoly.l0 == 1, "l0 = " + std::to_string(pipe.charpoly.l0));
  out.expect(extract_S0(pipe.charpoly) == std::vector<Integer>{8, -8, 0}, "S(0,Y) != -8Y + 8");
  out.expect(pipe.cauchy == Rational(2), "Cauchy value differs from 2");
  out.expect(pipe.bound == make_rational(1, 4), "interior bound differs from 1/4");

  const BoundReport report = certified_lower_bound(p);
  out.expect(report.global_bound == make_rational(1, 4), "global bound " + to_string(report.global_bound));
  out.summary = "global bound " + to_string(report.global_bound);
}

void closed_forms(Outcome& out) {
  out.expect(closed_form_full({1, 2, 1}) == make_rational(1, 36864), "formula(1,2,1,full) != 1/36864");
  out.expect(closed_form_simplified({1, 2, 1}) == inv_pow2(16), "formula(1,2,1,simplified) != 2^-16");
  out.expect(closed_form_full({2, 2, 1}) == inv_pow2(36), "formula(2,2,1,full) != 2^-36");
  std::size_t cases = 0;
  for (unsigned d = 1; d <= 5; ++d) {
    for (std::size_t k = 1; k <= 3; ++k) {
      for (unsigned long tau = 1; tau <= 8; ++tau) {
        const ClosedFormParams params{k, d, tau};
        out.expect(closed_form_simplified(params) <= closed_form_full(params),
                   "simplified > full at " + params_text(k, d, tau));
        ++cases;
      }
    }
  }
  out.summary = std::to_string(cases) + " grid points";
}

void growth_bounds(Outcome& out) {
  std::mt19937_64 rng(101);
  std::size_t instances = 0, entries = 0;
  for (std::size_t k = 1; k <= 2; ++k) {
    for (unsigned d = 1; d <= 4; ++d) {
      for (unsigned long tau_target = 1; tau_target <= 4; ++tau_target) {
        for (int rep = 0; rep < 2; ++rep) {
          const MultiPoly p = random_poly(rng, k, d, tau_target);
          const std::string label = params_text(k, d, tau_target) + " " + format_poly(p);
          const GrowthParams params{k, d, bitsize(p)};
          const ReductionTable table(p, d);
          const MultMatrix m = mult_matrix(table, build_R(p, d));
          // Also reduce every X^g X_i^d so the table covers one full step beyond the box.
          for (const auto& e : pivot_check_exponents(table)) table.reduce(e);
          const TraceSequence tr = power_traces(m, m.dim());
          const CharPolyData c = newton_charpoly(tr, m.dim());
          for (const auto& v : reduction_bound_violations(table, params.tau)) out.expect(false, label + ": " + v.what);
          for (const auto& v : trace_bound_violations(tr, params)) out.expect(false, label + ": " + v.what);
          for (const auto& v : charpoly_bound_violations(c, params)) out.expect(false, label + ": " + v.what);
          for (const auto& [beta, coords] : table.computed_entries()) {
            for (const auto& coeff : coords) out.expect(coeff.coeff(0) == 0, label + ": nonzero c_0");
            ++entries;
          }
          ++instances;
        }
      }
    }
  }
  out.expect(instances >= 50, "fewer than 50 instances");
  out.summary = std::to_string(instances) + " instances, " + std::to_string(entries) +
                " reduced monomials outside the box";
}

void oracle_equivalence(Outcome& out) {
  struct Shape {
    std::size_t k;
    unsigned d;
  };
  const std::vector<Shape> shapes{{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7},
                                  {1, 8}, {1, 9}, {2, 2}, {2, 3}, {3, 2}};
  std::mt19937_64 rng(202);
  std::size_t instances = 0;
  for (const Shape& s : shapes) {
    for (unsigned long tau = 1; tau <= 4; ++tau) {
      for (int rep = 0; rep < 2; ++rep) {
        const MultiPoly p = random_poly(rng, s.k, s.d, tau);
        const std::string label = params_text(s.k, s.d, tau) + " " + format_poly(p);
        const ReductionTable table(p, s.d);
        const MultMatrix m = mult_matrix(table, build_R(p, s.d));
        const CharPolyData c = newton_charpoly(power_traces(m, m.dim()), m.dim());
        out.expect(c.b == direct_charpoly(m), label + ": Newton differs from cofactor expansion");
        try {
          verify_quotient_consistency(table, p);
        } catch (const Error& e) {
          out.expect(false, label + ": " + e.what());
        }
        ++instances;
      }
    }
  }
  out.summary = std::to_string(instances) + " instances with d^k <= 9";
}

void soundness(Outcome& out) {
  struct Shape {
    std::size_t k;
    unsigned q_deg;
    std::size_t count;
  };
  const std::vector<Shape> shapes{{1, 1, 10}, {1, 2, 10}, {2, 1, 10}, {2, 2, 10}, {3, 1, 4}};
  std::mt19937_64 rng(303);
  std::size_t instances = 0, nodes = 0;
  for (const Shape& s : shapes) {
    for (std::size_t n = 0; n < s.count; ++n) {
      const MultiPoly p = random_positive_poly(rng, s.k, s.q_deg, 3, 4);
      const std::string label = format_poly(p);
      const BoundReport report = certified_lower_bound(p);
      out.expect(report.global_bound > 0, label + ": bound not positive");
      for (unsigned long res : {50UL, 100UL}) {
        const GridResult g = grid_min(p, {p.nvars(), res});
        out.expect(report.global_bound <= g.value,
                   label + ": bound exceeds grid minimum at N = " + std::to_string(res));
      }
      for (const auto& c : report.contributions) {
        if (c.kind != ContributionKind::Interior) continue;
        ++nodes;
        if (c.value && c.closed_form_interior) {
          out.expect(*c.value >= *c.closed_form_interior,
                     label + ": interior value below closed form at " + c.face.label());
        }
      }
      ++instances;
    }
  }
  out.summary = std::to_string(instances) + " instances, " + std::to_string(nodes) + " interior nodes";
}

void example_family_cases(Outcome& out) {
  const std::vector<ClosedFormParams> cases{{1, 4, 2}, {1, 4, 4}, {2, 4, 2}};
  for (const auto& c : cases) {
    const MultiPoly p = example_family(c.k, c.d, c.tau);
    const Rational upper = example_family_upper_bound(c.k, c.d, c.tau);
    const BoundReport report = certified_lower_bound(p);
    const std::string label = params_text(c.k, c.d, c.tau);
    out.expect(report.global_bound > 0, label + ": bound not positive");
    out.expect(report.global_bound <= upper, label + ": bound " + to_string(report.global_bound) +
                                                 " above " + to_string(upper));
    out.summary += (out.summary.empty() ? "" : ", ") + label + " -> " + to_string(report.global_bound);
  }
}

void induction(Outcome& out) {
  const InductionReport r = theorem_induction_check(2, 4, 1, 3, 1, 8);
  for (const auto& c : r.cases) {
    out.expect(c.holds, "violated at " + params_text(c.k, c.d, c.tau));
  }
  out.expect(r.cases.size() == 3 * 3 * 8, "unexpected number of cases");
  out.summary = std::to_string(r.cases.size()) + " cases";
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run_criterion(1, "worked instance reproduced exactly", 1, worked_instance);
  ok &= run_criterion(2, "closed forms and simplified <= full", 1, closed_forms);
  ok &= run_criterion(3, "degree and magnitude bounds on random instances", 300, growth_bounds);
  ok &= run_criterion(4, "Newton vs cofactor, commutation, relations, pivots", 300, oracle_equivalence);
  ok &= run_criterion(5, "soundness against grid minima", 600, soundness);
  ok &= run_criterion(6, "doubly exponential family", 600, example_family_cases);
  ok &= run_criterion(7, "induction inequality", 60, induction);
  std::printf("%s\n", ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return ok ? 0 : 1;
}

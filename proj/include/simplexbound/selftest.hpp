#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace simplexbound {

enum class SelftestScale { Quick, Full };

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;
};

struct SelftestReport {
  std::vector<SuiteResult> suites;

  std::size_t checks() const;
  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
};

// Invariant suites over seeded random instances: rewriting, trace and
// characteristic coefficient bounds; quotient consistency and
// multiplicativity; Newton vs cofactor characteristic polynomials; closed
// form ordering; the induction inequality; grid soundness; the
// doubly exponential example family.
SelftestReport run_selftest(SelftestScale scale, unsigned long seed = 20240601);

}  // namespace simplexbound

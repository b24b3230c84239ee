#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Randomized property suites over the verify oracles; shared by the tests and `montes verify`.
namespace montes::verify {

struct SuiteResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::string first_failure;
  bool ok() const { return failed == 0 && checked > 0; }
};

// sum e*f = deg f on random monic squarefree polynomials (deg <= 6, |c| <= 50, p in {2,3,5,13})
SuiteResult suite_partition(std::size_t count, std::uint64_t seed);
// v_p(disc) = 2 ind + sum (e-1) f whenever every e is prime to p; disc from the Sylvester oracle
SuiteResult suite_tame(std::size_t count, std::uint64_t seed);
// index 0 exactly when the Dedekind oracle says so, and then the same (e, f) list
SuiteResult suite_dedekind(std::size_t count, std::uint64_t seed);
// polygon_index and cut_index against lattice enumeration
SuiteResult suite_lattice(std::size_t count, std::uint64_t seed);
// refined vs order-raised on synthetic refinement branches
SuiteResult suite_refinement(std::size_t count, std::uint64_t seed);
// valuation grid, beta valuations, p-power denominators, closed-form cross valuations
SuiteResult suite_generators(std::size_t count, std::uint64_t seed);

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, std::size_t count, std::uint64_t seed);

}  // namespace montes::verify

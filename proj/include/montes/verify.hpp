#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "montes/algorithm.hpp"

// Independent oracles for the test suite. None of these share code with the main loop except where a check
// explicitly compares two ways of driving it.
namespace montes::verify {

// lattice points with start_x < x <= end_x, strictly above y = end_y, on or below N (rebased at its own start)
std::int64_t lattice_index_oracle(const PrincipalPolygon& n);
// weighted count strictly above the slope -h line through the last point of cut(N, h)
std::int64_t lattice_cut_index_oracle(const PrincipalPolygon& n, std::int64_t h, std::int64_t weight);

struct EF {
  std::int64_t e, f;
  friend bool operator==(const EF& a, const EF& b) { return a.e == b.e && a.f == b.f; }
  friend bool operator<(const EF& a, const EF& b) { return a.e != b.e ? a.e < b.e : a.f < b.f; }
};
// sorted (e, f) list when p does not divide the index, nullopt when it does
std::optional<std::vector<EF>> dedekind_oracle(const IntPolynomial& f, const Integer& p);

// Sylvester determinant by fraction-free elimination; deg <= 8
Integer sylvester_discriminant(const IntPolynomial& f);

// v_p(disc) = 2 ind + sum (e-1) f; NotApplicable if some e is divisible by p
bool tame_disc_check(const RunResult& r, std::int64_t disc_valuation);

struct RefinementInstance {
  IntPolynomial f;
  Integer p;
  Type parent;  // open top level, the type whose polygon produced the branch
  unsigned omega = 0;
  Branch branch;  // integer slope, deg psi = 1, multiplicity >= 2
};

struct RefinementReport {
  bool ok = true;
  std::string detail;
};
// refined (same order, cut at h) vs order raised: same polygons up to the shift, slopes, e, residual factor
// degrees and multiplicities, index contributions, and residual polynomials equal up to the twist
RefinementReport refinement_equivalence_check(const RefinementInstance& in);
// walks the branch tree of f and returns up to `limit` instances
std::vector<RefinementInstance> refinement_instances(const IntPolynomial& f, const Integer& p, std::size_t limit = 8);

struct GridCheck {
  bool ok = true;
  std::string detail;
  RunResult result;
  std::vector<std::vector<std::int64_t>> grid;  // grid[p][q] = v_q(alpha_p)
};
// runs with generators and checks v_q(alpha_p) = delta, v_p(beta_p) = 1, p-power denominators and the closed
// form for v_q(beta_p) against the direct valuation
GridCheck check_generators(const IntPolynomial& f, const Integer& p);

// random monic polynomial, degree in [1, max_deg], coefficients in [-bound, bound]
IntPolynomial random_monic(std::mt19937_64& rng, long max_deg, long bound);
IntPolynomial random_monic_squarefree(std::mt19937_64& rng, long max_deg, long bound);
// random principal polygon with end abscissa <= max_x, ordinates <= max_y
PrincipalPolygon random_polygon(std::mt19937_64& rng, std::int64_t max_x, std::int64_t max_y);

}  // namespace montes::verify

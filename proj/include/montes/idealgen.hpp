#pragma once

#include <cstdint>
#include <vector>

#include "montes/algorithm.hpp"

namespace montes {

// num(theta) / den in Q[x]/(f); deg num < deg f, den > 0, gcd(content(num), den) = 1
struct FieldElement {
  IntPolynomial num;
  Integer den{1};
  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.num == b.num && a.den == b.den; }
};

FieldElement make_element(const IntPolynomial& num, const Integer& den, const IntPolynomial& f);
FieldElement field_mul(const FieldElement& a, const FieldElement& b, const IntPolynomial& f);
FieldElement field_pow(const FieldElement& a, unsigned long n, const IntPolynomial& f);
// throws NotInvertible
FieldElement field_inv(const FieldElement& a, const IntPolynomial& f);

// rt: complete type with phi_{r+1} open on top. Returns a representative with H = 1.
IntPolynomial ensure_H1(const Type& rt, ExpansionCache& cache, const Options& opt = {});
// the H of N_{r+1}(f) for the open representative; nullopt when phi divides f
std::optional<std::int64_t> side_height(const Type& rt, ExpansionCache& cache);
// phi_tilde(theta) / phi_r(theta)^(e_r f_r), or phi_tilde(theta) at order zero
FieldElement beta(const Type& rt, const IntPolynomial& phi_tilde, const IntPolynomial& f);

// closed form v_q(beta_p); 0 when q does not dominate p
std::int64_t v_q_beta(const std::vector<CompleteRecord>& primes, std::size_t p, std::size_t q);

// v_q(P(theta)) normalised so that v_q(p) = e(q/p); rt as for ensure_H1
std::int64_t value_at_prime(const Type& rt, const IntPolynomial& P, ExpansionCache& cache);
std::int64_t value_at_prime(const Type& rt, const FieldElement& a, ExpansionCache& cache);

FieldElement finalize_alpha(const FieldElement& tilde, const Integer& p);

struct GeneratorData {
  std::vector<Type> rep_types;
  std::vector<FieldElement> betas;
  std::vector<FieldElement> tilde;
  std::vector<FieldElement> alphas;
};

// fills CompleteRecord::generator and tweaked_phi for every prime; returns intermediate values for checking
GeneratorData compute_generators(RunResult& res, ExpansionCache& cache, const Options& opt = {});

}  // namespace montes

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "montes/zpoly.hpp"

namespace montes {

using Residue = std::uint64_t;

// Element of F_level. Coordinates over F_p in the tower basis: F_{k+1} = F_k[y]/(psi_k), an element of
// F_{k+1} is f_k consecutive blocks of F_k coordinates (constant block first).
struct FFElement {
  unsigned level = 0;
  std::vector<Residue> c;

  friend bool operator==(const FFElement& a, const FFElement& b) { return a.level == b.level && a.c == b.c; }
  friend bool operator!=(const FFElement& a, const FFElement& b) { return !(a == b); }
};

// Polynomial in y over F_level; zero has no coefficients.
struct FFPolynomial {
  unsigned level = 0;
  std::vector<FFElement> coeffs;

  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  const FFElement& lead() const { return coeffs.back(); }
  friend bool operator==(const FFPolynomial& a, const FFPolynomial& b) {
    return a.level == b.level && a.coeffs == b.coeffs;
  }
  friend bool operator!=(const FFPolynomial& a, const FFPolynomial& b) { return !(a == b); }
};

struct FFFactor {
  FFPolynomial poly;
  unsigned multiplicity;
};

struct FFFactorization {
  FFElement unit;
  std::vector<FFFactor> factors;
};

// p < 2^62 so sums of two residues never overflow and products go through 128 bits.
class TowerField {
 public:
  TowerField() = default;
  explicit TowerField(Residue p);

  Residue prime() const { return p_; }
  // number of moduli; levels 0..top() exist
  unsigned top() const { return static_cast<unsigned>(chain_.size()); }
  std::size_t dim(unsigned level) const { return dims_.at(level); }
  unsigned degree_at(unsigned level) const { return static_cast<unsigned>(chain_.at(level).degree()); }
  const FFPolynomial& modulus(unsigned level) const { return chain_.at(level); }
  const std::vector<FFPolynomial>& chain() const { return chain_; }
  mpz_class cardinality(unsigned level) const;

  // appends psi (monic irreducible over F_top); throws ReducibleModulus
  TowerField extend(const FFPolynomial& psi) const;
  TowerField extend_unchecked(const FFPolynomial& psi) const;
  TowerField truncated(unsigned levels) const;

  // elements
  FFElement zero(unsigned level) const;
  FFElement one(unsigned level) const;
  FFElement from_int(unsigned level, const Integer& v) const;
  FFElement from_residue(unsigned level, Residue v) const;
  // z_{level-1}: class of y in F_level
  FFElement generator(unsigned level) const;
  FFElement embed(const FFElement& a, unsigned level) const;
  // element of F_level lying in F_lower
  bool lies_in(const FFElement& a, unsigned lower) const;
  FFElement project(const FFElement& a, unsigned lower) const;
  // coordinates of a over F_{level-1}
  std::vector<FFElement> split(const FFElement& a) const;
  FFElement join(unsigned level, const std::vector<FFElement>& parts) const;

  bool is_zero(const FFElement& a) const;
  bool is_one(const FFElement& a) const;
  FFElement add(const FFElement& a, const FFElement& b) const;
  FFElement sub(const FFElement& a, const FFElement& b) const;
  FFElement neg(const FFElement& a) const;
  FFElement mul(const FFElement& a, const FFElement& b) const;
  FFElement inv(const FFElement& a) const;
  FFElement div(const FFElement& a, const FFElement& b) const { return mul(a, inv(b)); }
  FFElement pow(const FFElement& a, const mpz_class& e) const;
  FFElement pow(const FFElement& a, long e) const { return pow(a, mpz_class(e)); }
  FFElement pth_root(const FFElement& a) const;
  FFElement random(unsigned level, std::mt19937_64& rng) const;
  std::string to_string(const FFElement& a) const;

  // polynomials over F_level
  FFPolynomial poly(unsigned level, std::vector<FFElement> coeffs) const;
  FFPolynomial poly_from_residues(const std::vector<Residue>& coeffs) const;
  FFPolynomial y(unsigned level) const;
  FFPolynomial constant(const FFElement& a) const;
  FFPolynomial padd(const FFPolynomial& a, const FFPolynomial& b) const;
  FFPolynomial psub(const FFPolynomial& a, const FFPolynomial& b) const;
  FFPolynomial pmul(const FFPolynomial& a, const FFPolynomial& b) const;
  FFPolynomial pscale(const FFPolynomial& a, const FFElement& k) const;
  std::pair<FFPolynomial, FFPolynomial> pdivmod(const FFPolynomial& a, const FFPolynomial& b) const;
  FFPolynomial prem(const FFPolynomial& a, const FFPolynomial& b) const { return pdivmod(a, b).second; }
  FFPolynomial pquo(const FFPolynomial& a, const FFPolynomial& b) const { return pdivmod(a, b).first; }
  FFPolynomial pmonic(const FFPolynomial& a) const;
  FFPolynomial pgcd(const FFPolynomial& a, const FFPolynomial& b) const;
  // (g, s, t) with s a + t b = g monic
  std::tuple<FFPolynomial, FFPolynomial, FFPolynomial> pxgcd(const FFPolynomial& a,
                                                             const FFPolynomial& b) const;
  FFPolynomial pderivative(const FFPolynomial& a) const;
  FFPolynomial ppowmod(const FFPolynomial& base, const mpz_class& e, const FFPolynomial& mod) const;
  FFPolynomial ppow(const FFPolynomial& base, unsigned long e) const;
  // evaluation at an element of a level >= the polynomial's level
  FFElement evaluate(const FFPolynomial& a, const FFElement& x) const;
  FFPolynomial embed_poly(const FFPolynomial& a, unsigned level) const;
  FFPolynomial random_poly(unsigned level, long degree, std::mt19937_64& rng, bool monic) const;
  std::string to_string(const FFPolynomial& a) const;

  bool is_irreducible(const FFPolynomial& a) const;
  FFFactorization factor(const FFPolynomial& a, std::uint64_t seed = 0) const;
  // roots in the coefficient field, sorted
  std::vector<FFElement> roots(const FFPolynomial& a, std::uint64_t seed = 0) const;

 private:
  void mul_raw(unsigned level, const Residue* a, const Residue* b, Residue* out) const;
  void check(const FFElement& a) const;
  FFPolynomial trimmed(FFPolynomial a) const;
  std::vector<std::pair<FFPolynomial, unsigned>> squarefree(const FFPolynomial& a) const;
  std::vector<std::pair<FFPolynomial, unsigned>> distinct_degree(FFPolynomial a) const;
  void equal_degree(const FFPolynomial& a, unsigned d, std::mt19937_64& rng,
                    std::vector<FFPolynomial>& out) const;
  FFPolynomial frobenius_power(const FFPolynomial& h, const FFPolynomial& mod) const;

  Residue p_ = 2;
  std::vector<FFPolynomial> chain_;
  std::vector<std::size_t> dims_{1};
};

// coefficientwise residues into level 0
FFPolynomial reduce_mod_p(const IntPolynomial& a, Residue p);
// canonical lift with residues in [0, p)
IntPolynomial lift_residues(const FFPolynomial& a);
// sort key used for deterministic factor order
bool ff_poly_less(const FFPolynomial& a, const FFPolynomial& b);

}  // namespace montes

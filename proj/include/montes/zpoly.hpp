#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace montes {

using Integer = mpz_class;
using Rational = mpq_class;

// Dense polynomial over Z, constant term first, never stores a trailing zero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const Integer& c);
  static IntPolynomial monomial(const Integer& c, std::size_t deg);
  static IntPolynomial x() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  bool is_constant() const { return c_.size() <= 1; }

  const Integer& lead() const;
  // coefficient of x^i, zero beyond the degree
  const Integer& operator[](std::size_t i) const;
  const std::vector<Integer>& coeffs() const { return c_; }

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const Integer& k);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const Integer& k) { return a *= k; }
  friend IntPolynomial operator*(const Integer& k, IntPolynomial a) { return a *= k; }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

  Integer evaluate(const Integer& x) const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> c_;
};

IntPolynomial pow(const IntPolynomial& a, unsigned long n);

struct DivMod {
  IntPolynomial quot;
  IntPolynomial rem;
};

// Division by a monic polynomial; throws NonMonicModulus otherwise.
DivMod divmod(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial rem(const IntPolynomial& a, const IntPolynomial& b);
// a / k where k divides every coefficient
IntPolynomial exact_div(const IntPolynomial& a, const Integer& k);
// lc(b)^(deg a - deg b + 1) * a mod b
IntPolynomial pseudo_rem(const IntPolynomial& a, const IntPolynomial& b);

// P = sum a_i phi^i with deg a_i < deg phi
std::vector<IntPolynomial> phi_expand(const IntPolynomial& p, const IntPolynomial& phi);
// only a_0 .. a_{count-1}; the rest is discarded
std::vector<IntPolynomial> phi_expand_prefix(const IntPolynomial& p, const IntPolynomial& phi,
                                             std::size_t count);
IntPolynomial phi_collect(const std::vector<IntPolynomial>& parts, const IntPolynomial& phi);

IntPolynomial compose_shift(const IntPolynomial& p, const Integer& c);
IntPolynomial derivative(const IntPolynomial& p);
Integer content(const IntPolynomial& p);
IntPolynomial primitive_part(const IntPolynomial& p);
// gcd over Q, returned primitive with positive leading coefficient
IntPolynomial gcd_z(IntPolynomial a, IntPolynomial b);

// p-adic valuations; p >= 2. pval(0) throws, pval_inf(0) is nullopt (infinity).
unsigned long pval(const Integer& n, const Integer& p);
std::optional<unsigned long> pval_inf(const Integer& n, const Integer& p);
unsigned long vpoly(const IntPolynomial& p, const Integer& prime);
// p^k without regard to overflow, GMP does the work
Integer ipow(const Integer& p, unsigned long k);

Integer resultant(const IntPolynomial& a, const IntPolynomial& b);
Integer discriminant(const IntPolynomial& p);

// Dense polynomial over Q, canonical form as above.
class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<Rational> coeffs);
  explicit RatPolynomial(const IntPolynomial& p);

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Rational& lead() const;
  const Rational& operator[](std::size_t i) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  RatPolynomial& operator+=(const RatPolynomial& o);
  RatPolynomial& operator-=(const RatPolynomial& o);
  RatPolynomial& operator*=(const Rational& k);
  friend RatPolynomial operator+(RatPolynomial a, const RatPolynomial& b) { return a += b; }
  friend RatPolynomial operator-(RatPolynomial a, const RatPolynomial& b) { return a -= b; }
  friend RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator*(RatPolynomial a, const Rational& k) { return a *= k; }
  friend bool operator==(const RatPolynomial& a, const RatPolynomial& b) { return a.c_ == b.c_; }

  RatPolynomial monic() const;
  // common denominator split: this = num / den, num primitive-free integer polynomial
  std::pair<IntPolynomial, Integer> split_denominator() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct RatDivMod {
  RatPolynomial quot;
  RatPolynomial rem;
};
RatDivMod divmod(const RatPolynomial& a, const RatPolynomial& b);

struct RatXgcd {
  RatPolynomial g, s, t;
};
// g monic, s*a + t*b = g
RatXgcd xgcd_rat(const RatPolynomial& a, const RatPolynomial& b);

}  // namespace montes

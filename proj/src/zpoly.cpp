#include "montes/zpoly.hpp"

#include <algorithm>
#include <sstream>

#include "montes/error.hpp"

namespace montes {

namespace {
const Integer kZero = 0;
const Rational kZeroQ = 0;
}  // namespace

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t deg) {
  std::vector<Integer> v(deg + 1);
  v[deg] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

const Integer& IntPolynomial::lead() const {
  if (c_.empty()) fail(Errc::ZeroPolynomial, "leading coefficient of zero polynomial");
  return c_.back();
}

const Integer& IntPolynomial::operator[](std::size_t i) const { return i < c_.size() ? c_[i] : kZero; }

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& k) {
  if (sgn(k) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= k;
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    mpz_srcptr ai = a.c_[i].get_mpz_t();
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), ai, b.c_[j].get_mpz_t());
  }
  return IntPolynomial(std::move(r));
}

Integer IntPolynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Integer& c = c_[i];
    if (sgn(c) == 0) continue;
    Integer mag = abs(c);
    if (sgn(c) < 0)
      os << '-';
    else if (!first)
      os << '+';
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'x';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

IntPolynomial pow(const IntPolynomial& a, unsigned long n) {
  IntPolynomial result{1};
  IntPolynomial base = a;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

DivMod divmod(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) fail(Errc::ZeroPolynomial, "division by zero polynomial");
  if (!b.is_monic()) fail(Errc::NonMonicModulus, "divisor must be monic");
  if (a.degree() < b.degree()) return {IntPolynomial{}, a};
  std::vector<Integer> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<Integer> q(r.size() - db);
  for (std::size_t k = r.size(); k-- > db;) {
    if (sgn(r[k]) == 0) continue;
    Integer t = r[k];
    q[k - db] = t;
    mpz_srcptr tp = t.get_mpz_t();
    for (std::size_t j = 0; j < db; ++j) mpz_submul(r[k - db + j].get_mpz_t(), tp, bc[j].get_mpz_t());
    r[k] = 0;
  }
  r.resize(db);
  return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r))};
}

IntPolynomial rem(const IntPolynomial& a, const IntPolynomial& b) { return divmod(a, b).rem; }

IntPolynomial exact_div(const IntPolynomial& a, const Integer& k) {
  if (sgn(k) == 0) fail(Errc::DivisionByZero, "exact_div by zero");
  std::vector<Integer> r = a.coeffs();
  for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
  return IntPolynomial(std::move(r));
}

IntPolynomial pseudo_rem(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) fail(Errc::ZeroPolynomial, "pseudo remainder by zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const Integer& lb = bc.back();
  long steps = a.degree() - b.degree() + 1;
  for (std::size_t k = r.size(); k-- > db;) {
    Integer t = r[k];
    for (auto& c : r) c *= lb;
    for (std::size_t j = 0; j < db; ++j) mpz_submul(r[k - db + j].get_mpz_t(), t.get_mpz_t(), bc[j].get_mpz_t());
    r[k] = 0;
    --steps;
  }
  (void)steps;
  r.resize(db);
  return IntPolynomial(std::move(r));
}

std::vector<IntPolynomial> phi_expand(const IntPolynomial& p, const IntPolynomial& phi) {
  if (!phi.is_monic()) fail(Errc::NonMonicModulus, "phi must be monic");
  if (phi.degree() < 1) fail(Errc::DegreeTooSmall, "phi must have positive degree");
  std::size_t n = p.is_zero() ? 0 : static_cast<std::size_t>(p.degree() / phi.degree()) + 1;
  return phi_expand_prefix(p, phi, n);
}

std::vector<IntPolynomial> phi_expand_prefix(const IntPolynomial& p, const IntPolynomial& phi,
                                             std::size_t count) {
  if (!phi.is_monic()) fail(Errc::NonMonicModulus, "phi must be monic");
  if (phi.degree() < 1) fail(Errc::DegreeTooSmall, "phi must have positive degree");
  std::vector<IntPolynomial> out;
  out.reserve(count);
  IntPolynomial cur = p;
  while (out.size() < count) {
    if (cur.is_zero()) {
      out.emplace_back();
      continue;
    }
    if (out.size() + 1 == count) {
      out.push_back(rem(cur, phi));
      break;
    }
    DivMod qr = divmod(cur, phi);
    out.push_back(std::move(qr.rem));
    cur = std::move(qr.quot);
  }
  return out;
}

IntPolynomial phi_collect(const std::vector<IntPolynomial>& parts, const IntPolynomial& phi) {
  IntPolynomial acc;
  for (std::size_t i = parts.size(); i-- > 0;) acc = acc * phi + parts[i];
  return acc;
}

IntPolynomial compose_shift(const IntPolynomial& p, const Integer& c) {
  // synthetic shifting: after pass k the top coefficients are final
  std::vector<Integer> a = p.coeffs();
  const std::size_t n = a.size();
  for (std::size_t k = 0; k + 1 < n; ++k)
    for (std::size_t i = n - 1; i-- > k;) mpz_addmul(a[i].get_mpz_t(), a[i + 1].get_mpz_t(), c.get_mpz_t());
  return IntPolynomial(std::move(a));
}

IntPolynomial derivative(const IntPolynomial& p) {
  if (p.size() <= 1) return {};
  std::vector<Integer> d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(d));
}

Integer content(const IntPolynomial& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  if (sgn(p.lead()) < 0) g = -g;
  return exact_div(p, g);
}

IntPolynomial gcd_z(IntPolynomial a, IntPolynomial b) {
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = primitive_part(pseudo_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return primitive_part(a);
}

unsigned long pval(const Integer& n, const Integer& p) {
  if (sgn(n) == 0) fail(Errc::DivisionByZero, "valuation of zero is infinite");
  if (p < 2) fail(Errc::NotPrime, "valuation base must be a prime");
  Integer t;
  return mpz_remove(t.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

std::optional<unsigned long> pval_inf(const Integer& n, const Integer& p) {
  if (sgn(n) == 0) return std::nullopt;
  return pval(n, p);
}

unsigned long vpoly(const IntPolynomial& p, const Integer& prime) {
  if (p.is_zero()) fail(Errc::ZeroPolynomial, "vpoly of zero polynomial");
  unsigned long best = ~0UL;
  for (const auto& c : p.coeffs()) {
    if (sgn(c) == 0) continue;
    best = std::min(best, pval(c, prime));
    if (best == 0) break;
  }
  return best;
}

Integer ipow(const Integer& p, unsigned long k) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), k);
  return r;
}

// subresultant PRS
Integer resultant(const IntPolynomial& a0, const IntPolynomial& b0) {
  if (a0.is_zero() || b0.is_zero()) return 0;
  IntPolynomial A = a0, B = b0;
  Integer s = 1;
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
  }
  if (B.degree() == 0) return s * ipow(B.lead(), A.degree());
  Integer ca = content(A), cb = content(B);
  A = exact_div(A, ca);
  B = exact_div(B, cb);
  Integer t = ipow(ca, B.degree()) * ipow(cb, A.degree());
  Integer g = 1, h = 1;
  for (;;) {
    long delta = A.degree() - B.degree();
    if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
    IntPolynomial R = pseudo_rem(A, B);
    A = std::move(B);
    if (R.is_zero()) return 0;
    B = exact_div(R, g * ipow(h, delta));
    g = A.lead();
    // h <- h^(1-delta) g^delta
    if (delta == 0) {
      // h unchanged... h^1 * g^0
    } else {
      Integer num = ipow(g, delta);
      Integer den = ipow(h, delta - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (B.degree() == 0) {
      long da = A.degree();
      Integer num = ipow(B.lead(), da);
      Integer den = ipow(h, da - 1);
      Integer hh;
      mpz_divexact(hh.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      return s * t * hh;
    }
  }
}

Integer discriminant(const IntPolynomial& p) {
  if (p.degree() < 1) fail(Errc::DegreeTooSmall, "discriminant needs positive degree");
  long n = p.degree();
  Integer r = resultant(p, derivative(p));
  Integer d;
  mpz_divexact(d.get_mpz_t(), r.get_mpz_t(), p.lead().get_mpz_t());
  if (((n * (n - 1)) / 2) & 1) d = -d;
  return d;
}

// ---- rationals

RatPolynomial::RatPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

RatPolynomial::RatPolynomial(const IntPolynomial& p) {
  c_.reserve(p.size());
  for (const auto& c : p.coeffs()) c_.emplace_back(c);
}

void RatPolynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

const Rational& RatPolynomial::lead() const {
  if (c_.empty()) fail(Errc::ZeroPolynomial, "leading coefficient of zero polynomial");
  return c_.back();
}

const Rational& RatPolynomial::operator[](std::size_t i) const { return i < c_.size() ? c_[i] : kZeroQ; }

RatPolynomial& RatPolynomial::operator+=(const RatPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

RatPolynomial& RatPolynomial::operator-=(const RatPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RatPolynomial& RatPolynomial::operator*=(const Rational& k) {
  if (sgn(k) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= k;
  return *this;
}

RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  RatPolynomial out;
  out.c_ = std::move(r);
  out.trim();
  return out;
}

RatPolynomial RatPolynomial::monic() const {
  if (c_.empty()) return *this;
  Rational inv = 1 / lead();
  return *this * inv;
}

std::pair<IntPolynomial, Integer> RatPolynomial::split_denominator() const {
  Integer den = 1;
  for (const auto& c : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> num;
  num.reserve(c_.size());
  for (const auto& c : c_) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    num.push_back(q * c.get_num());
  }
  return {IntPolynomial(std::move(num)), den};
}

RatDivMod divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) fail(Errc::ZeroPolynomial, "division by zero polynomial");
  if (a.degree() < b.degree()) return {RatPolynomial{}, a};
  std::vector<Rational> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  Rational inv = 1 / bc.back();
  std::vector<Rational> q(r.size() - db);
  for (std::size_t k = r.size(); k-- > db;) {
    if (sgn(r[k]) == 0) continue;
    Rational t = r[k] * inv;
    q[k - db] = t;
    for (std::size_t j = 0; j < db; ++j) r[k - db + j] -= t * bc[j];
    r[k] = 0;
  }
  r.resize(db);
  return {RatPolynomial(std::move(q)), RatPolynomial(std::move(r))};
}

RatXgcd xgcd_rat(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) {
    if (a.is_zero()) return {};
    Rational inv = 1 / a.lead();
    return {a * inv, RatPolynomial(std::vector<Rational>{inv}), RatPolynomial{}};
  }
  // invariant: s0*a + t0*b = r0, s1*a + t1*b = r1
  RatPolynomial r0 = a, r1 = b;
  RatPolynomial s0(std::vector<Rational>{1}), s1;
  RatPolynomial t0, t1(std::vector<Rational>{1});
  if (a.is_zero()) {
    std::swap(r0, r1);
    std::swap(s0, s1);
    std::swap(t0, t1);
  }
  while (!r1.is_zero()) {
    RatDivMod qr = divmod(r0, r1);
    RatPolynomial s2 = s0 - qr.quot * s1;
    RatPolynomial t2 = t0 - qr.quot * t1;
    r0 = std::move(r1);
    r1 = std::move(qr.rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  Rational inv = 1 / r0.lead();
  return {r0 * inv, s0 * inv, t0 * inv};
}

}  // namespace montes

#include "montes/ffield.hpp"

#include <algorithm>
#include <sstream>

#include "montes/error.hpp"

namespace montes {

namespace {

inline Residue addmod(Residue a, Residue b, Residue p) {
  Residue s = a + b;
  return s >= p ? s - p : s;
}
inline Residue submod(Residue a, Residue b, Residue p) { return a >= b ? a - b : a + p - b; }
inline Residue mulmod(Residue a, Residue b, Residue p) {
  return static_cast<Residue>((static_cast<unsigned __int128>(a) * b) % p);
}

Residue invmod(Residue a, Residue p) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) fail(Errc::DivisionByZero, "residue not invertible");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<Residue>(t);
}

bool all_zero(const Residue* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i]) return false;
  return true;
}

std::uint64_t fnv(const FFPolynomial& a) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(a.level);
  for (const auto& c : a.coeffs)
    for (Residue r : c.c) mix(r);
  return h;
}

}  // namespace

TowerField::TowerField(Residue p) : p_(p) {
  if (p < 2) fail(Errc::NotPrime, "field characteristic must be prime");
  if (p >= (Residue(1) << 62)) fail(Errc::PrimeTooLarge, "prime must be below 2^62");
}

mpz_class TowerField::cardinality(unsigned level) const {
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), p_, dim(level));
  return q;
}

TowerField TowerField::extend(const FFPolynomial& psi) const {
  if (psi.level != top()) fail(Errc::ReducibleModulus, "modulus lives at the wrong level");
  if (psi.degree() < 1) fail(Errc::DegreeTooSmall, "modulus must have positive degree");
  if (!is_one(psi.lead()) || !is_irreducible(psi)) fail(Errc::ReducibleModulus, "modulus is not monic irreducible");
  return extend_unchecked(psi);
}

TowerField TowerField::extend_unchecked(const FFPolynomial& psi) const {
  TowerField K = *this;
  K.chain_.push_back(psi);
  K.dims_.push_back(dims_.back() * static_cast<std::size_t>(psi.degree()));
  return K;
}

TowerField TowerField::truncated(unsigned levels) const {
  TowerField K = *this;
  K.chain_.resize(levels);
  K.dims_.resize(levels + 1);
  return K;
}

void TowerField::check(const FFElement& a) const {
  if (a.level > top() || a.c.size() != dims_[a.level])
    fail(Errc::InvariantViolation, "element does not belong to this tower");
}

FFElement TowerField::zero(unsigned level) const { return FFElement{level, std::vector<Residue>(dim(level), 0)}; }

FFElement TowerField::one(unsigned level) const { return from_residue(level, 1); }

FFElement TowerField::from_residue(unsigned level, Residue v) const {
  FFElement e = zero(level);
  e.c[0] = v % p_;
  return e;
}

FFElement TowerField::from_int(unsigned level, const Integer& v) const {
  return from_residue(level, mpz_fdiv_ui(v.get_mpz_t(), p_));
}

FFElement TowerField::generator(unsigned level) const {
  if (level == 0) fail(Errc::InvariantViolation, "F_p has no tower generator");
  FFElement e = zero(level);
  if (degree_at(level - 1) == 1) {
    // y = -psi(0) in a degree-one extension
    const FFElement& c0 = chain_[level - 1].coeffs[0];
    FFElement v = neg(c0);
    std::copy(v.c.begin(), v.c.end(), e.c.begin());
    return e;
  }
  e.c[dims_[level - 1]] = 1;
  return e;
}

FFElement TowerField::embed(const FFElement& a, unsigned level) const {
  check(a);
  if (level < a.level) fail(Errc::InvariantViolation, "cannot embed downwards");
  FFElement e = zero(level);
  std::copy(a.c.begin(), a.c.end(), e.c.begin());
  return e;
}

bool TowerField::lies_in(const FFElement& a, unsigned lower) const {
  check(a);
  if (lower >= a.level) return true;
  return all_zero(a.c.data() + dims_[lower], a.c.size() - dims_[lower]);
}

FFElement TowerField::project(const FFElement& a, unsigned lower) const {
  if (!lies_in(a, lower)) fail(Errc::InvariantViolation, "element is not in the requested subfield");
  return FFElement{lower, std::vector<Residue>(a.c.begin(), a.c.begin() + dims_[lower])};
}

std::vector<FFElement> TowerField::split(const FFElement& a) const {
  check(a);
  if (a.level == 0) fail(Errc::InvariantViolation, "cannot split a base field element");
  std::size_t bl = dims_[a.level - 1];
  unsigned f = degree_at(a.level - 1);
  std::vector<FFElement> out(f);
  for (unsigned i = 0; i < f; ++i)
    out[i] = FFElement{a.level - 1, std::vector<Residue>(a.c.begin() + i * bl, a.c.begin() + (i + 1) * bl)};
  return out;
}

FFElement TowerField::join(unsigned level, const std::vector<FFElement>& parts) const {
  FFElement e = zero(level);
  std::size_t bl = dims_.at(level - 1);
  if (parts.size() > degree_at(level - 1)) fail(Errc::InvariantViolation, "too many coordinates");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    FFElement q = embed(parts[i], level - 1);
    std::copy(q.c.begin(), q.c.end(), e.c.begin() + i * bl);
  }
  return e;
}

bool TowerField::is_zero(const FFElement& a) const { return all_zero(a.c.data(), a.c.size()); }

bool TowerField::is_one(const FFElement& a) const {
  return !a.c.empty() && a.c[0] == 1 && all_zero(a.c.data() + 1, a.c.size() - 1);
}

FFElement TowerField::add(const FFElement& a, const FFElement& b) const {
  if (a.level != b.level) return add(embed(a, std::max(a.level, b.level)), embed(b, std::max(a.level, b.level)));
  FFElement r = a;
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = addmod(r.c[i], b.c[i], p_);
  return r;
}

FFElement TowerField::sub(const FFElement& a, const FFElement& b) const {
  if (a.level != b.level) return sub(embed(a, std::max(a.level, b.level)), embed(b, std::max(a.level, b.level)));
  FFElement r = a;
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = submod(r.c[i], b.c[i], p_);
  return r;
}

FFElement TowerField::neg(const FFElement& a) const {
  FFElement r = a;
  for (auto& v : r.c) v = v ? p_ - v : 0;
  return r;
}

void TowerField::mul_raw(unsigned level, const Residue* a, const Residue* b, Residue* out) const {
  if (level == 0) {
    out[0] = mulmod(a[0], b[0], p_);
    return;
  }
  const unsigned f = degree_at(level - 1);
  const std::size_t bl = dims_[level - 1];
  const auto& psi = chain_[level - 1].coeffs;
  std::vector<Residue> tmp((2 * f - 1) * bl, 0), prod(bl);
  std::vector<char> az(f), bz(f);
  for (unsigned i = 0; i < f; ++i) {
    az[i] = all_zero(a + i * bl, bl);
    bz[i] = all_zero(b + i * bl, bl);
  }
  for (unsigned i = 0; i < f; ++i) {
    if (az[i]) continue;
    for (unsigned j = 0; j < f; ++j) {
      if (bz[j]) continue;
      if (bl == 1) {
        Residue& t = tmp[i + j];
        t = addmod(t, mulmod(a[i], b[j], p_), p_);
        continue;
      }
      mul_raw(level - 1, a + i * bl, b + j * bl, prod.data());
      Residue* t = tmp.data() + (i + j) * bl;
      for (std::size_t k = 0; k < bl; ++k) t[k] = addmod(t[k], prod[k], p_);
    }
  }
  for (unsigned t = 2 * f - 1; t-- > f;) {
    Residue* c = tmp.data() + t * bl;
    if (all_zero(c, bl)) continue;
    for (unsigned j = 0; j < f; ++j) {
      const Residue* pj = psi[j].c.data();
      Residue* dst = tmp.data() + (t - f + j) * bl;
      if (bl == 1) {
        dst[0] = submod(dst[0], mulmod(c[0], pj[0], p_), p_);
        continue;
      }
      if (all_zero(pj, bl)) continue;
      mul_raw(level - 1, c, pj, prod.data());
      for (std::size_t k = 0; k < bl; ++k) dst[k] = submod(dst[k], prod[k], p_);
    }
  }
  std::copy(tmp.begin(), tmp.begin() + f * bl, out);
}

FFElement TowerField::mul(const FFElement& a, const FFElement& b) const {
  if (a.level != b.level) return mul(embed(a, std::max(a.level, b.level)), embed(b, std::max(a.level, b.level)));
  check(a);
  check(b);
  FFElement r = zero(a.level);
  mul_raw(a.level, a.c.data(), b.c.data(), r.c.data());
  return r;
}

FFElement TowerField::inv(const FFElement& a) const {
  check(a);
  if (is_zero(a)) fail(Errc::DivisionByZero, "inverse of zero");
  if (a.level == 0) return FFElement{0, {invmod(a.c[0], p_)}};
  unsigned k = a.level;
  FFPolynomial A = poly(k - 1, split(a));
  auto [g, s, t] = pxgcd(A, chain_[k - 1]);
  (void)t;
  if (g.degree() != 0) fail(Errc::DivisionByZero, "element not invertible (modulus reducible?)");
  return join(k, s.coeffs);
}

FFElement TowerField::pow(const FFElement& a, const mpz_class& e) const {
  if (sgn(e) < 0) return pow(inv(a), mpz_class(-e));
  FFElement r = one(a.level);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (sgn(e) == 0) return r;
  for (std::size_t i = bits; i-- > 0;) {
    r = mul(r, r);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, a);
  }
  return r;
}

FFElement TowerField::pth_root(const FFElement& a) const {
  std::size_t n = dim(a.level);
  if (n == 1) return a;
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), p_, n - 1);
  return pow(a, e);
}

FFElement TowerField::random(unsigned level, std::mt19937_64& rng) const {
  std::uniform_int_distribution<Residue> dist(0, p_ - 1);
  FFElement e = zero(level);
  for (auto& v : e.c) v = dist(rng);
  return e;
}

std::string TowerField::to_string(const FFElement& a) const {
  if (a.c.size() == 1) return std::to_string(a.c[0]);
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < a.c.size(); ++i) os << (i ? "," : "") << a.c[i];
  os << ']';
  return os.str();
}

// ---- polynomials

FFPolynomial TowerField::trimmed(FFPolynomial a) const {
  while (!a.coeffs.empty() && is_zero(a.coeffs.back())) a.coeffs.pop_back();
  return a;
}

FFPolynomial TowerField::poly(unsigned level, std::vector<FFElement> coeffs) const {
  for (auto& c : coeffs) {
    if (c.level < level) c = embed(c, level);
    if (c.level != level) fail(Errc::InvariantViolation, "coefficient above polynomial level");
  }
  return trimmed(FFPolynomial{level, std::move(coeffs)});
}

FFPolynomial TowerField::poly_from_residues(const std::vector<Residue>& coeffs) const {
  FFPolynomial r{0, {}};
  for (Residue v : coeffs) r.coeffs.push_back(FFElement{0, {v % p_}});
  return trimmed(std::move(r));
}

FFPolynomial TowerField::y(unsigned level) const { return FFPolynomial{level, {zero(level), one(level)}}; }

FFPolynomial TowerField::constant(const FFElement& a) const { return trimmed(FFPolynomial{a.level, {a}}); }

FFPolynomial TowerField::padd(const FFPolynomial& a, const FFPolynomial& b) const {
  FFPolynomial r = a.coeffs.size() >= b.coeffs.size() ? a : b;
  const FFPolynomial& s = a.coeffs.size() >= b.coeffs.size() ? b : a;
  if (r.coeffs.empty()) r.level = std::max(a.level, b.level);
  for (std::size_t i = 0; i < s.coeffs.size(); ++i) r.coeffs[i] = add(r.coeffs[i], s.coeffs[i]);
  return trimmed(std::move(r));
}

FFPolynomial TowerField::psub(const FFPolynomial& a, const FFPolynomial& b) const {
  FFPolynomial nb = b;
  for (auto& c : nb.coeffs) c = neg(c);
  if (nb.coeffs.empty()) nb.level = b.level;
  return padd(a, nb);
}

FFPolynomial TowerField::pmul(const FFPolynomial& a, const FFPolynomial& b) const {
  if (a.is_zero() || b.is_zero()) return FFPolynomial{std::max(a.level, b.level), {}};
  unsigned lev = a.level;
  if (a.level != b.level) fail(Errc::InvariantViolation, "polynomial level mismatch");
  std::vector<FFElement> r(a.coeffs.size() + b.coeffs.size() - 1, zero(lev));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (is_zero(a.coeffs[i])) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) r[i + j] = add(r[i + j], mul(a.coeffs[i], b.coeffs[j]));
  }
  return trimmed(FFPolynomial{lev, std::move(r)});
}

FFPolynomial TowerField::pscale(const FFPolynomial& a, const FFElement& k) const {
  FFPolynomial r = a;
  for (auto& c : r.coeffs) c = mul(c, k);
  return trimmed(std::move(r));
}

std::pair<FFPolynomial, FFPolynomial> TowerField::pdivmod(const FFPolynomial& a, const FFPolynomial& b) const {
  if (b.is_zero()) fail(Errc::ZeroPolynomial, "polynomial division by zero");
  unsigned lev = b.level;
  if (a.degree() < b.degree()) return {FFPolynomial{lev, {}}, a};
  std::vector<FFElement> r = a.coeffs;
  const std::size_t db = b.coeffs.size() - 1;
  FFElement inv_lead = inv(b.lead());
  bool monic = is_one(b.lead());
  std::vector<FFElement> q(r.size() - db, zero(lev));
  for (std::size_t k = r.size(); k-- > db;) {
    if (is_zero(r[k])) continue;
    FFElement t = monic ? r[k] : mul(r[k], inv_lead);
    for (std::size_t j = 0; j < db; ++j)
      if (!is_zero(b.coeffs[j])) r[k - db + j] = sub(r[k - db + j], mul(t, b.coeffs[j]));
    q[k - db] = std::move(t);
    r[k] = zero(lev);
  }
  r.resize(db);
  return {trimmed(FFPolynomial{lev, std::move(q)}), trimmed(FFPolynomial{lev, std::move(r)})};
}

FFPolynomial TowerField::pmonic(const FFPolynomial& a) const {
  if (a.is_zero() || is_one(a.lead())) return a;
  return pscale(a, inv(a.lead()));
}

FFPolynomial TowerField::pgcd(const FFPolynomial& a0, const FFPolynomial& b0) const {
  FFPolynomial a = a0, b = b0;
  while (!b.is_zero()) {
    FFPolynomial r = prem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return pmonic(a);
}

std::tuple<FFPolynomial, FFPolynomial, FFPolynomial> TowerField::pxgcd(const FFPolynomial& a,
                                                                       const FFPolynomial& b) const {
  unsigned lev = std::max(a.level, b.level);
  FFPolynomial r0 = a, r1 = b;
  FFPolynomial s0 = constant(one(lev)), s1{lev, {}};
  FFPolynomial t0{lev, {}}, t1 = constant(one(lev));
  while (!r1.is_zero()) {
    auto [q, r] = pdivmod(r0, r1);
    FFPolynomial s2 = psub(s0, pmul(q, s1));
    FFPolynomial t2 = psub(t0, pmul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  FFElement il = inv(r0.lead());
  return {pscale(r0, il), pscale(s0, il), pscale(t0, il)};
}

FFPolynomial TowerField::pderivative(const FFPolynomial& a) const {
  if (a.coeffs.size() <= 1) return FFPolynomial{a.level, {}};
  std::vector<FFElement> d;
  for (std::size_t i = 1; i < a.coeffs.size(); ++i) d.push_back(mul(a.coeffs[i], from_residue(a.level, i % p_)));
  return trimmed(FFPolynomial{a.level, std::move(d)});
}

FFPolynomial TowerField::ppowmod(const FFPolynomial& base, const mpz_class& e, const FFPolynomial& mod) const {
  FFPolynomial r = prem(constant(one(mod.level)), mod);
  FFPolynomial b = prem(base, mod);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (sgn(e) == 0) return r;
  for (std::size_t i = bits; i-- > 0;) {
    r = prem(pmul(r, r), mod);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = prem(pmul(r, b), mod);
  }
  return r;
}

FFPolynomial TowerField::ppow(const FFPolynomial& base, unsigned long e) const {
  FFPolynomial r = constant(one(base.level));
  FFPolynomial b = base;
  while (e) {
    if (e & 1) r = pmul(r, b);
    e >>= 1;
    if (e) b = pmul(b, b);
  }
  return r;
}

FFElement TowerField::evaluate(const FFPolynomial& a, const FFElement& x) const {
  if (x.level < a.level) return evaluate(a, embed(x, a.level));
  FFElement acc = zero(x.level);
  for (std::size_t i = a.coeffs.size(); i-- > 0;) acc = add(mul(acc, x), embed(a.coeffs[i], x.level));
  return acc;
}

FFPolynomial TowerField::embed_poly(const FFPolynomial& a, unsigned level) const {
  FFPolynomial r{level, {}};
  for (const auto& c : a.coeffs) r.coeffs.push_back(embed(c, level));
  return r;
}

FFPolynomial TowerField::random_poly(unsigned level, long degree, std::mt19937_64& rng, bool monic) const {
  FFPolynomial r{level, {}};
  for (long i = 0; i <= degree; ++i) r.coeffs.push_back(random(level, rng));
  if (monic && degree >= 0) r.coeffs.back() = one(level);
  return trimmed(std::move(r));
}

std::string TowerField::to_string(const FFPolynomial& a) const {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = a.coeffs.size(); i-- > 0;) {
    if (is_zero(a.coeffs[i])) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || !is_one(a.coeffs[i])) os << to_string(a.coeffs[i]);
    if (i > 0) os << (is_one(a.coeffs[i]) ? "" : "*") << "y" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return os.str();
}

FFPolynomial TowerField::frobenius_power(const FFPolynomial& h, const FFPolynomial& mod) const {
  FFPolynomial r = prem(h, mod);
  mpz_class pp(static_cast<unsigned long>(p_));
  if (p_ > 0xffffffffULL) mpz_import(pp.get_mpz_t(), 1, -1, sizeof(Residue), 0, 0, &p_);
  for (std::size_t i = 0; i < dim(mod.level); ++i) r = ppowmod(r, pp, mod);
  return r;
}

bool TowerField::is_irreducible(const FFPolynomial& a) const {
  if (a.degree() < 1) fail(Errc::DegreeTooSmall, "irreducibility of a constant");
  FFPolynomial m = pmonic(a);
  long n = m.degree();
  if (n == 1) return true;
  std::vector<long> primes;
  long t = n;
  for (long q = 2; q * q <= t; ++q)
    if (t % q == 0) {
      primes.push_back(q);
      while (t % q == 0) t /= q;
    }
  if (t > 1) primes.push_back(t);
  // hs[k] = y^(Q^k) mod m
  FFPolynomial Y = y(m.level);
  std::vector<FFPolynomial> hs{prem(Y, m)};
  for (long k = 1; k <= n; ++k) hs.push_back(frobenius_power(hs.back(), m));
  if (!psub(hs[n], prem(Y, m)).is_zero()) return false;
  for (long q : primes) {
    FFPolynomial g = pgcd(psub(hs[n / q], Y), m);
    if (g.degree() != 0) return false;
  }
  return true;
}

std::vector<std::pair<FFPolynomial, unsigned>> TowerField::squarefree(const FFPolynomial& f) const {
  std::vector<std::pair<FFPolynomial, unsigned>> out;
  if (f.degree() < 1) return out;
  FFPolynomial c = pgcd(f, pderivative(f));
  FFPolynomial w = pquo(f, c);
  unsigned i = 1;
  while (w.degree() > 0) {
    FFPolynomial yv = pgcd(w, c);
    FFPolynomial fac = pquo(w, yv);
    if (fac.degree() > 0) out.emplace_back(pmonic(fac), i);
    w = yv;
    c = pquo(c, yv);
    ++i;
  }
  if (c.degree() > 0) {
    // c is a p-th power
    FFPolynomial root{c.level, {}};
    for (std::size_t k = 0; k < c.coeffs.size(); k += p_) root.coeffs.push_back(pth_root(c.coeffs[k]));
    root = trimmed(std::move(root));
    for (auto& [g, m] : squarefree(root)) out.emplace_back(g, m * static_cast<unsigned>(p_));
  }
  return out;
}

std::vector<std::pair<FFPolynomial, unsigned>> TowerField::distinct_degree(FFPolynomial g) const {
  std::vector<std::pair<FFPolynomial, unsigned>> out;
  FFPolynomial Y = y(g.level);
  FFPolynomial h = prem(Y, g);
  for (unsigned d = 1; 2 * static_cast<long>(d) <= g.degree(); ++d) {
    h = frobenius_power(h, g);
    FFPolynomial u = pgcd(g, psub(h, Y));
    if (u.degree() > 0) {
      out.emplace_back(u, d);
      g = pquo(g, u);
      h = prem(h, g);
    }
  }
  if (g.degree() > 0) out.emplace_back(pmonic(g), static_cast<unsigned>(g.degree()));
  return out;
}

void TowerField::equal_degree(const FFPolynomial& a, unsigned d, std::mt19937_64& rng,
                              std::vector<FFPolynomial>& out) const {
  if (a.degree() == static_cast<long>(d)) {
    out.push_back(a);
    return;
  }
  const std::size_t n = dim(a.level);
  mpz_class e;
  if (p_ != 2) {
    mpz_ui_pow_ui(e.get_mpz_t(), p_, n * d);
    e = (e - 1) / 2;
  }
  for (;;) {
    FFPolynomial r = random_poly(a.level, a.degree() - 1, rng, false);
    if (r.degree() < 1) continue;
    FFPolynomial b;
    if (p_ != 2) {
      b = psub(ppowmod(r, e, a), constant(one(a.level)));
    } else {
      FFPolynomial t = prem(r, a);
      b = t;
      for (std::size_t i = 1; i < n * d; ++i) {
        t = prem(pmul(t, t), a);
        b = padd(b, t);
      }
    }
    FFPolynomial g = pgcd(b, a);
    if (g.degree() > 0 && g.degree() < a.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(pmonic(pquo(a, g)), d, rng, out);
      return;
    }
  }
}

FFFactorization TowerField::factor(const FFPolynomial& a, std::uint64_t seed) const {
  if (a.is_zero()) fail(Errc::ZeroPolynomial, "factor of zero polynomial");
  FFFactorization res;
  res.unit = a.lead();
  FFPolynomial m = pmonic(a);
  std::mt19937_64 rng(seed ^ fnv(m));
  for (auto& [s, mult] : squarefree(m)) {
    for (auto& [g, d] : distinct_degree(s)) {
      std::vector<FFPolynomial> parts;
      equal_degree(g, d, rng, parts);
      for (auto& q : parts) res.factors.push_back(FFFactor{std::move(q), mult});
    }
  }
  std::sort(res.factors.begin(), res.factors.end(),
            [](const FFFactor& x, const FFFactor& y) { return ff_poly_less(x.poly, y.poly); });
  return res;
}

std::vector<FFElement> TowerField::roots(const FFPolynomial& a, std::uint64_t seed) const {
  std::vector<FFElement> out;
  for (const auto& fac : factor(a, seed).factors)
    if (fac.poly.degree() == 1) out.push_back(neg(fac.poly.coeffs[0]));
  std::sort(out.begin(), out.end(), [](const FFElement& x, const FFElement& y) { return x.c < y.c; });
  return out;
}

FFPolynomial reduce_mod_p(const IntPolynomial& a, Residue p) {
  std::vector<Residue> v;
  v.reserve(a.size());
  for (const auto& c : a.coeffs()) {
    if (p <= 0xffffffffULL) {
      v.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
    } else {
      mpz_class pp, r;
      mpz_import(pp.get_mpz_t(), 1, -1, sizeof(Residue), 0, 0, &p);
      mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), pp.get_mpz_t());
      Residue out = 0;
      mpz_export(&out, nullptr, -1, sizeof(Residue), 0, 0, r.get_mpz_t());
      v.push_back(out);
    }
  }
  return TowerField(p).poly_from_residues(v);
}

IntPolynomial lift_residues(const FFPolynomial& a) {
  if (a.level != 0) fail(Errc::InvariantViolation, "lift_residues needs a level-0 polynomial");
  std::vector<Integer> v;
  for (const auto& c : a.coeffs) {
    Integer z;
    mpz_import(z.get_mpz_t(), 1, -1, sizeof(Residue), 0, 0, &c.c[0]);
    v.push_back(z);
  }
  return IntPolynomial(std::move(v));
}

bool ff_poly_less(const FFPolynomial& a, const FFPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    if (a.coeffs[i].c != b.coeffs[i].c) return a.coeffs[i].c < b.coeffs[i].c;
  return false;
}

}  // namespace montes

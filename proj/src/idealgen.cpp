#include "montes/idealgen.hpp"

#include <algorithm>
#include <functional>

#include "montes/error.hpp"

namespace montes {

FieldElement make_element(const IntPolynomial& num, const Integer& den, const IntPolynomial& f) {
  if (sgn(den) == 0) fail(Errc::DivisionByZero, "zero denominator");
  IntPolynomial n = num.degree() >= f.degree() ? rem(num, f) : num;
  Integer d = den;
  if (sgn(d) < 0) {
    d = -d;
    n = -n;
  }
  if (n.is_zero()) return FieldElement{n, 1};
  Integer g = content(n);
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
  if (g != 1) {
    n = exact_div(n, g);
    mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), g.get_mpz_t());
  }
  return FieldElement{std::move(n), std::move(d)};
}

FieldElement field_mul(const FieldElement& a, const FieldElement& b, const IntPolynomial& f) {
  return make_element(rem(a.num * b.num, f), a.den * b.den, f);
}

FieldElement field_pow(const FieldElement& a, unsigned long n, const IntPolynomial& f) {
  FieldElement r{IntPolynomial{1}, 1};
  FieldElement b = a;
  while (n) {
    if (n & 1) r = field_mul(r, b, f);
    n >>= 1;
    if (n) b = field_mul(b, b, f);
  }
  return r;
}

FieldElement field_inv(const FieldElement& a, const IntPolynomial& f) {
  if (a.num.is_zero()) fail(Errc::NotInvertible, "inverse of zero");
  RatXgcd x = xgcd_rat(RatPolynomial(a.num), RatPolynomial(f));
  if (x.g.degree() != 0) fail(Errc::NotInvertible, "element shares a factor with f");
  auto [num, den] = x.s.split_denominator();
  // s = 1/num(theta), so a^-1 = den_a * s
  return make_element(num * a.den, den, f);
}

std::optional<std::int64_t> side_height(const Type& rt, ExpansionCache& cache) {
  const unsigned k = rt.depth();
  auto parts = cache.prefix(rt.pending_phi(), 2);
  if (parts[0].is_zero()) return std::nullopt;
  NewtonData nd = newton_from_expansion(rt, k, parts);
  if (nd.principal.sides.size() != 1 || nd.principal.end_x() != 1)
    fail(Errc::InvariantViolation, "complete type without a single side of length one");
  return nd.principal.sides[0].H;
}

IntPolynomial ensure_H1(const Type& rt, ExpansionCache& cache, const Options& opt) {
  (void)opt;
  auto H = side_height(rt, cache);
  if (H && *H == 1) return rt.pending_phi();
  const unsigned r = rt.depth() - 1;
  const Level& top = rt.level(r + 1);
  const TowerField& K = rt.tower();
  IntPolynomial P = lift_prescribed(rt, r, top.V + 1, {K.one(r)});
  IntPolynomial phi = rt.pending_phi() + P;
  auto H2 = side_height(rt.with_pending_phi(phi), cache);
  if (!H2 || *H2 != 1) fail(Errc::InvariantViolation, "tweaked representative does not reach H = 1");
  return phi;
}

FieldElement beta(const Type& rt, const IntPolynomial& phi_tilde, const IntPolynomial& f) {
  FieldElement num = make_element(phi_tilde, 1, f);
  const unsigned r = rt.depth() - 1;
  if (r == 0) return num;
  const Level& L = rt.level(r);
  IntPolynomial D = rem(pow(L.phi, static_cast<unsigned long>(L.e * static_cast<std::int64_t>(L.f))), f);
  return field_mul(num, field_inv(FieldElement{D, 1}, f), f);
}

std::int64_t v_q_beta(const std::vector<CompleteRecord>& primes, std::size_t p, std::size_t q) {
  const CompleteRecord& rp = primes.at(p);
  const CompleteRecord& rq = primes.at(q);
  if (rp.lineage.empty()) {
    if (!rp.dedekind) fail(Errc::MissingDominatorData, "prime without lineage");
    return 0;
  }
  const Dominator* dom = nullptr;
  for (const auto& d : rp.dominators)
    if (d.index == q) dom = &d;
  if (!dom) return 0;
  const BranchTag& last = rp.lineage.back();
  const unsigned r = last.level;
  const Level& Lr = rp.type.level(r);
  std::int64_t eq = 1;
  for (unsigned i = r; i <= rq.type.depth(); ++i)
    if (rq.type.level(i).closed()) eq = checked_mul(eq, rq.type.level(i).e);
  // e_r f_r * eq * (lambda_q - lambda_r), lambda = -h/e
  const Slope& sq = dom->slope;
  const Slope& sp = last.slope;
  std::int64_t num = checked_mul(checked_mul(checked_mul(Lr.e, Lr.f), eq), sp.h * sq.e - sq.h * sp.e);
  std::int64_t den = sp.e * sq.e;
  if (num % den != 0) fail(Errc::InvariantViolation, "non-integral cross valuation");
  return num / den;
}

std::int64_t value_at_prime(const Type& rt, const IntPolynomial& P0, ExpansionCache& cache) {
  const IntPolynomial& f = cache.poly();
  IntPolynomial P = P0.degree() >= f.degree() ? rem(P0, f) : P0;
  if (P.is_zero()) fail(Errc::ZeroAtTheta, "P vanishes at theta");
  const unsigned k = rt.depth();
  Type cur = rt;
  for (int step = 0; step < 1000000; ++step) {
    const TowerField& K = cur.tower();
    const IntPolynomial& phi = cur.pending_phi();
    auto fparts = cache.prefix(phi, 2);
    if (fparts[0].is_zero()) {
      // theta is a root of phi itself
      IntPolynomial Q = rem(P, phi);
      if (Q.is_zero()) fail(Errc::ZeroAtTheta, "P vanishes at theta");
      return eval_coefficient(cur, k, Q).v;
    }
    NewtonData nf = newton_from_expansion(cur, k, fparts);
    if (nf.principal.sides.size() != 1 || nf.principal.end_x() != 1)
      fail(Errc::InvariantViolation, "value_at_prime needs a complete type");
    const Side& side = nf.principal.sides[0];
    const std::int64_t H = side.H;
    NewtonData np = newton(cur, k, P);
    std::int64_t Y = np.points.front().y;
    for (const auto& q : np.points) Y = std::min(Y, q.y + H * q.x);
    // residual polynomial of P along slope -H
    std::vector<FFElement> R;
    std::int64_t s = -1;
    for (std::size_t n = 0; n < np.points.size(); ++n) {
      const PPoint& q = np.points[n];
      if (q.y + H * q.x != Y) continue;
      if (s < 0) s = q.x;
      std::size_t idx = static_cast<std::size_t>(q.x - s);
      if (R.size() <= idx) R.resize(idx + 1, K.zero(k));
      R[idx] = np.coeff[n];
    }
    // eta: root of the residual polynomial c0 + c1 y of f
    FFElement c0, c1;
    for (std::size_t n = 0; n < nf.points.size(); ++n) {
      if (nf.points[n].x == 0) c0 = nf.coeff[n];
      if (nf.points[n].x == 1) c1 = nf.coeff[n];
    }
    FFElement eta = K.neg(K.div(c0, c1));
    FFPolynomial RP = K.poly(k, R);
    if (!K.is_zero(K.evaluate(RP, eta))) return Y;
    FFPolynomial psi = K.poly(k, {K.neg(eta), K.one(k)});
    Type closed = cur.closed_with(Slope{H, 1}, psi);
    cur = cur.refined(representative(closed), H);
  }
  fail(Errc::InvariantViolation, "value_at_prime did not stabilise");
}

std::int64_t value_at_prime(const Type& rt, const FieldElement& a, ExpansionCache& cache) {
  std::int64_t e = rt.ram_index();
  std::int64_t v = value_at_prime(rt, a.num, cache);
  return v - checked_mul(e, static_cast<std::int64_t>(pval(a.den, rt.prime())));
}

FieldElement finalize_alpha(const FieldElement& tilde, const Integer& p) {
  unsigned long k = pval(tilde.den, p);
  return FieldElement{tilde.num, ipow(p, k)};
}

GeneratorData compute_generators(RunResult& res, ExpansionCache& cache, const Options& opt) {
  auto& primes = res.primes;
  const IntPolynomial& f = res.f;
  const std::size_t n = primes.size();
  GeneratorData gd;
  gd.rep_types.resize(n);
  gd.betas.resize(n);
  gd.tilde.resize(n);
  gd.alphas.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    CompleteRecord& rec = primes[i];
    gd.rep_types[i] = representative_type(rec, cache, opt);
    if (rec.dedekind && rec.dedekind_mult >= 2) {
      // phi_1(theta) already has valuation one
      rec.tweaked_phi = rec.type.pending_phi();
      gd.betas[i] = make_element(rec.type.pending_phi(), 1, f);
      continue;
    }
    IntPolynomial phi = ensure_H1(gd.rep_types[i], cache, opt);
    rec.tweaked_phi = phi;
    gd.rep_types[i] = gd.rep_types[i].with_pending_phi(phi);
    gd.betas[i] = beta(gd.rep_types[i], phi, f);
  }
  // dominators first
  std::vector<int> state(n, 0);
  std::vector<std::size_t> order;
  std::function<void(std::size_t)> visit = [&](std::size_t i) {
    if (state[i] == 2) return;
    if (state[i] == 1) fail(Errc::InvariantViolation, "cyclic domination");
    state[i] = 1;
    for (const auto& d : primes[i].dominators) visit(d.index);
    state[i] = 2;
    order.push_back(i);
  };
  for (std::size_t i = 0; i < n; ++i) visit(i);
  for (std::size_t i : order) {
    FieldElement a = gd.betas[i];
    for (const auto& d : primes[i].dominators) {
      std::int64_t v = v_q_beta(primes, i, d.index);
      if (v > 0) fail(Errc::InvariantViolation, "dominating valuation must be non-positive");
      if (v < 0) a = field_mul(a, field_pow(gd.tilde[d.index], static_cast<unsigned long>(-v), f), f);
    }
    gd.tilde[i] = a;
    gd.alphas[i] = finalize_alpha(a, res.p);
    primes[i].generator = Generator{gd.alphas[i].num, pval(gd.alphas[i].den, res.p)};
  }
  return gd;
}

}  // namespace montes

#include "montes/types.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <numeric>
#include <sstream>

#include "montes/error.hpp"

namespace montes {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t exact_quot(std::int64_t a, std::int64_t b, const char* what) {
  if (b == 0 || a % b != 0) fail(Errc::InvariantViolation, what);
  return a / b;
}

// inverse of h modulo e in [0, e), e >= 2
std::int64_t inverse_mod(std::int64_t h, std::int64_t e) {
  std::int64_t t = 0, nt = 1, r = e, nr = floor_mod(h, e);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) fail(Errc::InvariantViolation, "slope numerator and denominator are not coprime");
  return floor_mod(t, e);
}

}  // namespace

Type Type::order_zero(Residue p, const FFPolynomial& psi0, const IntPolynomial& phi1) {
  Type t;
  t.tower_ = TowerField(p).extend(psi0);
  t.prime_ = Integer(static_cast<unsigned long>(p));
  return t.opened_with(phi1);
}

unsigned Type::order() const {
  unsigned r = 0;
  for (const auto& L : levels_)
    if (L.closed()) ++r;
  return r;
}

const IntPolynomial& Type::pending_phi() const {
  if (!has_pending()) fail(Errc::InvariantViolation, "type has no pending representative");
  return levels_.back().phi;
}

std::int64_t Type::ram_index() const {
  std::int64_t e = 1;
  for (const auto& L : levels_)
    if (L.closed()) e = checked_mul(e, L.e);
  return e;
}

std::int64_t Type::residue_degree() const {
  std::int64_t f = f0();
  for (const auto& L : levels_)
    if (L.closed()) f = checked_mul(f, L.f);
  return f;
}

Type Type::closed_with(const Slope& s, const FFPolynomial& psi) const {
  if (!has_pending()) fail(Errc::InvariantViolation, "no open level to close");
  if (s.e < 1 || s.h < 1 || std::gcd(s.h, s.e) != 1) fail(Errc::InvariantViolation, "bad slope");
  const unsigned k = depth();
  if (psi.level != k) fail(Errc::InvariantViolation, "residual factor lives over the wrong field");
  if (psi.degree() == 1 && tower_.is_zero(psi.coeffs[0])) fail(Errc::ForbiddenResidualY, "psi = y");
  Type t = *this;
  Level& L = t.levels_.back();
  L.h = s.h;
  L.e = s.e;
  if (s.e == 1) {
    L.ell = 0;
    L.ell_prime = -1;
  } else {
    L.ell = inverse_mod(s.h, s.e);
    L.ell_prime = (L.ell * s.h - 1) / s.e;
  }
  L.psi = psi;
  L.f = static_cast<unsigned>(psi.degree());
  t.tower_ = tower_.extend(psi);
  return t;
}

Type Type::opened_with(const IntPolynomial& phi) const {
  if (has_pending()) fail(Errc::InvariantViolation, "top level is already open");
  if (!phi.is_monic()) fail(Errc::NonMonicModulus, "representative must be monic");
  const unsigned k = depth() + 1;
  Level L;
  L.phi = phi;
  long expected;
  if (k == 1) {
    expected = f0();
    L.V = 0;
    L.eps = tower_.one(1);
  } else {
    const Level& P = levels_.back();
    expected = P.e * static_cast<long>(P.f) * P.phi.degree();
    L.V = checked_mul(checked_mul(P.e, P.f), checked_add(checked_mul(P.e, P.V), P.h));
    std::int64_t ex = -checked_mul(P.ell, L.V / P.e);
    L.eps = tower_.pow(tower_.generator(k), ex);
  }
  if (phi.degree() != expected) fail(Errc::InvariantViolation, "representative has the wrong degree");
  Type t = *this;
  t.levels_.push_back(std::move(L));
  return t;
}

Type Type::refined(const IntPolynomial& phi_new, std::int64_t h) const {
  if (!has_pending()) fail(Errc::InvariantViolation, "refine needs an open level");
  if (phi_new.degree() != levels_.back().phi.degree())
    fail(Errc::RefineDegreeMismatch, "refined representative must keep the degree");
  if (h < 1) fail(Errc::InvariantViolation, "cutting slope must be positive");
  Type t = *this;
  t.levels_.back().phi = phi_new;
  t.levels_.back().cutH = h;
  return t;
}

Type Type::with_pending_phi(const IntPolynomial& phi) const {
  if (!has_pending()) fail(Errc::InvariantViolation, "no open level");
  if (phi.degree() != levels_.back().phi.degree() || !phi.is_monic())
    fail(Errc::RefineDegreeMismatch, "replacement representative must keep the degree");
  Type t = *this;
  t.levels_.back().phi = phi;
  return t;
}

std::string Type::to_string() const {
  std::ostringstream os;
  os << "psi0=" << tower_.to_string(psi0());
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const Level& L = levels_[i];
    os << "; phi" << i + 1 << "=" << L.phi.to_string();
    if (L.cutH) os << " [H=" << L.cutH << "]";
    if (L.closed()) os << ", " << L.slope().to_string() << ", psi=" << tower_.to_string(L.psi);
  }
  return os.str();
}

std::int64_t value(const Type& t, unsigned k, const IntPolynomial& P) {
  if (P.is_zero()) fail(Errc::ZeroPolynomial, "value of zero");
  if (k == 1) return static_cast<std::int64_t>(vpoly(P, t.prime()));
  const Level& L = t.level(k - 1);
  if (!L.closed()) fail(Errc::InvariantViolation, "value needs the level below to be closed");
  auto parts = phi_expand(P, L.phi);
  std::int64_t best = kInf;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (parts[j].is_zero()) continue;
    std::int64_t u = value(t, k - 1, parts[j]) + static_cast<std::int64_t>(j) * L.V;
    best = std::min(best, checked_add(checked_mul(L.e, u), checked_mul(L.h, static_cast<std::int64_t>(j))));
  }
  return best;
}

CoeffEval eval_coefficient(const Type& t, unsigned k, const IntPolynomial& a) {
  if (a.is_zero()) fail(Errc::ZeroPolynomial, "residual coefficient of zero");
  const TowerField& K = t.tower();
  if (k == 1) {
    std::int64_t v = static_cast<std::int64_t>(vpoly(a, t.prime()));
    IntPolynomial b = v ? exact_div(a, ipow(t.prime(), v)) : a;
    FFPolynomial r = K.prem(reduce_mod_p(b, t.p()), t.psi0());
    return {v, K.join(1, r.coeffs)};
  }
  const Level& L = t.level(k - 1);
  auto parts = phi_expand(a, L.phi);
  std::vector<CoeffEval> ev(parts.size());
  std::int64_t best = kInf;
  std::vector<std::int64_t> val(parts.size(), kInf);
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (parts[j].is_zero()) continue;
    ev[j] = eval_coefficient(t, k - 1, parts[j]);
    std::int64_t u = ev[j].v + static_cast<std::int64_t>(j) * L.V;
    val[j] = checked_add(checked_mul(L.e, u), checked_mul(L.h, static_cast<std::int64_t>(j)));
    best = std::min(best, val[j]);
  }
  std::size_t s = 0;
  while (val[s] != best) ++s;
  std::vector<FFElement> R(L.f, K.zero(k - 1));
  for (std::size_t j = s; j < parts.size(); ++j) {
    if (val[j] != best) continue;
    std::size_t idx = (j - s) / static_cast<std::size_t>(L.e);
    if (idx >= L.f) fail(Errc::InvariantViolation, "coefficient degree exceeds m_k");
    R[idx] = K.mul(ev[j].c, K.pow(L.eps, static_cast<long>(j)));
  }
  std::int64_t t0 = exact_quot(static_cast<std::int64_t>(s) - checked_mul(L.ell, best), L.e, "twist exponent");
  FFElement c = K.mul(K.pow(K.generator(k), t0), K.join(k, R));
  return {best, std::move(c)};
}

NewtonData newton_from_expansion(const Type& t, unsigned k, const std::vector<IntPolynomial>& expansion,
                                 bool parallel) {
  const Level& L = t.level(k);
  const TowerField& K = t.tower();
  const long n = static_cast<long>(expansion.size());
  std::vector<std::optional<CoeffEval>> ev(expansion.size());
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic) if (parallel && n > 1)
  for (long i = 0; i < n; ++i) {
    if (expansion[i].is_zero()) continue;
    try {
      ev[i] = eval_coefficient(t, k, expansion[i]);
    } catch (...) {
#pragma omp critical
      err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  NewtonData nd;
  FFElement epow = K.one(k);
  for (long i = 0; i < n; ++i) {
    if (i) epow = K.mul(epow, L.eps);
    if (!ev[i]) continue;
    nd.points.push_back(PPoint{i, checked_add(ev[i]->v, checked_mul(i, L.V))});
    nd.coeff.push_back(K.mul(ev[i]->c, epow));
  }
  if (nd.points.empty()) fail(Errc::ZeroPolynomial, "newton polygon of zero");
  nd.hull = lower_hull(nd.points);
  nd.principal = principal(nd.hull);
  return nd;
}

NewtonData newton(const Type& t, unsigned k, const IntPolynomial& P) {
  if (P.is_zero()) fail(Errc::ZeroPolynomial, "newton polygon of zero");
  return newton_from_expansion(t, k, phi_expand(P, t.level(k).phi));
}

FFPolynomial residual_poly(const Type& t, unsigned k, const NewtonData& nd, const Side& side) {
  const TowerField& K = t.tower();
  std::vector<FFElement> R(static_cast<std::size_t>(side.d) + 1, K.zero(k));
  const std::int64_t e = side.slope.e;
  for (std::size_t n = 0; n < nd.points.size(); ++n) {
    const PPoint& q = nd.points[n];
    if (q.x < side.start.x || q.x > side.end.x) continue;
    std::int64_t dx = q.x - side.start.x;
    if (dx % e != 0) continue;
    // on the side iff the point sits on the line through start
    if (static_cast<__int128>(side.start.y - q.y) * side.E != static_cast<__int128>(dx) * side.H) continue;
    R[static_cast<std::size_t>(dx / e)] = nd.coeff[n];
  }
  if (K.is_zero(R.front()) || K.is_zero(R.back())) fail(Errc::PointOffPolygon, "side endpoints carry no point");
  return K.poly(k, std::move(R));
}

FFPolynomial residual_poly(const Type& t, unsigned k, const IntPolynomial& P, const Side& side) {
  return residual_poly(t, k, newton(t, k, P), side);
}

FFPolynomial residual_component(const Type& t, unsigned k, const IntPolynomial& P) {
  if (P.is_zero()) fail(Errc::ZeroPolynomial, "residual polynomial of zero");
  const TowerField& K = t.tower();
  if (k == 0) {
    std::int64_t v = static_cast<std::int64_t>(vpoly(P, t.prime()));
    IntPolynomial b = v ? exact_div(P, ipow(t.prime(), v)) : P;
    return reduce_mod_p(b, t.p());
  }
  const Level& L = t.level(k);
  if (!L.closed()) fail(Errc::InvariantViolation, "residual component needs a closed level");
  NewtonData nd = newton(t, k, P);
  std::int64_t best = kInf;
  for (const auto& q : nd.points) best = std::min(best, checked_add(checked_mul(L.e, q.y), checked_mul(L.h, q.x)));
  std::vector<FFElement> R;
  std::int64_t s = -1;
  for (std::size_t n = 0; n < nd.points.size(); ++n) {
    const PPoint& q = nd.points[n];
    if (L.e * q.y + L.h * q.x != best) continue;
    if (s < 0) s = q.x;
    std::size_t idx = static_cast<std::size_t>((q.x - s) / L.e);
    if (R.size() <= idx) R.resize(idx + 1, K.zero(k));
    R[idx] = nd.coeff[n];
  }
  return K.poly(k, std::move(R));
}

unsigned omega(const Type& t, unsigned k, const IntPolynomial& P) {
  if (k < 1) fail(Errc::InvariantViolation, "omega needs k >= 1");
  const TowerField& K = t.tower();
  FFPolynomial R = residual_component(t, k - 1, P);
  const FFPolynomial& psi = k == 1 ? t.psi0() : t.level(k - 1).psi;
  unsigned n = 0;
  if (R.is_zero()) fail(Errc::ZeroPolynomial, "omega of zero");
  for (;;) {
    auto [q, r] = K.pdivmod(R, psi);
    if (!r.is_zero()) break;
    R = std::move(q);
    ++n;
  }
  return n;
}

IntPolynomial lift_point(const Type& t, unsigned k, std::int64_t i, std::int64_t u, const FFElement& target) {
  const TowerField& K = t.tower();
  const Level& Lk = t.level(k);
  std::int64_t w = u - checked_mul(i, Lk.V);
  if (w < 0) fail(Errc::UnliftableTarget, "negative valuation requested");
  FFElement gamma = K.mul(K.embed(target, k), K.pow(Lk.eps, -i));
  if (k == 1) return lift_prescribed(t, 0, w, K.split(gamma));
  const Level& L = t.level(k - 1);
  std::int64_t s0 = floor_mod(checked_mul(L.ell, w), L.e);
  std::int64_t t0 = exact_quot(s0 - L.ell * w, L.e, "lift twist");
  FFElement rho = K.mul(gamma, K.pow(K.generator(k), -t0));
  return lift_prescribed(t, k - 1, w, K.split(rho));
}

IntPolynomial lift_prescribed(const Type& t, unsigned k, std::int64_t w, const std::vector<FFElement>& g) {
  if (w < 0) fail(Errc::UnliftableTarget, "negative valuation requested");
  const TowerField& K = t.tower();
  if (k == 0) {
    if (g.size() > t.f0()) fail(Errc::UnliftableTarget, "residual target too long");
    std::vector<Integer> c;
    for (const auto& x : g) c.push_back(Integer(static_cast<unsigned long>(K.project(x, 0).c[0])));
    return IntPolynomial(std::move(c)) * ipow(t.prime(), static_cast<unsigned long>(w));
  }
  const Level& L = t.level(k);
  if (!L.closed()) fail(Errc::UnliftableTarget, "level is not closed");
  if (g.size() > L.f) fail(Errc::UnliftableTarget, "residual target too long");
  std::int64_t s0 = floor_mod(checked_mul(L.ell, w), L.e);
  IntPolynomial P;
  IntPolynomial phipow = pow(L.phi, static_cast<unsigned long>(s0));
  IntPolynomial phie = pow(L.phi, static_cast<unsigned long>(L.e));
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (j) phipow = phipow * phie;
    if (K.is_zero(g[j])) continue;
    std::int64_t i = s0 + static_cast<std::int64_t>(j) * L.e;
    std::int64_t u = exact_quot(w - checked_mul(L.h, i), L.e, "lift abscissa class");
    P += lift_point(t, k, i, u, g[j]) * phipow;
  }
  return P;
}

IntPolynomial representative(const Type& t) {
  if (t.has_pending()) fail(Errc::InvariantViolation, "representative needs a closed top level");
  if (t.depth() == 0) return lift_residues(t.psi0());
  const unsigned r = t.depth();
  const Level& L = t.level(r);
  const TowerField& K = t.tower();
  const std::int64_t ef = L.e * static_cast<std::int64_t>(L.f);
  FFElement lead = K.pow(L.eps, ef);
  IntPolynomial P = pow(L.phi, static_cast<unsigned long>(ef));
  IntPolynomial phie = pow(L.phi, static_cast<unsigned long>(L.e));
  IntPolynomial phipow{1};
  for (unsigned j = 0; j < L.f; ++j) {
    if (j) phipow = phipow * phie;
    const FFElement& b = L.psi.coeffs[j];
    if (K.is_zero(b)) continue;
    std::int64_t i = static_cast<std::int64_t>(j) * L.e;
    std::int64_t u = checked_add(checked_mul(ef, L.V), checked_mul(static_cast<std::int64_t>(L.f - j), L.h));
    P += lift_point(t, r, i, u, K.mul(K.embed(b, r), lead)) * phipow;
  }
  return P;
}

void check_level_invariants(const Type& t) {
  for (unsigned k = 1; k <= t.depth(); ++k) {
    const Level& L = t.level(k);
    if (L.closed() && L.ell * L.h - L.ell_prime * L.e != 1) fail(Errc::InvariantViolation, "ell identity");
    if (k == 1) {
      if (L.phi.degree() != t.f0() || L.V != 0) fail(Errc::InvariantViolation, "first level data");
      continue;
    }
    const Level& P = t.level(k - 1);
    if (L.phi.degree() != P.e * static_cast<long>(P.f) * P.phi.degree()) fail(Errc::InvariantViolation, "degree law");
    if (L.V != P.e * static_cast<std::int64_t>(P.f) * (P.e * P.V + P.h)) fail(Errc::InvariantViolation, "V law");
  }
}

}  // namespace montes

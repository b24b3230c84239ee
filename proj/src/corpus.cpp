#include "montes/corpus.hpp"

#include <numeric>
#include <random>

#include "montes/error.hpp"

namespace montes::corpus {

namespace {

IntPolynomial C(long base, unsigned long e) { return IntPolynomial::constant(ipow(Integer(base), e)); }
IntPolynomial K(long c) { return IntPolynomial::constant(Integer(c)); }
const IntPolynomial X = IntPolynomial::x();

FFPolynomial random_irreducible(const TowerField& F, unsigned level, long degree, std::mt19937_64& rng) {
  for (int tries = 0; tries < 100000; ++tries) {
    FFPolynomial a = F.random_poly(level, degree, rng, true);
    if (degree == 1 && F.is_zero(a.coeffs[0])) continue;  // y is not allowed
    if (F.is_irreducible(a)) return a;
  }
  fail(Errc::InvariantViolation, "no irreducible polynomial found");
}

}  // namespace

IntPolynomial tower(unsigned level) {
  IntPolynomial p1 = X * X + K(4) * X + K(16);
  if (level == 1) return p1;
  IntPolynomial p2 = p1 * p1 + C(2, 4) * X * p1 + C(2, 12);
  if (level == 2) return p2;
  IntPolynomial p3 = pow(p2, 4) + C(2, 23) * (X + K(4)) * p2 * p2 + C(2, 42) * X * p1;
  if (level == 3) return p3;
  IntPolynomial p4 = p3 * p3 + C(2, 12) * X * pow(p2, 3) * p3 + C(2, 72) * p1 * p2 * p2 + C(2, 101) * X;
  if (level == 4) return p4;
  if (level == 5) {
    IntPolynomial inner = (X * (p1 + C(2, 6)) * (pow(p2, 3) + C(2, 25) * p2) + C(2, 27) * p2) * p3 +
                          C(2, 64) * (X * p1 * p2 * p2 + C(2, 33));
    return pow(p4, 3) + C(2, 34) * p1 * p2 * p3 * p4 * p4 + C(2, 215) * inner;
  }
  fail(Errc::NotApplicable, "tower level must be 1.." + std::to_string(kTowerLevels));
}

RandomTower random_tower(Residue p, std::int64_t f0, const std::vector<LevelSpec>& levels, std::uint64_t seed) {
  if (f0 < 1) fail(Errc::NotApplicable, "f0 must be positive");
  std::mt19937_64 rng(seed);
  TowerField F(p);
  FFPolynomial psi0 = random_irreducible(F, 0, f0, rng);
  Type t = Type::order_zero(p, psi0, lift_residues(psi0));
  for (const auto& L : levels) {
    if (L.e < 1 || L.f < 1 || L.h < 1) fail(Errc::NotApplicable, "e, f, h must be positive");
    if (std::gcd(L.e, L.h) != 1) fail(Errc::NotApplicable, "h and e must be coprime");
    const unsigned k = t.depth();
    FFPolynomial psi = random_irreducible(t.tower(), k, L.f, rng);
    Type closed = t.closed_with(Slope{L.h, L.e}, psi);
    t = closed.opened_with(representative(closed));
  }
  RandomTower out;
  IntPolynomial phi = t.pending_phi();
  if (levels.empty()) {
    out.poly = phi;
  } else {
    // a higher-value tail keeps the type and makes the polynomial less special
    const unsigned r = t.depth() - 1;
    const TowerField& T = t.tower();
    std::uniform_int_distribution<std::int64_t> extra(1, 3);
    FFElement c = T.random(r, rng);
    if (T.is_zero(c)) c = T.one(r);
    out.poly = phi + lift_prescribed(t, r, t.level(r + 1).V + extra(rng), {c});
  }
  out.e = 1;
  out.f = f0;
  for (unsigned k = 1; k < t.depth(); ++k) {
    out.e *= t.level(k).e;
    out.f *= t.level(k).f;
  }
  out.type = t;
  return out;
}

IntPolynomial quartic_refine(const Integer& p, unsigned long k) {
  return pow(IntPolynomial{1, 1, 1}, 2) - IntPolynomial::constant(ipow(p, 2 * k + 1));
}

IntPolynomial multi_branch_phi() {
  IntPolynomial p1 = X * X + C(13, 2) * X + K(3) * C(13, 4);
  IntPolynomial p2 = pow(p1, 3) + K(2) * C(13, 18);
  IntPolynomial p3 = pow(p2, 10) + C(13, 89) * (X + C(13, 2)) * pow(p2, 5) + C(13, 176) * p1;
  return p3 * p3 + C(13, 248) * (K(12) * (X + C(13, 2)) * p1 + C(13, 8)) * pow(p2, 6) +
         K(12) * C(13, 335) * p1 * p1 * p2;
}

IntPolynomial multi_branch(unsigned j, unsigned long N) {
  if (j < 1) fail(Errc::NotApplicable, "j must be at least 1");
  IntPolynomial phi = multi_branch_phi();
  IntPolynomial prod{1};
  for (unsigned k = 0; k < j; ++k) prod = prod * compose_shift(phi, Integer(k));
  return prod + C(13, N);
}

IntPolynomial sextic_pairs_example() {
  std::vector<Integer> c = {Integer("59914669248"), Integer("10978063488"), Integer("-641009376"),
                            Integer("-1583408736"), Integer("486721116"),  Integer("24745392"),
                            Integer("-12522636"),   Integer("-172872"),    Integer("130095"),
                            Integer("476"),         Integer("-588"),       Integer("0"),
                            Integer("1")};
  return IntPolynomial(std::move(c));
}

IntPolynomial cubic_power_example() {
  IntPolynomial g{5, 1, 0, 1};
  return pow(g, 50) + C(2, 89) * pow(g, 25) + C(2, 178);
}

}  // namespace montes::corpus

#include <doctest.h>

#include <numeric>
#include <random>

#include "montes/corpus.hpp"
#include "montes/error.hpp"
#include "montes/types.hpp"

using namespace montes;

namespace {

const IntPolynomial X = IntPolynomial::x();

// (x; -1/2, y+1) at p = 2
Type half_type() {
  TowerField F(2);
  Type t0 = Type::order_zero(2, F.poly_from_residues({0, 1}), X);
  const TowerField& K = t0.tower();
  return t0.closed_with(Slope{1, 2}, K.poly(1, {K.one(1), K.one(1)}));
}

}  // namespace

TEST_CASE("order-zero type") {
  Type t = Type::order_zero(2, TowerField(2).poly_from_residues({1, 1}), IntPolynomial{1, 1});
  CHECK(t.order() == 0);
  CHECK(t.depth() == 1);
  CHECK(t.has_pending());
  CHECK(t.pending_phi() == IntPolynomial{1, 1});
  CHECK(value(t, 1, IntPolynomial{4, 2}) == 1);
  CHECK(t.pending_phi().is_monic());
  CHECK(reduce_mod_p(t.pending_phi(), 2) == t.psi0());
}

TEST_CASE("values of the order-one type") {
  Type t = half_type();
  CHECK(t.order() == 1);
  CHECK(value(t, 2, X) == 1);
  CHECK(value(t, 2, IntPolynomial{2, 0, 1}) == 2);
  CHECK(value(t, 1, IntPolynomial{4, 2}) == 1);
  CHECK(t.ram_index() == 2);
  CHECK(t.residue_degree() == 1);
  CHECK_THROWS_AS(value(t, 2, IntPolynomial{}), Error);
}

TEST_CASE("representative of the order-one type") {
  Type t = half_type();
  IntPolynomial phi = representative(t);
  CHECK(phi.degree() == 2);
  CHECK(phi.is_monic());
  NewtonData nd = newton(t, 1, phi);
  REQUIRE(nd.principal.sides.size() == 1);
  CHECK(nd.principal.sides[0].slope == Slope{1, 2});
  CHECK(residual_poly(t, 1, nd, nd.principal.sides[0]) == t.level(1).psi);
  Type o = t.opened_with(phi);
  CHECK(omega(o, 2, phi) == 1);
  CHECK(omega(o, 2, X) == 0);
  CHECK(o.m(2) == 2);
  CHECK(o.level(2).V == 2);
  // x^2 + 2 is one admissible choice
  CHECK(omega(t.opened_with(IntPolynomial{2, 0, 1}), 2, IntPolynomial{2, 0, 1}) == 1);
}

TEST_CASE("Newton polygons and residual polynomials of the sextic pairs example") {
  IntPolynomial f = corpus::sextic_pairs_example();
  TowerField F(2);
  Type tx = Type::order_zero(2, F.poly_from_residues({0, 1}), X);
  NewtonData nx = newton(tx, 1, f);
  REQUIRE(nx.principal.sides.size() == 2);
  CHECK(nx.principal.sides[0].slope == Slope{1, 1});
  CHECK(nx.principal.sides[1].slope == Slope{1, 2});
  const TowerField& K = tx.tower();
  FFPolynomial y1 = K.poly(1, {K.one(1), K.one(1)});
  CHECK(residual_poly(tx, 1, nx, nx.principal.sides[0]) == K.ppow(y1, 4));
  CHECK(residual_poly(tx, 1, nx, nx.principal.sides[1]) == K.ppow(y1, 2));
  CHECK(omega(tx, 1, f) == 8);

  Type t1 = Type::order_zero(2, F.poly_from_residues({1, 1}), IntPolynomial{1, 1});
  NewtonData n1 = newton(t1, 1, f);
  REQUIRE(n1.principal.sides.size() == 2);
  CHECK(n1.principal.sides[0].slope == Slope{3, 2});
  CHECK(n1.principal.sides[1].slope == Slope{1, 2});
  CHECK(omega(t1, 1, f) == 4);

  // refining x -> x + 2 at h = 1 leaves one side steeper than -1, of slope -3/2
  Type tr = tx.refined(IntPolynomial{2, 1}, 1);
  CHECK(tr.order() == 0);
  PrincipalPolygon c = cut(newton(tr, 1, f).principal, 1);
  REQUIRE(c.sides.size() == 1);
  CHECK(c.sides[0].slope == Slope{3, 2});
  CHECK_THROWS_AS(tx.refined(IntPolynomial{2, 0, 1}, 1), Error);
}

TEST_CASE("residual polynomial of the cubic power example") {
  IntPolynomial f = corpus::cubic_power_example();
  Type t = Type::order_zero(2, TowerField(2).poly_from_residues({1, 1, 0, 1}), IntPolynomial{5, 1, 0, 1});
  NewtonData nd = newton(t, 1, f);
  REQUIRE(nd.principal.sides.size() == 1);
  CHECK(nd.principal.sides[0].slope == Slope{89, 25});
  const TowerField& K = t.tower();
  CHECK(K.cardinality(1) == 8);
  CHECK(residual_poly(t, 1, nd, nd.principal.sides[0]) == K.poly(1, {K.one(1), K.one(1), K.one(1)}));
}

TEST_CASE("residual coefficients at order one") {
  Type t = Type::order_zero(2, TowerField(2).poly_from_residues({0, 1}), X);
  CoeffEval a = eval_coefficient(t, 1, IntPolynomial{3});
  CHECK(a.v == 0);
  CHECK(t.tower().is_one(a.c));
  CoeffEval b = eval_coefficient(t, 1, IntPolynomial::constant(ipow(2, 12)));
  CHECK(b.v == 12);
  CHECK(t.tower().is_one(b.c));
}

TEST_CASE("point of phi itself") {
  Type t = half_type().opened_with(IntPolynomial{2, 0, 1});
  NewtonData nd = newton(t, 2, t.pending_phi());
  CHECK(nd.points.size() == 1);
  CHECK(nd.principal.empty());
  CHECK(omega(half_type(), 1, X) == 1);
}

TEST_CASE("closing errors") {
  Type t0 = Type::order_zero(2, TowerField(2).poly_from_residues({0, 1}), X);
  const TowerField& K = t0.tower();
  try {
    t0.closed_with(Slope{1, 2}, K.poly(1, {K.zero(1), K.one(1)}));
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ForbiddenResidualY);
  }
  try {
    t0.closed_with(Slope{1, 1}, K.poly(1, {K.one(1), K.zero(1), K.one(1)}));
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ReducibleModulus);
  }
}

TEST_CASE("lift_prescribed at order zero") {
  Type t = Type::order_zero(5, TowerField(5).poly_from_residues({2, 0, 1}), IntPolynomial{2, 0, 1});
  CHECK(lift_prescribed(t, 0, 7, {t.tower().one(0)}) == IntPolynomial::constant(ipow(5, 7)));
}

TEST_CASE("towers: degree, V and ell laws, lift round trip") {
  std::mt19937_64 rng(77);
  std::size_t lifted = 0;
  for (int n = 0; n < 30; ++n) {
    Residue p = std::vector<Residue>{2, 3, 5}[n % 3];
    std::vector<corpus::LevelSpec> levels_spec;
    unsigned levels = static_cast<unsigned>(rng() % 3) + 1;
    mpz_class card = 1;
    for (unsigned i = 0; i < levels; ++i) {
      corpus::LevelSpec L;
      L.e = static_cast<std::int64_t>(rng() % 3) + 1;
      L.f = static_cast<std::int64_t>(rng() % 2) + 1;
      L.h = static_cast<std::int64_t>(rng() % 4) + 1;
      while (std::gcd(L.h, L.e) != 1) ++L.h;
      if (L.e * L.f == 1) L.e = 2, L.h = 1;
      levels_spec.push_back(L);
    }
    auto rt = corpus::random_tower(p, 1, levels_spec, static_cast<std::uint64_t>(n));
    const Type& t = rt.type;
    check_level_invariants(t);
    for (unsigned k = 1; k <= t.order(); ++k) {
      const Level& L = t.level(k);
      CHECK(L.ell * L.h - L.ell_prime * L.e == 1);
      if (k < t.depth()) CHECK(t.m(k + 1) == L.e * L.f * t.m(k));
      CHECK(value(t, k + 1, L.phi) == L.e * L.V + L.h);
    }
    const TowerField& K = t.tower();
    if (K.cardinality(K.top()) > 4096) continue;
    for (unsigned k = 1; k <= t.order(); ++k) {
      const Level& L = t.level(k);
      for (int trial = 0; trial < 5; ++trial) {
        std::vector<FFElement> g;
        std::size_t len = static_cast<std::size_t>(rng() % L.f) + 1;
        for (std::size_t j = 0; j < len; ++j) {
          FFElement z = K.random(k, rng);
          while ((j == 0 || j + 1 == len) && K.is_zero(z)) z = K.random(k, rng);
          g.push_back(z);
        }
        std::int64_t w = 4 * L.e * (L.V + L.h) * static_cast<std::int64_t>(k) + static_cast<std::int64_t>(rng() % 7);
        IntPolynomial P = lift_prescribed(t, k, w, g);
        CHECK(P.degree() < L.e * L.f * t.m(k));
        CHECK(value(t, k + 1, P) == w);
        CHECK(residual_component(t, k, P) == K.poly(k, g));
        ++lifted;
      }
    }
  }
  CHECK(lifted >= 50);
}

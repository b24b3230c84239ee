#include <doctest.h>

#include <random>

#include "montes/corpus.hpp"
#include "montes/error.hpp"
#include "montes/verify.hpp"
#include "montes/zpoly.hpp"

using namespace montes;

namespace {

IntPolynomial random_poly(std::mt19937_64& rng, long deg, int bits, bool monic) {
  std::vector<Integer> c;
  gmp_randclass gr(gmp_randinit_default);
  gr.seed(static_cast<unsigned long>(rng()));
  for (long i = 0; i < deg; ++i) {
    Integer v = gr.get_z_bits(static_cast<unsigned long>(bits));
    if (rng() & 1) v = -v;
    c.push_back(v);
  }
  c.push_back(monic ? Integer(1) : Integer(static_cast<long>(rng() % 97) + 1));
  return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("pval") {
  CHECK(pval(ipow(2, 89) * 5, 2) == 89);
  CHECK(pval(1, 7) == 0);
  CHECK(pval(discriminant(corpus::sextic_pairs_example()), 2) == 84);
  CHECK_THROWS_AS(pval(0, 2), Error);
  CHECK(!pval_inf(0, 2).has_value());
  CHECK(*pval_inf(-48, 2) == 4);
}

TEST_CASE("pval is additive") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Integer a = static_cast<long>(rng() % 100000) + 1, b = static_cast<long>(rng() % 100000) + 1;
    for (long p : {2, 3, 5, 7}) CHECK(pval(a * b, p) == pval(a, p) + pval(b, p));
  }
}

TEST_CASE("vpoly") {
  CHECK(vpoly(IntPolynomial{4, 2}, 2) == 1);
  CHECK(vpoly(IntPolynomial{3, 0, 1}, 2) == 0);
  CHECK(vpoly(IntPolynomial::constant(ipow(2, 12)) + IntPolynomial::monomial(16, 1), 2) == 4);
  try {
    vpoly(IntPolynomial{}, 2);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ZeroPolynomial);
  }
}

TEST_CASE("phi_expand") {
  auto parts = phi_expand(IntPolynomial{1, 0, 1}, IntPolynomial::x());
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == IntPolynomial{1});
  CHECK(parts[1].is_zero());
  CHECK(parts[2] == IntPolynomial{1});

  IntPolynomial p1 = corpus::tower(1);
  auto q = phi_expand(corpus::tower(2), p1);
  REQUIRE(q.size() == 3);
  CHECK(q[0] == IntPolynomial::constant(ipow(2, 12)));
  CHECK(q[1] == IntPolynomial{0, 16});
  CHECK(q[2] == IntPolynomial{1});

  try {
    phi_expand(IntPolynomial{1, 1}, IntPolynomial{1, 2});
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonMonicModulus);
  }
}

TEST_CASE("phi_expand reconstructs") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    long m = static_cast<long>(rng() % 4) + 1;
    IntPolynomial phi = random_poly(rng, m, 64, true);
    IntPolynomial P = random_poly(rng, static_cast<long>(rng() % 13), 64, false);
    auto parts = phi_expand(P, phi);
    for (const auto& a : parts) CHECK(a.degree() < phi.degree());
    CHECK(phi_collect(parts, phi) == P);
    auto pre = phi_expand_prefix(P, phi, 2);
    for (std::size_t k = 0; k < pre.size() && k < parts.size(); ++k) CHECK(pre[k] == parts[k]);
  }
}

TEST_CASE("basic arithmetic") {
  auto qr = divmod(IntPolynomial{1, 0, 1}, IntPolynomial::x());
  CHECK(qr.quot == IntPolynomial::x());
  CHECK(qr.rem == IntPolynomial{1});
  CHECK(compose_shift(IntPolynomial{0, 0, 1}, 1) == IntPolynomial{1, 2, 1});
  CHECK(IntPolynomial{1, 1} * IntPolynomial{-1, 1} == IntPolynomial{-1, 0, 1});
  CHECK(content(IntPolynomial{6, 4, 2}) == 2);
  CHECK(gcd_z(IntPolynomial{-1, 0, 1}, IntPolynomial{1, 2, 1}) == IntPolynomial{1, 1});
  CHECK(derivative(IntPolynomial{5, 3, 0, 1}) == IntPolynomial{3, 0, 3});
}

TEST_CASE("canonical printing") {
  CHECK(IntPolynomial{5, 1, 0, 1}.to_string() == "x^3+x+5");
  CHECK(IntPolynomial{0, 0, 5}.to_string() == "5*x^2");
  CHECK(IntPolynomial{0, -1}.to_string() == "-x");
  CHECK(IntPolynomial{}.to_string() == "0");
}

TEST_CASE("discriminant") {
  CHECK(discriminant(IntPolynomial{1, 0, 1}) == -4);
  CHECK(discriminant(IntPolynomial{1, 1, 1}) == -3);
  CHECK(discriminant(IntPolynomial{-3, 0, 1}) == 12);
  try {
    discriminant(IntPolynomial{7});
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DegreeTooSmall);
  }
}

TEST_CASE("discriminant matches the Sylvester determinant") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    IntPolynomial f = verify::random_monic(rng, 6, 50);
    CHECK(discriminant(f) == verify::sylvester_discriminant(f));
  }
}

TEST_CASE("xgcd_rat") {
  RatXgcd r = xgcd_rat(RatPolynomial(IntPolynomial{1, 0, 1}), RatPolynomial(IntPolynomial::x()));
  CHECK(r.g == RatPolynomial(IntPolynomial{1}));
  CHECK(r.s == RatPolynomial(IntPolynomial{1}));
  CHECK(r.t == RatPolynomial(IntPolynomial{0, -1}));

  RatXgcd same = xgcd_rat(RatPolynomial(IntPolynomial::x()), RatPolynomial(IntPolynomial::x()));
  CHECK(same.g == RatPolynomial(IntPolynomial::x()));
  CHECK(same.s * RatPolynomial(IntPolynomial::x()) + same.t * RatPolynomial(IntPolynomial::x()) == same.g);

  RatPolynomial P(IntPolynomial{2, 0, 4});
  RatXgcd z = xgcd_rat(P, RatPolynomial());
  CHECK(z.g == P.monic());
  CHECK(z.s == RatPolynomial(std::vector<Rational>{Rational(1, 4)}));
  CHECK(z.t.is_zero());

  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    RatPolynomial a(random_poly(rng, 5, 20, false)), b(random_poly(rng, 4, 20, false));
    RatXgcd x = xgcd_rat(a, b);
    CHECK(x.s * a + x.t * b == x.g);
    CHECK(x.g.lead() == 1);
  }
}

#include <doctest.h>

#include <random>

#include "montes/corpus.hpp"
#include "montes/error.hpp"
#include "montes/idealgen.hpp"
#include "montes/verify.hpp"

using namespace montes;

namespace {

const Slope& last_slope(const CompleteRecord& r) { return r.lineage.back().slope; }

// index of the prime whose completion slope is -h/e
std::size_t by_slope(const RunResult& r, std::int64_t h, std::int64_t e) {
  for (std::size_t i = 0; i < r.primes.size(); ++i)
    if (last_slope(r.primes[i]) == Slope{h, e}) return i;
  FAIL("no prime with slope -" << h << "/" << e);
  return 0;
}

}  // namespace

TEST_CASE("field elements") {
  IntPolynomial f{1, 0, 1};
  FieldElement a = make_element(IntPolynomial{2, 4}, 6, f);
  CHECK(a.num == IntPolynomial{1, 2});
  CHECK(a.den == 3);
  FieldElement b = make_element(IntPolynomial{1, 0, 0, 1}, -2, f);
  CHECK(b.num == IntPolynomial{-1, 1});
  CHECK(b.den == 2);
  CHECK(make_element(IntPolynomial{}, 5, f).den == 1);
  CHECK_THROWS_AS(make_element(IntPolynomial{1}, 0, f), Error);
  // theta^2 = -1
  FieldElement t{IntPolynomial{0, 1}, 1};
  CHECK(field_pow(t, 2, f) == FieldElement{IntPolynomial{-1}, 1});
  CHECK(field_pow(t, 4, f) == FieldElement{IntPolynomial{1}, 1});
  CHECK(field_inv(t, f) == FieldElement{IntPolynomial{0, -1}, 1});
  try {
    field_inv(FieldElement{IntPolynomial{1, 1}, 1}, IntPolynomial{-1, 0, 1});
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotInvertible);
  }
}

TEST_CASE("field inversion round trip") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    IntPolynomial f = verify::random_monic_squarefree(rng, 6, 30);
    if (f.degree() < 2) continue;
    IntPolynomial n = verify::random_monic(rng, f.degree() - 1, 30);
    if (gcd_z(n, f).degree() > 0) continue;
    FieldElement a = make_element(n, static_cast<long>(rng() % 9) + 1, f);
    CHECK(field_mul(a, field_inv(a, f), f) == FieldElement{IntPolynomial{1}, 1});
  }
}

TEST_CASE("finalize_alpha") {
  CHECK(finalize_alpha(FieldElement{IntPolynomial{1, 1}, 12}, 2).den == 4);
  CHECK(finalize_alpha(FieldElement{IntPolynomial{1, 1}, 8}, 2).den == 8);
  CHECK(finalize_alpha(FieldElement{IntPolynomial{1, 1}, 15}, 2).den == 1);
}

TEST_CASE("cross valuations of the sextic pairs example") {
  RunResult r = run(corpus::sextic_pairs_example(), 2);
  std::size_t q1 = by_slope(r, 3, 2), p1 = by_slope(r, 1, 2);
  std::size_t q2 = by_slope(r, 8, 1), p2 = by_slope(r, 7, 1);
  std::size_t q3 = by_slope(r, 9, 1), p3 = by_slope(r, 5, 1);
  CHECK(v_q_beta(r.primes, p1, q1) == -4);
  CHECK(v_q_beta(r.primes, p2, q2) == -1);
  CHECK(v_q_beta(r.primes, p3, q3) == -4);
  // nothing dominates the steepest branches
  CHECK(v_q_beta(r.primes, q1, p1) == 0);
  CHECK(v_q_beta(r.primes, q2, p2) == 0);
  CHECK(v_q_beta(r.primes, p1, q2) == 0);
  for (std::size_t i : {q1, q2, q3}) CHECK(r.primes[i].dominators.empty());

  std::vector<CompleteRecord> broken = r.primes;
  broken[p1].lineage.clear();
  broken[p1].dedekind = false;
  try {
    v_q_beta(broken, p1, q1);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MissingDominatorData);
  }
}

TEST_CASE("generators of the sextic pairs example") {
  IntPolynomial f = corpus::sextic_pairs_example();
  RunResult r = run(f, 2);
  ExpansionCache cache(f);
  GeneratorData gd = compute_generators(r, cache);
  REQUIRE(gd.alphas.size() == 6);
  for (std::size_t p = 0; p < 6; ++p) {
    // the type is complete with an H = 1 representative
    auto H = side_height(gd.rep_types[p], cache);
    REQUIRE(H.has_value());
    CHECK(*H == 1);
    CHECK(ensure_H1(gd.rep_types[p], cache) == gd.rep_types[p].pending_phi());
    CHECK(value_at_prime(gd.rep_types[p], gd.betas[p], cache) == 1);
    CHECK(value_at_prime(gd.rep_types[p], IntPolynomial{2}, cache) == 2);
    for (std::size_t q = 0; q < 6; ++q)
      CHECK(value_at_prime(gd.rep_types[q], gd.alphas[p], cache) == (p == q ? 1 : 0));
    CHECK(gd.alphas[p].den == ipow(2, pval(gd.alphas[p].den, 2)));
    REQUIRE(r.primes[p].generator.has_value());
    CHECK(r.primes[p].generator->num == gd.alphas[p].num);
  }
  // dominated primes pick up the expected power of the dominating alpha-tilde
  std::size_t q = by_slope(r, 3, 2), p = by_slope(r, 1, 2);
  FieldElement expect = field_mul(gd.betas[p], field_pow(gd.tilde[q], 4, f), f);
  CHECK(gd.tilde[p] == expect);
  std::size_t q2 = by_slope(r, 8, 1), p2 = by_slope(r, 7, 1);
  CHECK(gd.tilde[p2] == field_mul(gd.betas[p2], gd.tilde[q2], f));
  CHECK(gd.tilde[q] == gd.betas[q]);
}

TEST_CASE("the tweak reaches H = 1") {
  // tower rows have one prime with a long final side; the tweak must bring it to height one
  for (unsigned level = 1; level <= 4; ++level) {
    IntPolynomial f = corpus::tower(level);
    RunResult r = run(f, 2);
    ExpansionCache cache(f);
    Type rt = representative_type(r.primes[0], cache, {});
    IntPolynomial phi = ensure_H1(rt, cache);
    auto H = side_height(rt.with_pending_phi(phi), cache);
    REQUIRE(H.has_value());
    CHECK(*H == 1);
  }
}

TEST_CASE("valuation grid on reference inputs") {
  for (const auto& [f, p] : std::vector<std::pair<IntPolynomial, long>>{
           {corpus::sextic_pairs_example(), 2},
           {corpus::sextic_pairs_example(), 3},
           {corpus::sextic_pairs_example(), 7},
           {corpus::quartic_refine(7, 5), 7},
           {corpus::tower(3), 2},
           {IntPolynomial{1, 0, 1}, 2},
           {IntPolynomial{-3, 0, 1}, 3}}) {
    verify::GridCheck g = verify::check_generators(f, p);
    INFO(f.to_string(), " at ", p, ": ", g.detail);
    CHECK(g.ok);
  }
}

TEST_CASE("value_at_prime of zero at theta") {
  IntPolynomial f{-2, 0, 1};
  RunResult r = run(f, 2);
  ExpansionCache cache(f);
  Type rt = representative_type(r.primes[0], cache, {});
  try {
    value_at_prime(rt, f, cache);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ZeroAtTheta);
  }
}

#include <doctest.h>

#include <random>

#include "montes/corpus.hpp"
#include "montes/kernels.hpp"
#include "montes/verify.hpp"

using namespace montes;

TEST_CASE("phi-adic prefix: serial and parallel agree") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 60; ++i) {
    IntPolynomial phi = verify::random_monic(rng, 4, 1000);
    IntPolynomial P = pow(verify::random_monic(rng, 8, 1000), static_cast<unsigned long>(rng() % 6) + 1);
    for (std::size_t count : {std::size_t{1}, std::size_t{2}, std::size_t{5}, std::size_t{50}}) {
      auto a = kernels::phi_prefix_serial(P, phi, count);
      auto b = kernels::phi_prefix_parallel(P, phi, count);
      CHECK(a == b);
      auto full = phi_expand(P, phi);
      for (std::size_t k = 0; k < a.size() && k < full.size(); ++k) CHECK(a[k] == full[k]);
    }
  }
  IntPolynomial f = corpus::tower(4);
  CHECK(kernels::phi_prefix_serial(f, corpus::tower(1), 40) == kernels::phi_prefix_parallel(f, corpus::tower(1), 40));
}

TEST_CASE("Newton points: serial and parallel agree") {
  IntPolynomial f = corpus::tower(4);
  RunResult r = run(f, 2);
  const Type& t = r.primes[0].type;
  for (unsigned k = 1; k <= t.order(); ++k) {
    auto ex = phi_expand(f, t.level(k).phi);
    NewtonData a = kernels::points_serial(t, k, ex), b = kernels::points_parallel(t, k, ex);
    CHECK(a.points == b.points);
    CHECK(a.coeff == b.coeff);
    CHECK(a.principal == b.principal);
  }
}

TEST_CASE("parallel run equals sequential run") {
  Options par;
  par.parallel = true;
  for (const auto& [f, p] : std::vector<std::pair<IntPolynomial, long>>{
           {corpus::sextic_pairs_example(), 2}, {corpus::tower(3), 2}, {corpus::quartic_refine(13, 40), 13}}) {
    RunResult a = run(f, p), b = run(f, p, par);
    CHECK(a.index == b.index);
    REQUIRE(a.primes.size() == b.primes.size());
    for (std::size_t i = 0; i < a.primes.size(); ++i) {
      CHECK(a.primes[i].e == b.primes[i].e);
      CHECK(a.primes[i].f == b.primes[i].f);
      CHECK(a.primes[i].type.to_string() == b.primes[i].type.to_string());
    }
  }
  CHECK(kernels::max_threads() >= 1);
}

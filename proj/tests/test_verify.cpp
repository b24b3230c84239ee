#include <doctest.h>

#include "montes/corpus.hpp"
#include "montes/error.hpp"
#include "montes/polygon.hpp"
#include "montes/verify.hpp"

using namespace montes;

TEST_CASE("lattice oracle") {
  CHECK(verify::lattice_index_oracle(principal_from({{0, 5}, {1, 0}})) == 0);
  CHECK(verify::lattice_index_oracle(principal_from({{0, 3}, {1, 1}, {2, 0}})) == 1);
  CHECK(verify::lattice_index_oracle(principal_from({{0, 2}, {4, 0}})) == 2);
  CHECK(verify::lattice_cut_index_oracle(principal_from({{0, 4}, {1, 1}}), 1, 1) == 0);
  CHECK_THROWS_AS(verify::lattice_index_oracle(principal_from({{0, 200}, {100, 0}})), Error);
}

TEST_CASE("Dedekind oracle") {
  auto a = verify::dedekind_oracle(IntPolynomial{1, 0, 1}, 2);
  REQUIRE(a.has_value());
  CHECK(*a == std::vector<verify::EF>{{2, 1}});
  auto b = verify::dedekind_oracle(IntPolynomial{1, 0, 1}, 5);
  REQUIRE(b.has_value());
  CHECK(*b == std::vector<verify::EF>{{1, 1}, {1, 1}});
  CHECK(!verify::dedekind_oracle(corpus::sextic_pairs_example(), 2).has_value());
  CHECK(!verify::dedekind_oracle(IntPolynomial{-5, 0, 1}, 2).has_value());
  auto c = verify::dedekind_oracle(IntPolynomial{-3, 0, 1}, 3);
  REQUIRE(c.has_value());
  CHECK(*c == std::vector<verify::EF>{{2, 1}});
}

TEST_CASE("Sylvester discriminant") {
  CHECK(verify::sylvester_discriminant(IntPolynomial{1, 0, 1}) == -4);
  CHECK(verify::sylvester_discriminant(IntPolynomial{1, 1, 1}) == -3);
  CHECK(verify::sylvester_discriminant(IntPolynomial{5, 1, 0, 1}) == -4 - 27 * 25);
}

TEST_CASE("tame identity") {
  RunResult r = run(IntPolynomial{-3, 0, 1}, 3);
  CHECK(verify::tame_disc_check(r, 1));
  CHECK(!verify::tame_disc_check(r, 3));
  RunResult w = run(IntPolynomial{1, 0, 1}, 2);
  try {
    verify::tame_disc_check(w, 2);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotApplicable);
  }
}

TEST_CASE("refinement equivalence on the shifted square family") {
  for (unsigned long k = 2; k <= 6; ++k) {
    IntPolynomial f = compose_shift(IntPolynomial{0, 0, 1}, -2) + IntPolynomial::constant(ipow(2, 2 * k));
    auto inst = verify::refinement_instances(f, 2);
    REQUIRE(!inst.empty());
    for (const auto& in : inst) {
      auto rep = verify::refinement_equivalence_check(in);
      INFO(rep.detail);
      CHECK(rep.ok);
      CHECK(in.parent.order() == 0);
    }
    // the refined path stays at order one
    RunResult r = run(f, 2);
    CHECK(r.stats.max_order <= 1);
  }
}

TEST_CASE("refinement equivalence on the sextic pairs example") {
  auto inst = verify::refinement_instances(corpus::sextic_pairs_example(), 2);
  REQUIRE(!inst.empty());
  for (const auto& in : inst) {
    auto rep = verify::refinement_equivalence_check(in);
    INFO(rep.detail);
    CHECK(rep.ok);
  }
}

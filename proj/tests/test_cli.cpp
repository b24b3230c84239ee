#include <doctest.h>

#include <json.hpp>

#include "montes/corpus.hpp"
#include "montes/error.hpp"
#include "montes/parse.hpp"
#include "montes/report.hpp"

using namespace montes;

namespace {

std::string parse_error(std::string_view s) {
  try {
    parse_poly(s);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
    return e.what();
  }
  FAIL("no throw for " << s);
  return "";
}

nlohmann::ordered_json factor_json(const IntPolynomial& f, long p, bool disc, bool gen = false) {
  FactorRequest req;
  req.poly = f;
  req.p = p;
  req.disc = disc;
  req.generators = gen;
  return nlohmann::ordered_json::parse(to_json(factor(req), disc));
}

}  // namespace

TEST_CASE("parser") {
  CHECK(parse_poly("x^2+1") == IntPolynomial{1, 0, 1});
  CHECK(parse_poly("(x^3+x+5)^50+2^89*(x^3+x+5)^25+2^178") == corpus::cubic_power_example());
  CHECK(parse_poly("(x^2+x+1)^2-7^21") == corpus::quartic_refine(7, 10));
  CHECK(parse_poly(" - 3 + x ") == IntPolynomial{-3, 1});
  CHECK(parse_poly("123456789012345678901234567890").lead() == Integer("123456789012345678901234567890"));
  CHECK(parse_poly("x*(x-1)*(x+1)") == IntPolynomial{0, -1, 0, 1});
  CHECK(parse_error("2x").find("byte 1") != std::string::npos);
  CHECK(parse_error("x^").find("byte 2") != std::string::npos);
  parse_error("(x+1");
  parse_error("");
  parse_error("x^-1");
  parse_error("x^99999999");
  parse_error("y+1");
}

TEST_CASE("print and parse round trip") {
  for (const IntPolynomial& f : {corpus::sextic_pairs_example(), corpus::tower(3), IntPolynomial{0, -1, 0, -7},
                                 IntPolynomial{-1}, corpus::quartic_refine(13, 3)}) {
    CHECK(parse_poly(f.to_string()) == f);
    CHECK(parse_coeffs(format_coeffs(f)) == f);
  }
  CHECK(parse_coeffs("# leading first\n1\n\n0\n-2\n") == IntPolynomial{-2, 0, 1});
}

TEST_CASE("JSON report") {
  auto j = factor_json(IntPolynomial{1, 0, 1}, 2, false);
  CHECK(j["prime"] == "2");
  CHECK(j["degree"] == 2);
  CHECK(j["index"] == 0);
  CHECK(!j.contains("disc_valuation"));
  REQUIRE(j["primes"].size() == 1);
  CHECK(j["primes"][0]["e"] == 2);
  CHECK(j["primes"][0]["f"] == 1);
  CHECK(j["primes"][0]["generator"].is_null());
  CHECK(j["timings_ms"].is_object());

  auto d = factor_json(corpus::sextic_pairs_example(), 2, true, true);
  CHECK(d["index"] == 33);
  CHECK(d["disc_valuation"] == 84);
  CHECK(d["field_disc_valuation"] == 18);
  for (const auto& q : d["primes"]) {
    CHECK(q["generator"]["num"].is_array());
    CHECK(q["generator"]["num"][0].is_string());
    CHECK(q["generator"]["p_power"].is_number_integer());
  }
  std::vector<std::string> keys;
  for (auto it = d.begin(); it != d.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"prime", "degree", "index", "disc_valuation", "field_disc_valuation", "primes",
                                         "timings_ms"});

  auto e = factor_json(corpus::cubic_power_example(), 2, false);
  CHECK(e["index"] == 13011);
  CHECK(e["primes"].size() == 1);
  CHECK(e["primes"][0]["e"] == 25);
  CHECK(e["primes"][0]["f"] == 6);
}

TEST_CASE("text report") {
  FactorRequest req;
  req.poly = IntPolynomial{1, 0, 1};
  req.p = 3;
  std::string t = to_text(factor(req), false);
  CHECK(t.find("index") != std::string::npos);
}

TEST_CASE("invalid requests") {
  FactorRequest req;
  req.poly = IntPolynomial{1, 2};
  req.p = 2;
  CHECK_THROWS_AS(factor(req), Error);
}

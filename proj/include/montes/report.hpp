#pragma once

#include <map>
#include <optional>
#include <string>

#include "montes/algorithm.hpp"

namespace montes {

struct Report {
  RunResult result;
  std::optional<std::int64_t> disc_valuation;
  std::map<std::string, double> timings_ms;  // only filled on request
};

struct FactorRequest {
  IntPolynomial poly;
  Integer p;
  bool generators = false;
  bool disc = false;
  bool timings = false;
  Options opt;
};

// validates, runs, optionally computes v_p(disc f)
Report factor(const FactorRequest& req);

// field order and names are part of the interface
std::string to_json(const Report& r, bool with_disc);
std::string to_text(const Report& r, bool with_disc);

}  // namespace montes

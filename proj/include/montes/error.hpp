#pragma once

#include <stdexcept>
#include <string>

namespace montes {

enum class Errc {
  ZeroPolynomial,
  NonMonicModulus,
  DegreeTooSmall,
  ReducibleModulus,
  DivisionByZero,
  NoPoints,
  SlopeOverflow,
  PointOffPolygon,
  UnliftableTarget,
  RefineDegreeMismatch,
  ForbiddenResidualY,
  NonMonic,
  NotSquarefree,
  NotPrime,
  PrimeTooLarge,
  InvariantViolation,
  NotInvertible,
  MissingDominatorData,
  ZeroAtTheta,
  OracleTooLarge,
  NotApplicable,
  ParseError,
};

const char* errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace montes

#include "montes/error.hpp"

namespace montes {

const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::NonMonicModulus: return "NonMonicModulus";
    case Errc::DegreeTooSmall: return "DegreeTooSmall";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NoPoints: return "NoPoints";
    case Errc::SlopeOverflow: return "SlopeOverflow";
    case Errc::PointOffPolygon: return "PointOffPolygon";
    case Errc::UnliftableTarget: return "UnliftableTarget";
    case Errc::RefineDegreeMismatch: return "RefineDegreeMismatch";
    case Errc::ForbiddenResidualY: return "ForbiddenResidualY";
    case Errc::NonMonic: return "NonMonic";
    case Errc::NotSquarefree: return "NotSquarefree";
    case Errc::NotPrime: return "NotPrime";
    case Errc::PrimeTooLarge: return "PrimeTooLarge";
    case Errc::InvariantViolation: return "InvariantViolation";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::MissingDominatorData: return "MissingDominatorData";
    case Errc::ZeroAtTheta: return "ZeroAtTheta";
    case Errc::OracleTooLarge: return "OracleTooLarge";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace montes

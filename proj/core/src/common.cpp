#include "grcyc/common.hpp"

#include <cmath>

namespace grcyc {

void Tolerance::validate() const {
  if (!(abs_eps > 0.0) || !(rel_eps > 0.0) || !(zero_eps > 0.0)) {
    fail(ErrorCode::InvalidArgument, "tolerances must be strictly positive");
  }
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ZeroCoordinate: return "ZeroCoordinate";
    case ErrorCode::SingularMap: return "SingularMap";
    case ErrorCode::ZeroParameter: return "ZeroParameter";
    case ErrorCode::NonPositiveParameter: return "NonPositiveParameter";
    case ErrorCode::ArgumentOutOfRange: return "ArgumentOutOfRange";
    case ErrorCode::NotRealizable: return "NotRealizable";
    case ErrorCode::InvalidRoots: return "InvalidRoots";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::OutsidePiCircle: return "OutsidePiCircle";
    case ErrorCode::ChartUndefined: return "ChartUndefined";
    case ErrorCode::InvalidTableau: return "InvalidTableau";
    case ErrorCode::DegenerateToggle: return "DegenerateToggle";
    case ErrorCode::ZeroInput: return "ZeroInput";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

void require_finite(Complex z, std::string_view context) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    fail(ErrorCode::InvalidArgument, std::string(context) + ": non-finite value");
  }
}

}  // namespace grcyc

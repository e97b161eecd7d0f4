#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace grcyc {

using Complex = std::complex<double>;

/// Absolute, relative and zero thresholds shared by every numeric comparison.
struct Tolerance {
  double abs_eps = 1e-9;
  double rel_eps = 1e-9;
  double zero_eps = 1e-10;

  /// Throws InvalidArgument unless all three thresholds are strictly positive.
  void validate() const;
};

enum class ErrorCode {
  InvalidArgument,
  RankDeficient,
  ShapeMismatch,
  ZeroCoordinate,
  SingularMap,
  ZeroParameter,
  NonPositiveParameter,
  ArgumentOutOfRange,
  NotRealizable,
  InvalidRoots,
  CoincidentPoints,
  ZeroDenominator,
  OutsidePiCircle,
  ChartUndefined,
  InvalidTableau,
  DegenerateToggle,
  ZeroInput,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

/// Throws InvalidArgument if either component is NaN or infinite.
void require_finite(Complex z, std::string_view context);

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace grcyc

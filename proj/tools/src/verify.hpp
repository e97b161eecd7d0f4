#pragma once

#include <cstdint>

#include "io.hpp"

namespace grcyc::app {

inline constexpr int kMaxN = 12;

struct RunConfig {
  int k = 2;
  int n = 4;
  Complex t{1.0, 0.0};
  std::uint64_t seed = 1;
  Tolerance tol;
  OutputFormat output = OutputFormat::Json;

  /// Throws UsageError unless 1 <= k <= n <= 12, t != 0 and tolerances are positive.
  void validate() const;
};

struct VerifyOutcome {
  Json report;
  bool pass = false;
};

/// Runs every cross-check for cfg in a fixed order. Only configuration
/// problems throw; failed checks are report entries.
VerifyOutcome run_verify_all(const RunConfig& cfg);

/// Smallest and largest V_0 Plücker coordinates plus all values grouped by
/// dihedral orbit. Requires k < n.
Json minmax_plucker(int k, int n);

}  // namespace grcyc::app

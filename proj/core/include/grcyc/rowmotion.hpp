#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "grcyc/superpotential.hpp"

namespace grcyc {

/// Labeling of [k] x [n-k] (row-major) with boundary labels 1 below the
/// minimum and q above the maximum. Boundary labels never change.
struct PosetLabeling {
  int k = 0;
  int n = 0;
  std::vector<Complex> values;
  Complex q{1.0, 0.0};

  static PosetLabeling from_torus(const TorusPoint& x, Complex q);
  TorusPoint to_torus() const;
};

/// Birational rowmotion, run on the order dual of the labeled poset so that
/// its fixed points are exactly the critical points of L_q. Each toggle is
///   f(v) <- (sum_{w covers v} f(w)) / (f(v) * sum_{v covers u} 1/f(u)),
/// applied to (1,1), (1,2), ..., (k, n-k) in that order. On [1] x [1] this
/// is x -> q/x. Throws DegenerateToggle if a sum vanishes.
PosetLabeling birational_rowmotion(const PosetLabeling& x, const Tolerance& tol = {});

/// Largest per-coordinate |R(x) - x|.
double rowmotion_residual(const PosetLabeling& x, const Tolerance& tol = {});

/// Least p in 1..max_steps with R^p(x) = x to rel_tol, if any.
std::optional<int> rowmotion_order(const PosetLabeling& x, int max_steps, double rel_tol = 1e-8);

struct RowmotionReport {
  int critical_points = 0;
  double max_critical_residual = 0.0;  // max |R(x) - x| over critical points
  int newton_starts = 0;
  int newton_fixed = 0;       // converged fixed points of R
  int unmatched = 0;          // of those, farther than 1e-6 from every critical point
  bool pass = false;
};

/// Every chart critical point is fixed by R (1e-8 per coordinate) and Newton
/// on R(x) - x from `starts` random points finds nothing else.
RowmotionReport rowmotion_fixed_check(int k, int n, Complex q, int starts = 50, std::uint64_t seed = 7);

}  // namespace grcyc

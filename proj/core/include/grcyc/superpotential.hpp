#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "grcyc/cyclic_shift.hpp"
#include "grcyc/laurent.hpp"

namespace grcyc {

/// Labels x_{r,s} of the poset [k] x [n-k], row-major in (r, s), all nonzero.
class TorusPoint {
public:
  TorusPoint(int k, int n, std::vector<Complex> values);

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  int cols() const noexcept { return n_ - k_; }
  const std::vector<Complex>& values() const noexcept { return values_; }
  /// 1-based (r, s).
  Complex at(int r, int s) const;

  /// Largest coordinatewise modulus difference.
  friend double distance(const TorusPoint& a, const TorusPoint& b);

private:
  int k_;
  int n_;
  std::vector<Complex> values_;
};

/// Index of x_{r,s} in a TorusPoint / in the variables of L_q.
std::size_t poset_index(int k, int n, int r, int s);

/// Superpotential on Plücker coordinates,
/// sum_{i != n-k} D_{i+1..i+k-1, i+k+1} / D_{i+1..i+k} + q D_{n-k+1..n-1, 1} / D_{n-k+1..n}.
/// Throws OutsidePiCircle if a cyclic-interval coordinate vanishes.
Complex f_q_eval(const PluckerVector& p, Complex q, const Tolerance& tol = {});

/// Sum over covering relations u < v of the poset [k] x [n-k] with an added
/// minimum labeled 1 and maximum labeled q of label(v) / label(u).
/// Variables: x_{r,s} row-major, then q last.
LaurentPolynomial build_l_q(int k, int n);

Complex l_q_eval(const LaurentPolynomial& l, const TorusPoint& x, Complex q);

/// Partials with respect to every x_{r,s} (not q), in poset_index order.
std::vector<LaurentPolynomial> laurent_gradient(const LaurentPolynomial& l);

std::vector<Complex> gradient_at(const std::vector<LaurentPolynomial>& grad, const TorusPoint& x, Complex q);

/// Numerator and denominator subsets of x_{r,s} in the torus chart:
/// [1, k-r] u [k-r+s+1, k+s] over [1, k-r+1] u [k-r+s+1, k+s-1].
std::pair<Subset, Subset> chart_subsets(int k, int n, int r, int s);

/// Torus coordinates of a point. Throws ChartUndefined naming the vanishing
/// Plücker index.
TorusPoint chart_coords(const PluckerVector& p, const Tolerance& tol = {});

struct CriticalPoint {
  TorusPoint x;
  /// Largest partial derivative modulus at x.
  double residual = 0.0;
};

struct CriticalSearch {
  std::vector<CriticalPoint> points;  // sorted by coordinate tuple, deduplicated
  int starts = 0;
  int converged = 0;
  int dropped = 0;  // starts that did not converge
};

/// Damped Newton on grad L_q = 0 with exact Hessian. Converged means every
/// partial below 1e-10. Returns nullopt on divergence.
std::optional<TorusPoint> newton_critical(const LaurentPolynomial& l, const TorusPoint& start, Complex q);

/// Critical points of L_q found from the chart coordinates of every
/// chart-visible sigma_q fixed point plus `extra_starts` random torus starts
/// (log-modulus uniform in [-1, 1], uniform phase), deduplicated at 1e-6.
CriticalSearch find_critical_points(int k, int n, Complex q, int extra_starts, std::uint64_t seed);

struct CorrespondenceReport {
  int fixed_points = 0;
  int visible = 0;
  int invisible = 0;
  double max_fixed_gradient = 0.0;  // over visible fixed points
  int critical_found = 0;
  int unmatched = 0;               // critical points far from every fixed point
  double max_match_distance = 0.0;
  bool pass = false;
};

/// Every chart-visible sigma_t fixed point is critical for L_t (gradient
/// below 1e-8) and every Newton critical point is the chart image of a fixed
/// point (within 1e-6).
CorrespondenceReport verify_correspondence(int k, int n, Complex t, int extra_starts = 20, std::uint64_t seed = 1);

}  // namespace grcyc

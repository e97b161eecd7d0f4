#pragma once

#include <span>
#include <vector>

#include "grcyc/linalg.hpp"
#include "grcyc/subset.hpp"

namespace grcyc {

/// The moment curve f_k: R -> R^k. Odd k: (1, cos t, sin t, ...,
/// cos((k-1)t/2), sin((k-1)t/2)); even k: (cos(t/2), sin(t/2), cos(3t/2), ...).
RealVector moment_curve(int k, double theta);

/// 2^floor((k-1)^2/2) * prod_{r<s} sin((theta_s - theta_r)/2).
double trig_vandermonde_formula(std::span<const double> thetas);

/// Literal determinant of the k x k matrix with columns f_k(theta_j).
double trig_vandermonde_direct(std::span<const double> thetas);

/// Formula value, after checking it against the literal determinant to
/// 1e-9 relative; a mismatch throws std::logic_error.
double trig_vandermonde_det(std::span<const double> thetas);

/// k x n matrix with columns f_k(theta + 2 pi j / n), j = 1..n. Represents
/// the totally positive cyclic fixed point for every theta.
Matrix v0_matrix(int k, int n, double theta = 0.0);

/// prod_{r<s} sin((i_s - i_r) pi / n). Requires |I| = k < n.
double v0_plucker_formula(int k, int n, const Subset& subset);

}  // namespace grcyc

#pragma once

#include <vector>

#include "grcyc/cyclic_shift.hpp"
#include "grcyc/torus.hpp"

namespace grcyc {

/// All n cyclic-interval coordinates exceed zero_eps in modulus.
bool in_pi_circle(const PluckerVector& p, const Tolerance& tol = {});

/// Column j of the result pairs to 1 with column j of `a` and to 0 with
/// columns j+1, ..., j+k-1 (mod n), under the standard form on C^k.
/// Throws OutsidePiCircle if a local system is singular.
Matrix right_twist(const Matrix& a, const Tolerance& tol = {});

/// As right_twist, with columns j-1, ..., j-k+1. Inverse of right_twist on points.
Matrix left_twist(const Matrix& a, const Tolerance& tol = {});

PluckerVector right_twist(const PluckerVector& p, const Tolerance& tol = {});
PluckerVector left_twist(const PluckerVector& p, const Tolerance& tol = {});

/// sigma^k(p) for the untwisted shift sigma = sigma_1.
PluckerVector sigma_power(const PluckerVector& p, int times);

/// tau^2(p) and sigma^k(p) agree modulo column rescaling.
bool periodicity_check(const PluckerVector& p, const Tolerance& tol = {});

/// S = S^{-1} up to 1e-8 nearest pairing.
bool inversion_closed(const std::vector<Complex>& roots, double tol = 1e-8);

struct TwistCandidate {
  FixedPoint fixed;
  double twist_residual = 0.0;  // projective distance from tau(V_S) to V_S
  bool twist_fixed = false;     // residual <= 1e-8
};

/// The sigma_t fixed points whose root set is closed under inversion, each
/// checked against the twist directly.
std::vector<TwistCandidate> twist_fixed_candidates(int k, int n, Complex t);

}  // namespace grcyc

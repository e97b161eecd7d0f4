#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "grcyc/plucker.hpp"

namespace grcyc {

/// Number of sign changes among entries with |entry| > zero_eps.
/// A negative zero_eps selects the default 1e-10 * max |entry|.
int sign_variation(std::span<const double> v, double zero_eps = -1.0);

/// Real Plücker coordinates after removing the global phase. Throws
/// NotRealizable if some imaginary part stays above abs_eps.
std::vector<double> realize_real(const PluckerVector& p, const Tolerance& tol = {});

/// Every coordinate >= -abs_eps (TNN) or > abs_eps (TP), up to one global
/// sign. Non-realizable points are neither.
bool is_tnn(const PluckerVector& p, const Tolerance& tol = {});
bool is_tp(const PluckerVector& p, const Tolerance& tol = {});

/// Real k x n matrix spanning a point with real Plücker coordinates.
RealMatrix real_representative(const PluckerVector& p, const Tolerance& tol = {});

struct GkReport {
  int samples = 0;
  int max_variation = 0;
  int bound = 0;  // k - 1
  bool pass = true;
  /// A sampled vector whose variation exceeds k - 1, if one was found.
  std::optional<std::vector<double>> witness;
};

/// Samples random real vectors in the subspace and records the largest sign
/// variation. A pass is only a necessary condition for total nonnegativity;
/// a witness certifies the point is not TNN. Throws NotRealizable.
GkReport gk_sample_check(const PluckerVector& p, int samples, std::uint64_t seed, const Tolerance& tol = {});

/// |arg z| <= (k-1) pi / (n-1) (+1e-12). Throws ZeroInput for z = 0.
bool argument_bound_holds(Complex z, int k, int n);

}  // namespace grcyc

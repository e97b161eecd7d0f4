#pragma once

#include <vector>

#include "grcyc/cyclic_shift.hpp"
#include "grcyc/peterson.hpp"

namespace grcyc {

/// Bialternant det(z_r^(lambda_{k+1-s}+s-1)) / det(z_r^(s-1)).
/// Throws CoincidentPoints if two points are closer than 1e-6.
Complex schur_eval(const Partition& lambda, const std::vector<Complex>& zs);

/// D_{lambda_k+1, lambda_{k-1}+2, ..., lambda_1+k}(V_S) / D_{1..k}(V_S).
/// Throws ZeroDenominator when D_{1..k}(V_S) vanishes.
Complex schur_via_plucker(const Partition& lambda, const RootSet& s);

/// Same ratio on an already computed V_S.
Complex schur_via_plucker(const Partition& lambda, const PluckerVector& p);

/// t^(|lambda|/n) prod_{r<s} sin((lambda_r - lambda_s + s - r) pi / n) / sin((s - r) pi / n).
double schur_sine_formula(const Partition& lambda, double t = 1.0);

/// Subset {lambda_k + 1, lambda_{k-1} + 2, ..., lambda_1 + k}.
Subset schur_subset(const Partition& lambda);

struct ModulusReport {
  Complex value;
  double modulus = 0.0;
  double bound = 0.0;
  bool holds = false;
};

/// |s_lambda(zs)| <= s_lambda(S_0) + 1e-9, for distinct zs with equal n-th
/// powers and |z_1| = 1. Throws InvalidRoots.
ModulusReport modulus_inequality_check(const Partition& lambda, const std::vector<Complex>& zs);

}  // namespace grcyc

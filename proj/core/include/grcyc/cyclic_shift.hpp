#pragma once

#include <optional>
#include <vector>

#include "grcyc/plucker.hpp"

namespace grcyc {

/// k distinct n-th roots of (-1)^(k-1) t: the data of the fixed point V_S.
struct RootSet {
  int k = 0;
  int n = 0;
  Complex t{1.0, 0.0};
  std::vector<Complex> roots;
};

/// Validates size, pairwise distinctness (> zero_eps apart) and
/// z^n = (-1)^(k-1) t to 1e-9 relative. Throws InvalidRoots.
RootSet make_root_set(int k, int n, Complex t, std::vector<Complex> roots, const Tolerance& tol = {});

/// (-1)^(k-1) t.
Complex shift_constant(int k, Complex t);

/// n x n matrix of v -> (v_2, ..., v_n, (-1)^(k-1) t v_1). Throws ZeroParameter.
Matrix sigma_t_matrix(int k, int n, Complex t);

/// Index rotation form: D_I(result) = t^[n in I] D_{I+1}(p).
PluckerVector sigma_t_on_plucker(const PluckerVector& p, Complex t);

/// Projective distance between sigma_t(p) and p.
double fixedness_residual(const PluckerVector& p, Complex t);

/// All n roots of z^n = (-1)^(k-1) t, ascending principal argument in (-pi, pi].
std::vector<Complex> shift_roots(int k, int n, Complex t);

struct RootData {
  std::vector<Complex> roots;
  /// t^(1/n) S_0, present only for real positive t.
  std::optional<RootSet> s0;
};

RootData roots_and_s0(int k, int n, Complex t);

/// k x n matrix with rows (1, z, ..., z^(n-1)).
Matrix power_matrix(const std::vector<Complex>& zs, int n);

PluckerVector v_s(const RootSet& s);

struct FixedPoint {
  RootSet roots;
  /// 1-based positions of the chosen roots in shift_roots order.
  Subset root_indices;
  PluckerVector point;
};

/// The C(n,k) fixed points of sigma_t, lexicographic in root positions.
std::vector<FixedPoint> enumerate_fixed_points(int k, int n, Complex t);

/// The unique totally nonnegative fixed point for t > 0, from
/// D_I = t^(sum I / n) prod_{r<s} sin((i_s - i_r) pi / n).
/// Throws NonPositiveParameter.
PluckerVector tnn_fixed_point(int k, int n, double t);

/// Totally nonnegative point containing (1, z, ..., z^(n-1)), for
/// |arg z| <= (k-1) pi / (n-1). Throws ArgumentOutOfRange / ZeroInput.
PluckerVector remark_subspace(Complex z, int k, int n);

/// Image of the row span under exp(s sigma), sigma = sigma_1 for this k,
/// computed in the eigenbasis (1, z, ..., z^(n-1)) of sigma.
PluckerVector flow(const PluckerVector& p, double s);

}  // namespace grcyc

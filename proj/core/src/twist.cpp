#include "grcyc/twist.hpp"

#include <algorithm>
#include <cmath>

namespace grcyc {

bool in_pi_circle(const PluckerVector& p, const Tolerance& tol) {
  const int n = p.n();
  const int k = p.k();
  for (int i = 1; i <= n; ++i) {
    if (!(std::abs(p[cyclic_interval(n, i, k)]) > tol.zero_eps)) return false;
  }
  return true;
}

namespace {

Matrix twist(const Matrix& a, int direction, const Tolerance& tol) {
  require_finite(a, "twist");
  const auto k = a.rows();
  const auto n = a.cols();
  if (k < 1 || n < k) fail(ErrorCode::ShapeMismatch, "twist needs a k x n matrix with 1 <= k <= n");
  Matrix out(k, n);
  Vector e1 = Vector::Zero(k);
  e1(0) = 1.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    Matrix local(k, k);
    for (Eigen::Index m = 0; m < k; ++m) {
      const Eigen::Index col = ((j + direction * m) % n + n) % n;
      local.row(m) = a.col(col).transpose();
    }
    const auto x = solve_square(local, e1, tol.zero_eps);
    if (!x) fail(ErrorCode::OutsidePiCircle, "columns around " + std::to_string(j + 1) + " are dependent");
    out.col(j) = *x;
  }
  return out;
}

}  // namespace

Matrix right_twist(const Matrix& a, const Tolerance& tol) { return twist(a, +1, tol); }
Matrix left_twist(const Matrix& a, const Tolerance& tol) { return twist(a, -1, tol); }

PluckerVector right_twist(const PluckerVector& p, const Tolerance& tol) {
  return plucker_from_matrix(right_twist(representative_matrix(p), tol), tol);
}

PluckerVector left_twist(const PluckerVector& p, const Tolerance& tol) {
  return plucker_from_matrix(left_twist(representative_matrix(p), tol), tol);
}

PluckerVector sigma_power(const PluckerVector& p, int times) {
  PluckerVector out = p;
  for (int i = 0; i < times; ++i) out = sigma_t_on_plucker(out, Complex(1.0, 0.0));
  return out;
}

bool periodicity_check(const PluckerVector& p, const Tolerance& tol) {
  const PluckerVector tau2 = right_twist(right_twist(p, tol), tol);
  return torus_equivalent(tau2, sigma_power(p, p.k()), tol);
}

bool inversion_closed(const std::vector<Complex>& roots, double tol) {
  return std::all_of(roots.begin(), roots.end(), [&](Complex z) {
    const Complex inv = 1.0 / z;
    return std::any_of(roots.begin(), roots.end(), [&](Complex w) { return std::abs(w - inv) <= tol; });
  });
}

std::vector<TwistCandidate> twist_fixed_candidates(int k, int n, Complex t) {
  std::vector<TwistCandidate> out;
  for (auto& fp : enumerate_fixed_points(k, n, t)) {
    if (!inversion_closed(fp.roots.roots)) continue;
    const Matrix a = power_matrix(fp.roots.roots, n);
    const PluckerVector twisted = plucker_from_matrix(right_twist(a));
    TwistCandidate c{std::move(fp), 0.0, false};
    c.twist_residual = projective_distance(twisted, c.fixed.point);
    c.twist_fixed = c.twist_residual <= 1e-8;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace grcyc

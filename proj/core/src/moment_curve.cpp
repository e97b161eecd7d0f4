#include "grcyc/moment_curve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace grcyc {

RealVector moment_curve(int k, double theta) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "moment curve needs k >= 1");
  RealVector v(k);
  Eigen::Index pos = 0;
  if (k % 2 == 1) {
    v(pos++) = 1.0;
    for (int m = 1; m <= (k - 1) / 2; ++m) {
      v(pos++) = std::cos(m * theta);
      v(pos++) = std::sin(m * theta);
    }
  } else {
    for (int m = 1; m <= k - 1; m += 2) {
      v(pos++) = std::cos(0.5 * m * theta);
      v(pos++) = std::sin(0.5 * m * theta);
    }
  }
  return v;
}

double trig_vandermonde_formula(std::span<const double> thetas) {
  const auto k = static_cast<long>(thetas.size());
  double value = std::ldexp(1.0, static_cast<int>(((k - 1) * (k - 1)) / 2));
  for (std::size_t r = 0; r < thetas.size(); ++r)
    for (std::size_t s = r + 1; s < thetas.size(); ++s) value *= std::sin(0.5 * (thetas[s] - thetas[r]));
  return value;
}

double trig_vandermonde_direct(std::span<const double> thetas) {
  const int k = static_cast<int>(thetas.size());
  if (k == 0) return 1.0;
  RealMatrix m(k, k);
  for (int j = 0; j < k; ++j) m.col(j) = moment_curve(k, thetas[static_cast<std::size_t>(j)]);
  return m.partialPivLu().determinant();
}

double trig_vandermonde_det(std::span<const double> thetas) {
  const double formula = trig_vandermonde_formula(thetas);
  if (thetas.empty()) return formula;
  const double direct = trig_vandermonde_direct(thetas);
  const double scale = std::ldexp(1.0, static_cast<int>(((thetas.size() - 1) * (thetas.size() - 1)) / 2));
  if (std::abs(formula - direct) > 1e-9 * std::max({1.0, std::abs(formula), scale})) {
    throw std::logic_error("trigonometric Vandermonde mismatch: formula " + std::to_string(formula) +
                           " vs determinant " + std::to_string(direct));
  }
  return formula;
}

Matrix v0_matrix(int k, int n, double theta) {
  if (k < 1 || n < k) fail(ErrorCode::InvalidArgument, "need 1 <= k <= n");
  Matrix a(k, n);
  for (int j = 1; j <= n; ++j) a.col(j - 1) = moment_curve(k, theta + 2.0 * kPi * j / n).cast<Complex>();
  return a;
}

double v0_plucker_formula(int k, int n, const Subset& subset) {
  if (k < 1 || k >= n) fail(ErrorCode::InvalidArgument, "sine-product formula needs 1 <= k < n");
  if (subset.n() != n || subset.size() != k) fail(ErrorCode::ShapeMismatch, "subset must be a k-subset of {1..n}");
  double value = 1.0;
  for (int r = 0; r < k; ++r)
    for (int s = r + 1; s < k; ++s) value *= std::sin((subset[s] - subset[r]) * kPi / n);
  return value;
}

}  // namespace grcyc

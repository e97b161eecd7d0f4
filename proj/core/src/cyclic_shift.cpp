#include "grcyc/cyclic_shift.hpp"

#include <algorithm>
#include <cmath>

#include "grcyc/moment_curve.hpp"
#include "grcyc/positivity.hpp"

namespace grcyc {

namespace {

void check_shape(int k, int n) {
  if (k < 1 || n < k) fail(ErrorCode::InvalidArgument, "need 1 <= k <= n");
}

double normalize_angle(double theta) {
  theta = std::remainder(theta, 2.0 * kPi);
  if (theta <= -kPi) theta += 2.0 * kPi;
  return theta;
}

}  // namespace

Complex shift_constant(int k, Complex t) { return (k % 2 == 1) ? t : -t; }

RootSet make_root_set(int k, int n, Complex t, std::vector<Complex> roots, const Tolerance& tol) {
  check_shape(k, n);
  if (t == Complex(0.0, 0.0)) fail(ErrorCode::ZeroParameter, "t must be nonzero");
  if (static_cast<int>(roots.size()) != k) fail(ErrorCode::InvalidRoots, "root set must have k elements");
  const Complex w = shift_constant(k, t);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    require_finite(roots[i], "root");
    if (std::abs(std::pow(roots[i], n) - w) > 1e-9 * std::abs(w)) {
      fail(ErrorCode::InvalidRoots, "root does not satisfy z^n = (-1)^(k-1) t");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (!(std::abs(roots[i] - roots[j]) > tol.zero_eps)) fail(ErrorCode::InvalidRoots, "roots must be distinct");
    }
  }
  return RootSet{k, n, t, std::move(roots)};
}

Matrix sigma_t_matrix(int k, int n, Complex t) {
  check_shape(k, n);
  if (t == Complex(0.0, 0.0)) fail(ErrorCode::ZeroParameter, "t must be nonzero");
  Matrix m = Matrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) m(i, i + 1) = 1.0;
  m(n - 1, 0) += shift_constant(k, t);
  return m;
}

PluckerVector sigma_t_on_plucker(const PluckerVector& p, Complex t) {
  if (t == Complex(0.0, 0.0)) fail(ErrorCode::ZeroParameter, "t must be nonzero");
  const int n = p.n();
  std::vector<Complex> out;
  out.reserve(p.size());
  for (const auto& s : all_subsets(n, p.k())) {
    const Complex c = p[s.rotated(1)];
    out.push_back(s.contains(n) ? t * c : c);
  }
  return PluckerVector(p.k(), n, std::move(out));
}

double fixedness_residual(const PluckerVector& p, Complex t) {
  return projective_distance(sigma_t_on_plucker(p, t), p);
}

std::vector<Complex> shift_roots(int k, int n, Complex t) {
  check_shape(k, n);
  if (t == Complex(0.0, 0.0)) fail(ErrorCode::ZeroParameter, "t must be nonzero");
  const Complex w = shift_constant(k, t);
  const double radius = std::pow(std::abs(w), 1.0 / n);
  double base = std::arg(w);
  if (base <= -kPi) base = kPi;
  std::vector<double> angles;
  angles.reserve(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) angles.push_back(normalize_angle((base + 2.0 * kPi * m) / n));
  std::sort(angles.begin(), angles.end());
  std::vector<Complex> roots;
  roots.reserve(angles.size());
  for (double a : angles) roots.push_back(std::polar(radius, a));
  return roots;
}

RootData roots_and_s0(int k, int n, Complex t) {
  RootData data{shift_roots(k, n, t), std::nullopt};
  if (t.imag() == 0.0 && t.real() > 0.0) {
    const double radius = std::pow(t.real(), 1.0 / n);
    std::vector<Complex> s0;
    for (int m = -(k - 1); m <= k - 1; m += 2) {
      const Complex target = std::polar(radius, m * kPi / n);
      // snap to the solved root so S_0 is literally a subset of the root list
      auto it = std::min_element(data.roots.begin(), data.roots.end(), [&](Complex a, Complex b) {
        return std::abs(a - target) < std::abs(b - target);
      });
      s0.push_back(*it);
    }
    data.s0 = make_root_set(k, n, t, std::move(s0));
  }
  return data;
}

Matrix power_matrix(const std::vector<Complex>& zs, int n) {
  Matrix a(static_cast<Eigen::Index>(zs.size()), n);
  for (std::size_t r = 0; r < zs.size(); ++r) {
    Complex p(1.0, 0.0);
    for (int j = 0; j < n; ++j) {
      a(static_cast<Eigen::Index>(r), j) = p;
      p *= zs[r];
    }
  }
  return a;
}

PluckerVector v_s(const RootSet& s) { return plucker_from_matrix(power_matrix(s.roots, s.n)); }

std::vector<FixedPoint> enumerate_fixed_points(int k, int n, Complex t) {
  const auto roots = shift_roots(k, n, t);
  std::vector<FixedPoint> out;
  for (const auto& idx : all_subsets(n, k)) {
    std::vector<Complex> chosen;
    for (int i : idx.members()) chosen.push_back(roots[static_cast<std::size_t>(i - 1)]);
    RootSet rs = make_root_set(k, n, t, std::move(chosen));
    PluckerVector p = v_s(rs);
    out.push_back(FixedPoint{std::move(rs), idx, std::move(p)});
  }
  return out;
}

PluckerVector tnn_fixed_point(int k, int n, double t) {
  check_shape(k, n);
  if (!(t > 0.0)) fail(ErrorCode::NonPositiveParameter, "t must be real positive");
  if (k == n) return PluckerVector(k, n, {Complex(1.0, 0.0)});
  std::vector<Complex> coords;
  for (const auto& s : all_subsets(n, k)) {
    coords.emplace_back(std::pow(t, static_cast<double>(s.sum()) / n) * [&] {
      double v = 1.0;
      for (int r = 0; r < k; ++r)
        for (int q = r + 1; q < k; ++q) v *= std::sin((s[q] - s[r]) * kPi / n);
      return v;
    }());
  }
  return PluckerVector(k, n, std::move(coords));
}

PluckerVector remark_subspace(Complex z, int k, int n) {
  check_shape(k, n);
  if (z == Complex(0.0, 0.0)) fail(ErrorCode::ZeroInput, "z must be nonzero");
  if (!argument_bound_holds(z, k, n)) {
    fail(ErrorCode::ArgumentOutOfRange, "|arg z| exceeds (k-1) pi / (n-1)");
  }
  const double phi = std::abs(std::arg(z));
  Matrix a(k, n);
  if (phi <= 1e-15 || k == 1) {
    for (int r = 0; r < k; ++r)
      for (int s = 1; s <= n; ++s) a(r, s - 1) = std::pow(static_cast<double>(s), r);
  } else {
    const double rho = 2.0 * phi / (k - 1);
    for (int j = 0; j < n; ++j) a.col(j) = moment_curve(k, j * rho).cast<Complex>();
  }
  // undo the modulus normalization: coordinate j scaled by |z|^(j-1)
  const double mod = std::abs(z);
  for (int j = 1; j < n; ++j) a.col(j) *= std::pow(mod, j);
  return plucker_from_matrix(a);
}

PluckerVector flow(const PluckerVector& p, double s) {
  const int k = p.k();
  const int n = p.n();
  if (k == 0 || k == n) return p;
  const auto z = shift_roots(k, n, Complex(1.0, 0.0));
  const Matrix w = power_matrix(z, n).transpose();  // columns are eigenvectors
  const Matrix a = representative_matrix(p);
  // a^T = w c^T
  const Matrix c = w.partialPivLu().solve(a.transpose()).transpose();

  const auto subsets = all_subsets(n, k);
  std::vector<Complex> coeff(subsets.size());
  std::vector<Complex> exponent(subsets.size());
  double shift = -1e300;
  for (std::size_t j = 0; j < subsets.size(); ++j) {
    coeff[j] = determinant(select_columns(c, subsets[j]));
    Complex e(0.0, 0.0);
    for (int m : subsets[j].members()) e += s * z[static_cast<std::size_t>(m - 1)];
    exponent[j] = e;
    if (std::abs(coeff[j]) > 1e-300) shift = std::max(shift, e.real());
  }
  // Cauchy-Binet: D_I = sum_J det(c_J) exp(s sum_J z) D_I(V_J)
  std::vector<Complex> coords(subsets.size(), Complex(0.0, 0.0));
  for (std::size_t j = 0; j < subsets.size(); ++j) {
    if (coeff[j] == Complex(0.0, 0.0)) continue;
    const Complex weight = coeff[j] * std::exp(exponent[j] - shift);
    if (weight == Complex(0.0, 0.0)) continue;
    std::vector<Complex> zs;
    for (int m : subsets[j].members()) zs.push_back(z[static_cast<std::size_t>(m - 1)]);
    const auto minors = maximal_minors(power_matrix(zs, n));
    for (std::size_t i = 0; i < subsets.size(); ++i) coords[i] += weight * minors[i];
  }
  return PluckerVector(k, n, std::move(coords));
}

}  // namespace grcyc

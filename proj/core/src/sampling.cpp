#include "grcyc/sampling.hpp"

#include <algorithm>
#include <vector>

#include "grcyc/moment_curve.hpp"

namespace grcyc {

Matrix random_matrix(int k, int n, std::mt19937_64& rng) {
  if (k < 1 || n < k) fail(ErrorCode::InvalidArgument, "need 1 <= k <= n");
  std::normal_distribution<double> normal;
  Matrix a(k, n);
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < n; ++c) {
      const double re = normal(rng);
      a(r, c) = Complex(re, normal(rng));
    }
  }
  return a;
}

PluckerVector random_tp_point(int k, int n, std::mt19937_64& rng) {
  if (k < 1 || n < k) fail(ErrorCode::InvalidArgument, "need 1 <= k <= n");
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> scale(0.5, 2.0);
  std::vector<double> thetas(static_cast<std::size_t>(n));
  for (auto& th : thetas) th = angle(rng);
  std::sort(thetas.begin(), thetas.end());
  Matrix a(k, n);
  for (int j = 0; j < n; ++j) {
    const RealVector col = moment_curve(k, thetas[static_cast<std::size_t>(j)]) * scale(rng);
    for (int r = 0; r < k; ++r) a(r, j) = col(r);
  }
  return plucker_from_matrix(a);
}

}  // namespace grcyc

#include "oracles.hpp"

#include <algorithm>
#include <numeric>

#include "grcyc/sampling.hpp"
#include "grcyc/subset.hpp"

namespace oracle {

Complex leibniz_det(const Matrix& m) {
  const int k = static_cast<int>(m.rows());
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  Complex total(0.0, 0.0);
  do {
    int inversions = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    Complex term = inversions % 2 ? Complex(-1.0, 0.0) : Complex(1.0, 0.0);
    for (int i = 0; i < k; ++i) term *= m(i, perm[static_cast<std::size_t>(i)]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::vector<Complex> minors(const Matrix& a) {
  const int k = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());
  std::vector<Complex> out;
  for (const auto& s : grcyc::all_subsets(n, k)) {
    Matrix sub(k, k);
    for (int c = 0; c < k; ++c) sub.col(c) = a.col(s[c] - 1);
    out.push_back(leibniz_det(sub));
  }
  return out;
}

double scaled_mismatch(const std::vector<Complex>& p, const std::vector<Complex>& q) {
  Complex num(0.0, 0.0);
  double den = 0.0;
  double pmax = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    num += std::conj(q[i]) * p[i];
    den += std::norm(q[i]);
    pmax = std::max(pmax, std::abs(p[i]));
  }
  const Complex c = num / den;
  double worst = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) worst = std::max(worst, std::abs(p[i] - c * q[i]));
  return worst / pmax;
}

Complex central_difference(const std::function<Complex(const std::vector<Complex>&)>& f,
                           const std::vector<Complex>& x, std::size_t j, double h) {
  auto xp = x;
  auto xm = x;
  xp[j] += h;
  xm[j] -= h;
  return (f(xp) - f(xm)) / (2.0 * h);
}

std::vector<Complex> shift_row(const std::vector<Complex>& v, Complex c) {
  std::vector<Complex> out(v.begin() + 1, v.end());
  out.push_back(c * v.front());
  return out;
}

Matrix shift_rows(const Matrix& a, Complex c) {
  Matrix out(a.rows(), a.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    std::vector<Complex> row(static_cast<std::size_t>(a.cols()));
    for (Eigen::Index j = 0; j < a.cols(); ++j) row[static_cast<std::size_t>(j)] = a(r, j);
    const auto s = shift_row(row, c);
    for (Eigen::Index j = 0; j < a.cols(); ++j) out(r, j) = s[static_cast<std::size_t>(j)];
  }
  return out;
}

grcyc::PluckerVector generic_point(int k, int n, std::mt19937_64& rng) {
  for (;;) {
    auto p = grcyc::plucker_from_matrix(grcyc::random_matrix(k, n, rng));
    const bool generic = std::all_of(p.coords().begin(), p.coords().end(), [](Complex z) { return std::abs(z) > 1e-3; });
    if (generic) return p;
  }
}

}  // namespace oracle

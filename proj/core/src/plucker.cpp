#include "grcyc/plucker.hpp"

#include <algorithm>
#include <cmath>

namespace grcyc {

namespace {

std::size_t canonical_pivot(const std::vector<Complex>& c) {
  double best = 0.0;
  for (const auto& z : c) best = std::max(best, std::abs(z));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (std::abs(c[i]) >= best * (1.0 - 1e-12)) return i;
  }
  return 0;
}

}  // namespace

PluckerVector::PluckerVector(int k, int n, std::vector<Complex> coords)
    : k_(k), n_(n), coords_(std::move(coords)) {
  if (k_ < 0 || n_ < k_) fail(ErrorCode::InvalidArgument, "need 0 <= k <= n");
  if (coords_.size() != binomial(n_, k_)) {
    fail(ErrorCode::InvalidArgument, "coordinate count must be C(n,k)");
  }
  for (const auto& z : coords_) require_finite(z, "PluckerVector");
  pivot_ = canonical_pivot(coords_);
  const Complex scale = coords_[pivot_];
  if (scale == Complex(0.0, 0.0)) fail(ErrorCode::InvalidArgument, "Plucker vector is identically zero");
  for (auto& z : coords_) z /= scale;
  coords_[pivot_] = Complex(1.0, 0.0);
}

Complex PluckerVector::operator[](const Subset& s) const {
  if (s.n() != n_ || s.size() != k_) fail(ErrorCode::ShapeMismatch, "subset shape does not match point");
  return coords_[subset_rank(s)];
}

Subset PluckerVector::pivot_subset() const { return all_subsets(n_, k_).at(pivot_); }

Complex PluckerVector::ordered(const std::vector<int>& columns) const {
  std::vector<int> v = columns;
  int sign = 1;
  // insertion sort counting transpositions
  for (std::size_t i = 1; i < v.size(); ++i) {
    for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
      std::swap(v[j - 1], v[j]);
      sign = -sign;
    }
  }
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) return Complex(0.0, 0.0);
  return static_cast<double>(sign) * (*this)[Subset(n_, std::move(v))];
}

std::vector<Complex> maximal_minors(const Matrix& a) {
  const int k = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());
  if (k > n) fail(ErrorCode::ShapeMismatch, "matrix has more rows than columns");
  std::vector<Complex> out;
  out.reserve(binomial(n, k));
  for (const auto& s : all_subsets(n, k)) out.push_back(determinant(select_columns(a, s)));
  return out;
}

PluckerVector plucker_from_matrix(const Matrix& a, const Tolerance& tol) {
  require_finite(a, "plucker_from_matrix");
  auto minors = maximal_minors(a);
  double best = 0.0;
  for (const auto& z : minors) best = std::max(best, std::abs(z));
  if (!(best > tol.zero_eps * row_norm_product(a))) {
    fail(ErrorCode::RankDeficient, "every maximal minor vanishes");
  }
  return PluckerVector(static_cast<int>(a.rows()), static_cast<int>(a.cols()), std::move(minors));
}

Matrix representative_matrix(const PluckerVector& p) {
  const int k = p.k();
  const int n = p.n();
  const Subset piv = p.pivot_subset();
  const Complex denom = p.at(p.pivot());
  Matrix a = Matrix::Zero(k, n);
  for (int r = 0; r < k; ++r) {
    for (int j = 1; j <= n; ++j) {
      std::vector<int> cols = piv.members();
      cols[static_cast<std::size_t>(r)] = j;
      a(r, j - 1) = p.ordered(cols) / denom;
    }
  }
  return a;
}

double projective_distance(const PluckerVector& p, const PluckerVector& q) {
  if (p.k() != q.k() || p.n() != q.n()) fail(ErrorCode::ShapeMismatch, "points lie in different Grassmannians");
  Complex overlap(0.0, 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) overlap += std::conj(q.at(i)) * p.at(i);
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0, 0.0);
  double worst = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) worst = std::max(worst, std::abs(p.at(i) - phase * q.at(i)));
  return worst;
}

bool projective_equal(const PluckerVector& p, const PluckerVector& q, const Tolerance& tol) {
  return projective_distance(p, q) <= tol.abs_eps + tol.rel_eps;
}

PluckerVector orthogonal_complement(const PluckerVector& p) {
  std::vector<Complex> coords;
  coords.reserve(p.size());
  for (const auto& s : all_subsets(p.n(), p.n() - p.k())) coords.push_back(p[s.complement()]);
  return PluckerVector(p.n() - p.k(), p.n(), std::move(coords));
}

Matrix alternating_orthogonal_basis(const Matrix& a) {
  const Eigen::Index n = a.cols();
  Matrix twisted = a;
  for (Eigen::Index j = 1; j < n; j += 2) twisted.col(j) *= -1.0;
  Eigen::FullPivLU<Matrix> lu(twisted);
  return lu.kernel().transpose();
}

Matrix apply_row_span_map(const Matrix& m, const Matrix& a, const Tolerance& tol) {
  if (m.rows() != m.cols() || m.cols() != a.cols()) fail(ErrorCode::ShapeMismatch, "map must be n x n");
  if (!(std::abs(determinant(m)) > tol.zero_eps)) fail(ErrorCode::SingularMap, "row-span map is singular");
  return a * m.transpose();
}

PluckerVector apply_row_span_map(const Matrix& m, const PluckerVector& p, const Tolerance& tol) {
  return plucker_from_matrix(apply_row_span_map(m, representative_matrix(p), tol), tol);
}

double plucker_relation_residual(const PluckerVector& p) {
  const int k = p.k();
  const int n = p.n();
  if (k < 2 || n - k < 2) return 0.0;
  double worst = 0.0;
  for (const auto& s : all_subsets(n, k - 2)) {
    std::vector<int> rest = s.complement().members();
    const auto m = rest.size();
    for (std::size_t ia = 0; ia < m; ++ia)
      for (std::size_t ib = ia + 1; ib < m; ++ib)
        for (std::size_t ic = ib + 1; ic < m; ++ic)
          for (std::size_t id = ic + 1; id < m; ++id) {
            auto d = [&](int x, int y) {
              std::vector<int> cols = s.members();
              cols.push_back(x);
              cols.push_back(y);
              return p.ordered(cols);
            };
            const int a = rest[ia], b = rest[ib], c = rest[ic], e = rest[id];
            const Complex r = d(a, c) * d(b, e) - d(a, b) * d(c, e) - d(a, e) * d(b, c);
            worst = std::max(worst, std::abs(r));
          }
  }
  return worst;
}

}  // namespace grcyc

namespace grcyc {

bool contains_vector(const PluckerVector& p, const Vector& v, double rel_tol) {
  if (v.size() != p.n()) fail(ErrorCode::ShapeMismatch, "vector length must be n");
  if (p.k() == p.n()) return true;
  Matrix a = representative_matrix(p);
  Matrix aug(p.k() + 1, p.n());
  aug.topRows(p.k()) = a;
  aug.row(p.k()) = v.transpose() / std::max(v.norm(), 1e-300);
  Eigen::JacobiSVD<Matrix> svd(aug);
  const auto& sv = svd.singularValues();
  return sv(p.k()) <= rel_tol * std::max(1.0, sv(0));
}

}  // namespace grcyc

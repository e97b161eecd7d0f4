#include "grcyc/peterson.hpp"

#include <cmath>
#include <functional>

namespace grcyc {

Partition::Partition(int k, int n, std::vector<int> parts) : k_(k), n_(n), parts_(std::move(parts)) {
  if (k_ < 0 || n_ < k_) fail(ErrorCode::InvalidArgument, "need 0 <= k <= n");
  if (static_cast<int>(parts_.size()) > k_) fail(ErrorCode::InvalidArgument, "partition has more than k parts");
  parts_.resize(static_cast<std::size_t>(k_), 0);
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) fail(ErrorCode::InvalidArgument, "partition parts must be nonnegative");
    if (parts_[i] > n_ - k_) fail(ErrorCode::InvalidArgument, "partition does not fit in the k x (n-k) box");
    if (i > 0 && parts_[i] > parts_[i - 1]) fail(ErrorCode::InvalidArgument, "partition parts must weakly decrease");
  }
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::vector<Partition> all_partitions(int k, int n) {
  std::vector<Partition> out;
  std::vector<int> parts(static_cast<std::size_t>(k), 0);
  std::function<void(int, int)> rec = [&](int pos, int cap) {
    if (pos == k) {
      out.emplace_back(k, n, parts);
      return;
    }
    for (int v = 0; v <= cap; ++v) {
      parts[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, n - k);
  return out;
}

Partition partition_complement(const Partition& lambda) {
  const int k = lambda.k();
  std::vector<int> parts(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) parts[static_cast<std::size_t>(i - 1)] = lambda.n() - k - lambda[k + 1 - i];
  return Partition(k, lambda.n(), std::move(parts));
}

Complex elementary_symmetric(int j, const std::vector<Complex>& zs) {
  const int k = static_cast<int>(zs.size());
  if (j < 0 || j > k) return Complex(0.0, 0.0);
  // e[i] holds e_i of the prefix processed so far
  std::vector<Complex> e(static_cast<std::size_t>(k) + 1, Complex(0.0, 0.0));
  e[0] = 1.0;
  for (const auto& z : zs)
    for (std::size_t i = static_cast<std::size_t>(k); i >= 1; --i) e[i] += z * e[i - 1];
  return e[static_cast<std::size_t>(j)];
}

ToeplitzPoint identity_point(int k, int n) {
  if (k < 0 || n < k) fail(ErrorCode::InvalidArgument, "need 0 <= k <= n");
  return ToeplitzPoint{ToeplitzPoint::Kind::Identity, k, n, {}, Matrix::Identity(n, n)};
}

ToeplitzPoint toeplitz_u(int k, int n, const std::vector<Complex>& zs) {
  if (k < 1 || n < k) fail(ErrorCode::InvalidArgument, "need 1 <= k <= n");
  if (static_cast<int>(zs.size()) != k) fail(ErrorCode::InvalidRoots, "need exactly k values");
  const Complex w = std::pow(zs.front(), n);
  for (std::size_t i = 0; i < zs.size(); ++i) {
    require_finite(zs[i], "toeplitz_u");
    if (std::abs(zs[i]) == 0.0) fail(ErrorCode::InvalidRoots, "values must be nonzero");
    if (std::abs(std::pow(zs[i], n) - w) > 1e-9 * std::abs(w)) {
      fail(ErrorCode::InvalidRoots, "values must have equal n-th powers");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (!(std::abs(zs[i] - zs[j]) > 1e-10 * std::abs(zs[i]))) fail(ErrorCode::InvalidRoots, "values must be distinct");
    }
  }
  std::vector<Complex> e(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) e[static_cast<std::size_t>(j)] = elementary_symmetric(j, zs);
  Matrix m = Matrix::Zero(n, n);
  for (int r = 0; r < n; ++r)
    for (int s = r; s < n; ++s) m(r, s) = e[static_cast<std::size_t>(s - r)];
  return ToeplitzPoint{ToeplitzPoint::Kind::Generic, k, n, zs, std::move(m)};
}

PluckerVector gamma_embed(const ToeplitzPoint& g) {
  const int k = g.k;
  const int n = g.n;
  std::vector<int> tail;
  for (int c = k + 1; c <= n; ++c) tail.push_back(c);
  const Subset cols(n, tail);
  std::vector<Complex> coords;
  coords.reserve(binomial(n, k));
  for (const auto& s : all_subsets(n, k)) {
    coords.push_back(determinant(select_columns(select_rows(g.matrix, s.complement()), cols)));
  }
  return PluckerVector(k, n, std::move(coords));
}

Complex q_value(const ToeplitzPoint& g) {
  if (g.kind == ToeplitzPoint::Kind::Identity) return Complex(0.0, 0.0);
  const Complex p = std::pow(g.zs.front(), g.n);
  return (g.k % 2 == 1) ? p : -p;
}

}  // namespace grcyc

#include "grcyc/torus.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>

namespace grcyc {

namespace {

using Column = std::vector<std::int64_t>;

std::int64_t checked_axpy(std::int64_t y, std::int64_t q, std::int64_t x) {
  std::int64_t prod = 0;
  std::int64_t out = 0;
  if (__builtin_mul_overflow(q, x, &prod) || __builtin_sub_overflow(y, prod, &out)) {
    fail(ErrorCode::InvalidArgument, "integer overflow in torus kernel elimination");
  }
  return out;
}

// columns j of (b, u) <- columns j - q * columns p
void column_axpy(std::vector<Column>& b, std::vector<Column>& u, std::size_t j, std::size_t p, std::int64_t q) {
  for (std::size_t r = 0; r < b[j].size(); ++r) b[j][r] = checked_axpy(b[j][r], q, b[p][r]);
  for (std::size_t r = 0; r < u[j].size(); ++r) u[j][r] = checked_axpy(u[j][r], q, u[p][r]);
}

std::vector<ExponentVector> compute_basis(int k, int n) {
  const auto subsets = all_subsets(n, k);
  const std::size_t cols = subsets.size();
  const std::size_t rows = static_cast<std::size_t>(n) + 1;

  // b holds the weight matrix column by column: b[I] = (indicator of I, 1).
  std::vector<Column> b(cols, Column(rows, 0));
  std::vector<Column> u(cols, Column(cols, 0));
  for (std::size_t c = 0; c < cols; ++c) {
    for (int m : subsets[c].members()) b[c][static_cast<std::size_t>(m - 1)] = 1;
    b[c][rows - 1] = 1;
    u[c][c] = 1;
  }

  std::size_t pivot = 0;
  for (std::size_t r = 0; r < rows && pivot < cols; ++r) {
    while (true) {
      std::size_t best = cols;
      for (std::size_t c = pivot; c < cols; ++c) {
        if (b[c][r] != 0 && (best == cols || std::llabs(b[c][r]) < std::llabs(b[best][r]))) best = c;
      }
      if (best == cols) break;
      std::swap(b[pivot], b[best]);
      std::swap(u[pivot], u[best]);
      bool clean = true;
      for (std::size_t c = pivot + 1; c < cols; ++c) {
        if (b[c][r] == 0) continue;
        column_axpy(b, u, c, pivot, b[c][r] / b[pivot][r]);
        if (b[c][r] != 0) clean = false;
      }
      if (clean) {
        ++pivot;
        break;
      }
    }
  }

  std::vector<ExponentVector> basis;
  for (std::size_t c = pivot; c < cols; ++c) {
    ExponentVector e;
    for (std::size_t i = 0; i < cols; ++i) {
      if (u[c][i] != 0) e.emplace_back(i, u[c][i]);
    }
    basis.push_back(std::move(e));
  }
  return basis;
}

double monomial_mismatch(const ExponentVector& e, const std::vector<Complex>& log_ratio) {
  Complex acc(0.0, 0.0);
  double weight = 1.0;
  for (const auto& [idx, ex] : e) {
    acc += static_cast<double>(ex) * log_ratio[idx];
    weight += static_cast<double>(std::llabs(ex));
  }
  return std::abs(std::exp(acc) - 1.0) / weight;
}

}  // namespace

std::shared_ptr<const std::vector<ExponentVector>> torus_invariant_basis(int k, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const std::vector<ExponentVector>>> cache;
  if (k < 0 || n < k) fail(ErrorCode::InvalidArgument, "need 0 <= k <= n");
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{k, n}];
  if (!slot) slot = std::make_shared<const std::vector<ExponentVector>>(compute_basis(k, n));
  return slot;
}

double torus_residual(const PluckerVector& p, const PluckerVector& q, const Tolerance& tol) {
  if (p.k() != q.k() || p.n() != q.n()) fail(ErrorCode::ShapeMismatch, "points lie in different Grassmannians");
  std::vector<Complex> log_ratio(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (std::abs(p.at(i)) <= tol.zero_eps || std::abs(q.at(i)) <= tol.zero_eps) {
      fail(ErrorCode::ZeroCoordinate, "torus comparison needs every Plucker coordinate nonzero");
    }
    log_ratio[i] = std::log(p.at(i) / q.at(i));
  }
  double worst = 0.0;
  for (const auto& e : *torus_invariant_basis(p.k(), p.n())) worst = std::max(worst, monomial_mismatch(e, log_ratio));
  return worst;
}

bool torus_equivalent(const PluckerVector& p, const PluckerVector& q, const Tolerance& tol) {
  return torus_residual(p, q, tol) <= std::max(tol.abs_eps, tol.rel_eps);
}

}  // namespace grcyc

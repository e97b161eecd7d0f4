#include "grcyc/schur.hpp"

#include <cmath>

namespace grcyc {

namespace {

void require_separated(const std::vector<Complex>& zs) {
  for (std::size_t i = 0; i < zs.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(zs[i] - zs[j]) < 1e-6) fail(ErrorCode::CoincidentPoints, "bialternant needs distinct points");
}

}  // namespace

Subset schur_subset(const Partition& lambda) {
  const int k = lambda.k();
  std::vector<int> members(static_cast<std::size_t>(k));
  for (int s = 1; s <= k; ++s) members[static_cast<std::size_t>(s - 1)] = lambda[k + 1 - s] + s;
  return Subset(lambda.n(), std::move(members));
}

Complex schur_eval(const Partition& lambda, const std::vector<Complex>& zs) {
  const int k = lambda.k();
  if (static_cast<int>(zs.size()) != k) fail(ErrorCode::ShapeMismatch, "need k evaluation points");
  if (k == 0) return Complex(1.0, 0.0);
  require_separated(zs);
  Matrix num(k, k);
  Matrix den(k, k);
  for (int r = 0; r < k; ++r) {
    for (int s = 1; s <= k; ++s) {
      num(r, s - 1) = std::pow(zs[static_cast<std::size_t>(r)], lambda[k + 1 - s] + s - 1);
      den(r, s - 1) = std::pow(zs[static_cast<std::size_t>(r)], s - 1);
    }
  }
  return determinant(num) / determinant(den);
}

Complex schur_via_plucker(const Partition& lambda, const PluckerVector& p) {
  if (lambda.k() != p.k() || lambda.n() != p.n()) fail(ErrorCode::ShapeMismatch, "partition box differs from point");
  std::vector<int> first;
  for (int i = 1; i <= p.k(); ++i) first.push_back(i);
  const Complex den = p[Subset(p.n(), first)];
  if (std::abs(den) <= Tolerance{}.zero_eps) fail(ErrorCode::ZeroDenominator, "D_{1..k}(V_S) vanishes");
  return p[schur_subset(lambda)] / den;
}

Complex schur_via_plucker(const Partition& lambda, const RootSet& s) {
  if (lambda.k() != s.k || lambda.n() != s.n) fail(ErrorCode::ShapeMismatch, "partition box differs from root set");
  return schur_via_plucker(lambda, v_s(s));
}

double schur_sine_formula(const Partition& lambda, double t) {
  const int k = lambda.k();
  const int n = lambda.n();
  if (!(t > 0.0)) fail(ErrorCode::NonPositiveParameter, "t must be positive");
  double value = std::pow(t, static_cast<double>(lambda.size()) / n);
  for (int r = 1; r <= k; ++r)
    for (int s = r + 1; s <= k; ++s)
      value *= std::sin((lambda[r] - lambda[s] + s - r) * kPi / n) / std::sin((s - r) * kPi / n);
  return value;
}

ModulusReport modulus_inequality_check(const Partition& lambda, const std::vector<Complex>& zs) {
  const int n = lambda.n();
  if (static_cast<int>(zs.size()) != lambda.k()) fail(ErrorCode::InvalidRoots, "need k points");
  if (zs.empty()) return ModulusReport{Complex(1.0, 0.0), 1.0, 1.0, true};
  if (std::abs(std::abs(zs.front()) - 1.0) > 1e-9) fail(ErrorCode::InvalidRoots, "|z_1| must be 1");
  const Complex w = std::pow(zs.front(), n);
  for (const auto& z : zs) {
    if (std::abs(std::pow(z, n) - w) > 1e-9) fail(ErrorCode::InvalidRoots, "points must have equal n-th powers");
  }
  ModulusReport rep;
  rep.value = schur_eval(lambda, zs);
  rep.modulus = std::abs(rep.value);
  rep.bound = schur_sine_formula(lambda, 1.0);
  rep.holds = rep.modulus <= rep.bound + 1e-9;
  return rep;
}

}  // namespace grcyc

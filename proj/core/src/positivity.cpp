#include "grcyc/positivity.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace grcyc {

int sign_variation(std::span<const double> v, double zero_eps) {
  if (zero_eps < 0.0) {
    double scale = 0.0;
    for (double x : v) scale = std::max(scale, std::abs(x));
    zero_eps = 1e-10 * scale;
  }
  int changes = 0;
  int last = 0;
  for (double x : v) {
    if (!(std::abs(x) > zero_eps)) continue;
    const int sign = x > 0.0 ? 1 : -1;
    if (last != 0 && sign != last) ++changes;
    last = sign;
  }
  return changes;
}

std::vector<double> realize_real(const PluckerVector& p, const Tolerance& tol) {
  // Canonical form already puts the largest coordinate at exactly 1.
  std::vector<double> out;
  out.reserve(p.size());
  for (const auto& z : p.coords()) {
    if (std::abs(z.imag()) > tol.abs_eps) {
      fail(ErrorCode::NotRealizable, "coordinate with non-removable imaginary part");
    }
    out.push_back(z.real());
  }
  return out;
}

namespace {

template <typename Pred>
bool all_one_sign(const PluckerVector& p, const Tolerance& tol, Pred ok) {
  std::vector<double> real;
  try {
    real = realize_real(p, tol);
  } catch (const Error&) {
    return false;
  }
  const bool plus = std::all_of(real.begin(), real.end(), [&](double x) { return ok(x); });
  const bool minus = std::all_of(real.begin(), real.end(), [&](double x) { return ok(-x); });
  return plus || minus;
}

}  // namespace

bool is_tnn(const PluckerVector& p, const Tolerance& tol) {
  return all_one_sign(p, tol, [&](double x) { return x >= -tol.abs_eps; });
}

bool is_tp(const PluckerVector& p, const Tolerance& tol) {
  return all_one_sign(p, tol, [&](double x) { return x > tol.abs_eps; });
}

RealMatrix real_representative(const PluckerVector& p, const Tolerance& tol) {
  realize_real(p, tol);
  return representative_matrix(p).real();
}

GkReport gk_sample_check(const PluckerVector& p, int samples, std::uint64_t seed, const Tolerance& tol) {
  const RealMatrix a = real_representative(p, tol);
  GkReport report;
  report.samples = samples;
  report.bound = p.k() - 1;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  RealVector coeff(p.k());
  for (int s = 0; s < samples; ++s) {
    for (int r = 0; r < p.k(); ++r) coeff(r) = gauss(rng);
    const RealVector v = a.transpose() * coeff;
    const int var = sign_variation(std::span<const double>(v.data(), static_cast<std::size_t>(v.size())));
    if (var > report.max_variation) {
      report.max_variation = var;
      if (var > report.bound) report.witness = std::vector<double>(v.data(), v.data() + v.size());
    }
  }
  report.pass = report.max_variation <= report.bound;
  return report;
}

bool argument_bound_holds(Complex z, int k, int n) {
  if (z == Complex(0.0, 0.0)) fail(ErrorCode::ZeroInput, "argument of zero is undefined");
  if (k < 1 || n < k) fail(ErrorCode::InvalidArgument, "need 1 <= k <= n");
  if (n == 1) return true;
  return std::abs(std::arg(z)) <= (k - 1) * kPi / (n - 1) + 1e-12;
}

}  // namespace grcyc

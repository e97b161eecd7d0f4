#include "grcyc/rowmotion.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace grcyc {

PosetLabeling PosetLabeling::from_torus(const TorusPoint& x, Complex q) {
  return PosetLabeling{x.k(), x.n(), x.values(), q};
}

TorusPoint PosetLabeling::to_torus() const { return TorusPoint(k, n, values); }

PosetLabeling birational_rowmotion(const PosetLabeling& x, const Tolerance& tol) {
  const int k = x.k;
  const int cols = x.n - k;
  if (k < 1 || cols < 1) fail(ErrorCode::InvalidArgument, "rowmotion needs 1 <= k < n");
  if (x.values.size() != static_cast<std::size_t>(k * cols)) fail(ErrorCode::InvalidArgument, "need k(n-k) labels");
  PosetLabeling out = x;
  auto f = [&](int r, int s) -> Complex& { return out.values[poset_index(k, x.n, r, s)]; };
  for (int r = 1; r <= k; ++r) {
    for (int s = 1; s <= cols; ++s) {
      Complex up(0.0, 0.0);
      if (r < k) up += f(r + 1, s);
      if (s < cols) up += f(r, s + 1);
      if (r == k && s == cols) up += x.q;
      Complex down_inv(0.0, 0.0);
      if (r > 1) down_inv += 1.0 / f(r - 1, s);
      if (s > 1) down_inv += 1.0 / f(r, s - 1);
      if (r == 1 && s == 1) down_inv += 1.0;
      Complex& here = f(r, s);
      if (std::abs(up) <= tol.zero_eps || std::abs(down_inv) <= tol.zero_eps || std::abs(here) <= tol.zero_eps) {
        fail(ErrorCode::DegenerateToggle, "toggle at (" + std::to_string(r) + "," + std::to_string(s) + ") degenerates");
      }
      here = up / (here * down_inv);
    }
  }
  return out;
}

double rowmotion_residual(const PosetLabeling& x, const Tolerance& tol) {
  const auto y = birational_rowmotion(x, tol);
  double worst = 0.0;
  for (std::size_t i = 0; i < x.values.size(); ++i) worst = std::max(worst, std::abs(y.values[i] - x.values[i]));
  return worst;
}

std::optional<int> rowmotion_order(const PosetLabeling& x, int max_steps, double rel_tol) {
  PosetLabeling cur = x;
  for (int p = 1; p <= max_steps; ++p) {
    cur = birational_rowmotion(cur);
    double worst = 0.0;
    for (std::size_t i = 0; i < x.values.size(); ++i) {
      worst = std::max(worst, std::abs(cur.values[i] - x.values[i]) / std::max(1.0, std::abs(x.values[i])));
    }
    if (worst <= rel_tol) return p;
  }
  return std::nullopt;
}

namespace {

std::vector<Complex> rowmotion_defect(const std::vector<Complex>& v, const PosetLabeling& shape) {
  PosetLabeling x = shape;
  x.values = v;
  const auto y = birational_rowmotion(x);
  std::vector<Complex> d(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) d[i] = y.values[i] - v[i];
  return d;
}

double max_modulus(const std::vector<Complex>& v) {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

// Damped Newton on R(x) - x with a central-difference Jacobian (R is a
// rational map, so complex differences are exact to O(h^2)).
std::optional<std::vector<Complex>> newton_fixed(std::vector<Complex> x, const PosetLabeling& shape) {
  constexpr double kConverged = 1e-11;
  const auto m = static_cast<Eigen::Index>(x.size());
  try {
    auto d = rowmotion_defect(x, shape);
    for (int iter = 0; iter < 100; ++iter) {
      const double norm = max_modulus(d);
      if (!std::isfinite(norm)) return std::nullopt;
      if (norm < kConverged) return x;
      Matrix jac(m, m);
      for (Eigen::Index j = 0; j < m; ++j) {
        const double h = 1e-6 * std::max(1.0, std::abs(x[static_cast<std::size_t>(j)]));
        auto xp = x;
        auto xm = x;
        xp[static_cast<std::size_t>(j)] += h;
        xm[static_cast<std::size_t>(j)] -= h;
        const auto dp = rowmotion_defect(xp, shape);
        const auto dm = rowmotion_defect(xm, shape);
        for (Eigen::Index i = 0; i < m; ++i) {
          jac(i, j) = (dp[static_cast<std::size_t>(i)] - dm[static_cast<std::size_t>(i)]) / (2.0 * h);
        }
      }
      Vector rhs(m);
      for (Eigen::Index i = 0; i < m; ++i) rhs(i) = -d[static_cast<std::size_t>(i)];
      const Vector step = jac.fullPivLu().solve(rhs);
      if (!step.allFinite()) return std::nullopt;
      bool accepted = false;
      double alpha = 1.0;
      for (int halving = 0; halving <= 20 && !accepted; ++halving, alpha *= 0.5) {
        auto trial = x;
        for (Eigen::Index i = 0; i < m; ++i) trial[static_cast<std::size_t>(i)] += alpha * step(i);
        if (std::any_of(trial.begin(), trial.end(), [](Complex z) { return std::abs(z) < 1e-12; })) continue;
        try {
          auto td = rowmotion_defect(trial, shape);
          if (max_modulus(td) < norm) {
            x = std::move(trial);
            d = std::move(td);
            accepted = true;
          }
        } catch (const Error&) {
        }
      }
      if (!accepted) return std::nullopt;
    }
    if (max_modulus(d) < kConverged) return x;
  } catch (const Error&) {
  }
  return std::nullopt;
}

}  // namespace

RowmotionReport rowmotion_fixed_check(int k, int n, Complex q, int starts, std::uint64_t seed) {
  if (q == Complex(0.0, 0.0)) fail(ErrorCode::ZeroParameter, "q must be nonzero");
  RowmotionReport rep;
  const auto crit = find_critical_points(k, n, q, 20, seed);
  rep.critical_points = static_cast<int>(crit.points.size());
  for (const auto& c : crit.points) {
    rep.max_critical_residual =
        std::max(rep.max_critical_residual, rowmotion_residual(PosetLabeling::from_torus(c.x, q)));
  }

  const PosetLabeling shape{k, n, std::vector<Complex>(static_cast<std::size_t>(k * (n - k)), 1.0), q};
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> logmod(-1.0, 1.0);
  std::uniform_real_distribution<double> phase(-kPi, kPi);
  rep.newton_starts = starts;
  for (int i = 0; i < starts; ++i) {
    std::vector<Complex> x0(shape.values.size());
    for (auto& z : x0) {
      const double lm = logmod(rng);
      z = std::polar(std::exp(lm), phase(rng));
    }
    const auto fixed = newton_fixed(std::move(x0), shape);
    if (!fixed) continue;
    ++rep.newton_fixed;
    const TorusPoint fx(k, n, *fixed);
    double best = 1e300;
    for (const auto& c : crit.points) best = std::min(best, distance(c.x, fx));
    if (best > 1e-6) ++rep.unmatched;
  }
  rep.pass = rep.max_critical_residual < 1e-8 && rep.unmatched == 0;
  return rep;
}

}  // namespace grcyc

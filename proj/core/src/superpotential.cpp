#include "grcyc/superpotential.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace grcyc {

TorusPoint::TorusPoint(int k, int n, std::vector<Complex> values) : k_(k), n_(n), values_(std::move(values)) {
  if (k_ < 1 || n_ <= k_) fail(ErrorCode::InvalidArgument, "torus chart needs 1 <= k < n");
  if (values_.size() != static_cast<std::size_t>(k_ * (n_ - k_))) {
    fail(ErrorCode::InvalidArgument, "torus point needs k(n-k) values");
  }
  for (const auto& v : values_) {
    require_finite(v, "TorusPoint");
    if (v == Complex(0.0, 0.0)) fail(ErrorCode::InvalidArgument, "torus coordinates must be nonzero");
  }
}

Complex TorusPoint::at(int r, int s) const { return values_.at(poset_index(k_, n_, r, s)); }

double distance(const TorusPoint& a, const TorusPoint& b) {
  if (a.k_ != b.k_ || a.n_ != b.n_) fail(ErrorCode::ShapeMismatch, "torus points of different shapes");
  double d = 0.0;
  for (std::size_t i = 0; i < a.values_.size(); ++i) d = std::max(d, std::abs(a.values_[i] - b.values_[i]));
  return d;
}

std::size_t poset_index(int k, int n, int r, int s) {
  if (r < 1 || r > k || s < 1 || s > n - k) fail(ErrorCode::InvalidArgument, "poset element out of range");
  return static_cast<std::size_t>((r - 1) * (n - k) + (s - 1));
}

Complex f_q_eval(const PluckerVector& p, Complex q, const Tolerance& tol) {
  const int k = p.k();
  const int n = p.n();
  if (k < 1 || k >= n) fail(ErrorCode::InvalidArgument, "superpotential needs 1 <= k < n");
  Complex total(0.0, 0.0);
  auto ratio = [&](const Subset& num, const Subset& den) {
    const Complex d = p[den];
    if (std::abs(d) <= tol.zero_eps) {
      fail(ErrorCode::OutsidePiCircle, "cyclic interval coordinate D_{" + den.to_string() + "} vanishes");
    }
    return p[num] / d;
  };
  for (int i = 1; i <= n; ++i) {
    if (i == n - k) continue;
    std::vector<int> num;
    for (int j = 1; j <= k - 1; ++j) num.push_back(i + j);
    num.push_back(i + k + 1);
    total += ratio(Subset::from_indices_mod(n, num), cyclic_interval(n, i + 1, k));
  }
  std::vector<int> num;
  for (int j = n - k + 1; j <= n - 1; ++j) num.push_back(j);
  num.push_back(1);
  total += q * ratio(Subset::from_indices_mod(n, num), cyclic_interval(n, n - k + 1, k));
  return total;
}

LaurentPolynomial build_l_q(int k, int n) {
  if (k < 1 || k >= n) fail(ErrorCode::InvalidArgument, "L_q needs 1 <= k < n");
  const int cols = n - k;
  const std::size_t m = static_cast<std::size_t>(k * cols);
  std::vector<std::string> names;
  for (int r = 1; r <= k; ++r)
    for (int s = 1; s <= cols; ++s) names.push_back("x" + std::to_string(r) + std::to_string(s));
  names.push_back("q");
  LaurentPolynomial l(names);

  auto cover = [&](std::optional<std::size_t> lower, std::optional<std::size_t> upper) {
    LaurentPolynomial::Exponents e(m + 1, 0);
    if (upper) ++e[*upper];
    if (lower) --e[*lower];
    l.add_term(Complex(1.0, 0.0), std::move(e));
  };
  cover(std::nullopt, poset_index(k, n, 1, 1));
  for (int r = 1; r <= k; ++r) {
    for (int s = 1; s <= cols; ++s) {
      const auto here = poset_index(k, n, r, s);
      if (r < k) cover(here, poset_index(k, n, r + 1, s));
      if (s < cols) cover(here, poset_index(k, n, r, s + 1));
    }
  }
  cover(poset_index(k, n, k, cols), m);
  return l;
}

Complex l_q_eval(const LaurentPolynomial& l, const TorusPoint& x, Complex q) {
  std::vector<Complex> vals = x.values();
  vals.push_back(q);
  return l.evaluate(vals);
}

std::vector<LaurentPolynomial> laurent_gradient(const LaurentPolynomial& l) {
  std::vector<LaurentPolynomial> out;
  for (std::size_t v = 0; v + 1 < l.num_variables(); ++v) out.push_back(l.derivative(v));
  return out;
}

std::vector<Complex> gradient_at(const std::vector<LaurentPolynomial>& grad, const TorusPoint& x, Complex q) {
  std::vector<Complex> vals = x.values();
  vals.push_back(q);
  std::vector<Complex> out;
  out.reserve(grad.size());
  for (const auto& g : grad) out.push_back(g.evaluate(vals));
  return out;
}

std::pair<Subset, Subset> chart_subsets(int k, int n, int r, int s) {
  auto block = [](int lo, int hi, std::vector<int>& into) {
    for (int i = lo; i <= hi; ++i) into.push_back(i);
  };
  std::vector<int> num;
  block(1, k - r, num);
  block(k - r + s + 1, k + s, num);
  std::vector<int> den;
  block(1, k - r + 1, den);
  block(k - r + s + 1, k + s - 1, den);
  return {Subset(n, num), Subset(n, den)};
}

TorusPoint chart_coords(const PluckerVector& p, const Tolerance& tol) {
  const int k = p.k();
  const int n = p.n();
  std::vector<Complex> vals;
  for (int r = 1; r <= k; ++r) {
    for (int s = 1; s <= n - k; ++s) {
      const auto [num, den] = chart_subsets(k, n, r, s);
      const Complex a = p[num];
      const Complex b = p[den];
      if (std::abs(b) <= tol.zero_eps) fail(ErrorCode::ChartUndefined, "D_{" + den.to_string() + "} vanishes");
      if (std::abs(a) <= tol.zero_eps) fail(ErrorCode::ChartUndefined, "D_{" + num.to_string() + "} vanishes");
      vals.push_back(a / b);
    }
  }
  return TorusPoint(k, n, std::move(vals));
}

namespace {

double max_modulus(const std::vector<Complex>& v) {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

struct NewtonSystem {
  std::vector<LaurentPolynomial> grad;
  std::vector<std::vector<LaurentPolynomial>> hess;
};

NewtonSystem make_system(const LaurentPolynomial& l) {
  NewtonSystem sys{laurent_gradient(l), {}};
  for (const auto& g : sys.grad) {
    std::vector<LaurentPolynomial> row;
    for (std::size_t v = 0; v < sys.grad.size(); ++v) row.push_back(g.derivative(v));
    sys.hess.push_back(std::move(row));
  }
  return sys;
}

std::optional<TorusPoint> newton(const NewtonSystem& sys, const TorusPoint& start, Complex q) {
  constexpr double kConverged = 1e-10;
  constexpr int kMaxIter = 100;
  constexpr int kMaxHalvings = 20;
  const auto m = static_cast<Eigen::Index>(sys.grad.size());
  std::vector<Complex> x = start.values();
  auto grad_at = [&](const std::vector<Complex>& pt) {
    std::vector<Complex> vals = pt;
    vals.push_back(q);
    std::vector<Complex> g;
    for (const auto& p : sys.grad) g.push_back(p.evaluate(vals));
    return g;
  };
  // Reject runaways: along escape paths to the torus boundary the gradient
  // decays while x_j * dL/dx_j does not.
  auto accept = [&](const std::vector<Complex>& pt, const std::vector<Complex>& g) -> std::optional<TorusPoint> {
    const double scale = std::max(1.0, std::abs(q));
    for (std::size_t j = 0; j < pt.size(); ++j) {
      if (std::abs(pt[j] * g[j]) > 1e-8 * scale) return std::nullopt;
    }
    return TorusPoint(start.k(), start.n(), pt);
  };
  std::vector<Complex> g = grad_at(x);
  for (int iter = 0; iter < kMaxIter; ++iter) {
    const double norm = max_modulus(g);
    if (!std::isfinite(norm)) return std::nullopt;
    if (norm < kConverged) return accept(x, g);
    std::vector<Complex> vals = x;
    vals.push_back(q);
    Matrix h(m, m);
    Vector rhs(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      rhs(i) = -g[static_cast<std::size_t>(i)];
      for (Eigen::Index j = 0; j < m; ++j) {
        h(i, j) = sys.hess[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].evaluate(vals);
      }
    }
    const Vector step = h.fullPivLu().solve(rhs);
    if (!step.allFinite()) return std::nullopt;
    bool accepted = false;
    double alpha = 1.0;
    for (int halving = 0; halving <= kMaxHalvings; ++halving, alpha *= 0.5) {
      std::vector<Complex> trial = x;
      bool degenerate = false;
      for (Eigen::Index i = 0; i < m; ++i) {
        trial[static_cast<std::size_t>(i)] += alpha * step(i);
        if (std::abs(trial[static_cast<std::size_t>(i)]) < 1e-12) degenerate = true;
      }
      if (degenerate) continue;
      auto trial_g = grad_at(trial);
      if (max_modulus(trial_g) < norm) {
        x = std::move(trial);
        g = std::move(trial_g);
        accepted = true;
        break;
      }
    }
    if (!accepted) return std::nullopt;
  }
  if (max_modulus(g) < kConverged) return accept(x, g);
  return std::nullopt;
}

bool tuple_less(const TorusPoint& a, const TorusPoint& b) {
  for (std::size_t i = 0; i < a.values().size(); ++i) {
    const Complex x = a.values()[i];
    const Complex y = b.values()[i];
    if (x.real() != y.real()) return x.real() < y.real();
    if (x.imag() != y.imag()) return x.imag() < y.imag();
  }
  return false;
}

}  // namespace

std::optional<TorusPoint> newton_critical(const LaurentPolynomial& l, const TorusPoint& start, Complex q) {
  return newton(make_system(l), start, q);
}

CriticalSearch find_critical_points(int k, int n, Complex q, int extra_starts, std::uint64_t seed) {
  if (q == Complex(0.0, 0.0)) fail(ErrorCode::ZeroParameter, "q must be nonzero");
  const auto l = build_l_q(k, n);
  const auto sys = make_system(l);

  std::vector<TorusPoint> starts;
  for (const auto& fp : enumerate_fixed_points(k, n, q)) {
    try {
      starts.push_back(chart_coords(fp.point));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ChartUndefined) throw;
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> logmod(-1.0, 1.0);
  std::uniform_real_distribution<double> phase(-kPi, kPi);
  const std::size_t m = static_cast<std::size_t>(k * (n - k));
  for (int i = 0; i < extra_starts; ++i) {
    std::vector<Complex> v(m);
    for (auto& z : v) {
      const double lm = logmod(rng);
      z = std::polar(std::exp(lm), phase(rng));
    }
    starts.emplace_back(k, n, std::move(v));
  }

  CriticalSearch out;
  out.starts = static_cast<int>(starts.size());
  std::vector<TorusPoint> found;
  for (const auto& s : starts) {
    if (auto x = newton(sys, s, q)) {
      found.push_back(std::move(*x));
    } else {
      ++out.dropped;
    }
  }
  out.converged = static_cast<int>(found.size());
  std::sort(found.begin(), found.end(), tuple_less);
  for (auto& x : found) {
    const bool dup = std::any_of(out.points.begin(), out.points.end(),
                                 [&](const CriticalPoint& c) { return distance(c.x, x) < 1e-6; });
    if (dup) continue;
    const double res = max_modulus(gradient_at(sys.grad, x, q));
    out.points.push_back(CriticalPoint{std::move(x), res});
  }
  return out;
}

CorrespondenceReport verify_correspondence(int k, int n, Complex t, int extra_starts, std::uint64_t seed) {
  if (t == Complex(0.0, 0.0)) fail(ErrorCode::ZeroParameter, "t must be nonzero");
  CorrespondenceReport rep;
  const auto grad = laurent_gradient(build_l_q(k, n));
  std::vector<TorusPoint> visible;
  const auto fixed = enumerate_fixed_points(k, n, t);
  rep.fixed_points = static_cast<int>(fixed.size());
  for (const auto& fp : fixed) {
    try {
      visible.push_back(chart_coords(fp.point));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ChartUndefined) throw;
      ++rep.invisible;
      continue;
    }
    rep.max_fixed_gradient = std::max(rep.max_fixed_gradient, max_modulus(gradient_at(grad, visible.back(), t)));
  }
  rep.visible = static_cast<int>(visible.size());

  const auto search = find_critical_points(k, n, t, extra_starts, seed);
  rep.critical_found = static_cast<int>(search.points.size());
  for (const auto& c : search.points) {
    double best = 1e300;
    for (const auto& v : visible) best = std::min(best, distance(c.x, v));
    if (best > 1e-6) ++rep.unmatched;
    else rep.max_match_distance = std::max(rep.max_match_distance, best);
  }
  rep.pass = rep.max_fixed_gradient < 1e-8 && rep.unmatched == 0;
  return rep;
}

}  // namespace grcyc

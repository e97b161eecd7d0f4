#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "grcyc/cyclic_shift.hpp"
#include "grcyc/moment_curve.hpp"
#include "grcyc/peterson.hpp"
#include "grcyc/positivity.hpp"
#include "grcyc/rowmotion.hpp"
#include "grcyc/sampling.hpp"
#include "grcyc/schur.hpp"
#include "grcyc/superpotential.hpp"
#include "grcyc/twist.hpp"

namespace grcyc::app {

void RunConfig::validate() const {
  if (k < 1 || n < k) throw UsageError("need 1 <= k <= n");
  if (n > kMaxN) throw UsageError("n = " + std::to_string(n) + " exceeds the cap of " + std::to_string(kMaxN));
  if (t == Complex(0.0, 0.0)) throw UsageError("t must be nonzero");
  if (!std::isfinite(t.real()) || !std::isfinite(t.imag())) throw UsageError("t must be finite");
  try {
    tol.validate();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

namespace {

bool positive_real(Complex t) { return t.imag() == 0.0 && t.real() > 0.0; }

double rel_diff(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b))); }

struct Check {
  std::string name;
  std::function<Json(bool&)> run;
};

Json fixed_point_check(const RunConfig& cfg, bool& pass) {
  const auto fps = enumerate_fixed_points(cfg.k, cfg.n, cfg.t);
  double worst = 0.0;
  int tnn = 0;
  for (const auto& fp : fps) {
    worst = std::max(worst, fixedness_residual(fp.point, cfg.t));
    if (is_tnn(fp.point, cfg.tol)) ++tnn;
  }
  // Gr(n,n) is a single point, totally nonnegative for every t.
  const int expected_tnn = (positive_real(cfg.t) || cfg.k == cfg.n) ? 1 : 0;
  pass = fps.size() == binomial(cfg.n, cfg.k) && worst < 1e-9 && tnn == expected_tnn;
  return Json{{"fixed_points", fps.size()},
              {"expected", binomial(cfg.n, cfg.k)},
              {"max_fixedness_residual", worst},
              {"tnn_count", tnn},
              {"expected_tnn_count", expected_tnn}};
}

Json v0_formula_check(const RunConfig& cfg, bool& pass) {
  if (cfg.k == cfg.n) {
    pass = true;
    return Json{{"skipped", "k = n"}};
  }
  std::vector<Complex> formula;
  for (const auto& s : all_subsets(cfg.n, cfg.k)) formula.emplace_back(v0_plucker_formula(cfg.k, cfg.n, s), 0.0);
  const PluckerVector from_formula(cfg.k, cfg.n, std::move(formula));
  const double d_matrix = projective_distance(from_formula, plucker_from_matrix(v0_matrix(cfg.k, cfg.n, 0.0)));
  const double d_roots = projective_distance(from_formula, tnn_fixed_point(cfg.k, cfg.n, 1.0));
  pass = d_matrix < 1e-9 && d_roots < 1e-9;
  return Json{{"distance_to_v0_matrix", d_matrix}, {"distance_to_tnn_fixed_point", d_roots}};
}

Json gamma_check(const RunConfig& cfg, bool& pass) {
  double worst = 0.0;
  for (const auto& fp : enumerate_fixed_points(cfg.k, cfg.n, cfg.t)) {
    const auto g = gamma_embed(toeplitz_u(cfg.k, cfg.n, fp.roots.roots));
    worst = std::max(worst, projective_distance(g, fp.point));
  }
  const auto id = gamma_embed(identity_point(cfg.k, cfg.n));
  int support = 0;
  for (const auto& c : id.coords()) support += std::abs(c) > cfg.tol.zero_eps ? 1 : 0;
  const bool id_ok = support == 1 && id.pivot() == 0;
  pass = worst < 1e-8 && id_ok;
  return Json{{"max_distance_gamma_u_to_v_s", worst}, {"identity_support", support}, {"identity_support_is_first_subset", id_ok}};
}

Json schur_check(const RunConfig& cfg, bool& pass) {
  const auto parts = all_partitions(cfg.k, cfg.n);
  const auto fps = enumerate_fixed_points(cfg.k, cfg.n, cfg.t);
  const auto data = roots_and_s0(cfg.k, cfg.n, cfg.t);
  const bool has_s0 = data.s0.has_value();
  const std::vector<Complex> s0_roots = has_s0 ? data.s0->roots : std::vector<Complex>{};
  double worst_paths = 0.0;
  double worst_sine = 0.0;
  double worst_modulus_excess = -1e300;
  const bool unit_t = std::abs(std::abs(cfg.t) - 1.0) < 1e-12;
  std::vector<std::string> positive_sets;
  bool positive_is_s0 = true;
  for (const auto& fp : fps) {
    bool all_nonneg = true;
    const bool is_s0 = cfg.k == cfg.n || (has_s0 && std::all_of(s0_roots.begin(), s0_roots.end(), [&](Complex z) {
      return std::any_of(fp.roots.roots.begin(), fp.roots.roots.end(), [&](Complex w) { return std::abs(z - w) < 1e-9; });
    }));
    for (const auto& lam : parts) {
      const Complex bialt = schur_eval(lam, fp.roots.roots);
      worst_paths = std::max(worst_paths, rel_diff(bialt, schur_via_plucker(lam, fp.point)));
      if (is_s0 && has_s0) worst_sine = std::max(worst_sine, rel_diff(bialt, schur_sine_formula(lam, cfg.t.real())));
      if (!(std::abs(bialt.imag()) <= 1e-9 * std::max(1.0, std::abs(bialt)) && bialt.real() >= -1e-9)) all_nonneg = false;
      if (unit_t) {
        const auto rep = modulus_inequality_check(lam, fp.roots.roots);
        worst_modulus_excess = std::max(worst_modulus_excess, rep.modulus - rep.bound);
      }
    }
    if (all_nonneg) {
      positive_sets.push_back(fp.root_indices.to_string());
      if (!is_s0) positive_is_s0 = false;
    }
  }
  const std::size_t expected_positive = (has_s0 || cfg.k == cfg.n) ? 1 : 0;
  const bool modulus_ok = !unit_t || worst_modulus_excess <= 1e-9;
  pass = worst_paths < 1e-8 && worst_sine < 1e-8 && positive_is_s0 && positive_sets.size() == expected_positive && modulus_ok;
  Json out{{"partitions", parts.size()},
           {"root_subsets", fps.size()},
           {"max_bialternant_vs_plucker", worst_paths},
           {"max_bialternant_vs_sine", worst_sine},
           {"nonnegative_root_subsets", positive_sets},
           {"expected_nonnegative_count", expected_positive}};
  if (unit_t) out["max_modulus_excess"] = worst_modulus_excess;
  return out;
}

Json superpotential_check(const RunConfig& cfg, bool& pass) {
  if (cfg.k == cfg.n) {
    pass = true;
    return Json{{"skipped", "k = n"}};
  }
  const auto rep = verify_correspondence(cfg.k, cfg.n, cfg.t, 20, cfg.seed);
  const auto l = build_l_q(cfg.k, cfg.n);
  std::mt19937_64 rng(cfg.seed);
  double worst_pullback = 0.0;
  int samples = 0;
  for (int i = 0; i < 20; ++i) {
    const auto p = plucker_from_matrix(random_matrix(cfg.k, cfg.n, rng));
    TorusPoint x = [&] {
      try {
        return chart_coords(p, cfg.tol);
      } catch (const Error&) {
        return TorusPoint(cfg.k, cfg.n, {});
      }
    }();
    if (x.values().empty()) continue;
    const Complex f = f_q_eval(p, cfg.t, cfg.tol);
    worst_pullback = std::max(worst_pullback, rel_diff(l_q_eval(l, x, cfg.t), f));
    ++samples;
  }
  pass = rep.pass && worst_pullback < 1e-8 && samples > 0;
  return Json{{"fixed_points", rep.fixed_points},
              {"chart_visible", rep.visible},
              {"chart_invisible", rep.invisible},
              {"max_gradient_at_fixed_points", rep.max_fixed_gradient},
              {"critical_points", rep.critical_found},
              {"unmatched_critical_points", rep.unmatched},
              {"max_match_distance", rep.max_match_distance},
              {"pullback_samples", samples},
              {"max_pullback_residual", worst_pullback}};
}

Json twist_check(const RunConfig& cfg, bool& pass) {
  Matrix a(2, 4);
  a << 1, 1, 0, -4, 0, 2, 1, 3;
  Matrix expected(2, 4);
  expected << 1, 1, 0.75, 0, -0.5, 0, 1, 1.0 / 3.0;
  const double example_err = (right_twist(a) - expected).cwiseAbs().maxCoeff();

  int periodic = 0;
  int samples = 0;
  if (cfg.k < cfg.n) {
    std::mt19937_64 rng(cfg.seed + 1);
    for (int i = 0; i < 10; ++i) {
      const auto p = plucker_from_matrix(random_matrix(cfg.k, cfg.n, rng));
      ++samples;
      if (periodicity_check(p, cfg.tol)) ++periodic;
    }
  }
  const auto cands = twist_fixed_candidates(cfg.k, cfg.n, cfg.t);
  double worst_fixed = 0.0;
  for (const auto& c : cands) worst_fixed = std::max(worst_fixed, c.twist_residual);
  pass = example_err <= 1e-12 && periodic == samples && worst_fixed <= 1e-8;
  return Json{{"example_max_error", example_err},
              {"periodicity_samples", samples},
              {"periodicity_passed", periodic},
              {"inversion_closed_fixed_points", cands.size()},
              {"max_twist_fixed_residual", worst_fixed}};
}

Json promotion_check(const RunConfig&, bool& pass) {
  const Tableau t({{1, 1, 2, 3}, {2, 3, 4, 5}}, 5);
  const Tableau expected({{1, 1, 2, 4}, {2, 3, 5, 5}}, 5);
  const Tableau got = promotion(t);
  const int order = promotion_order(t);
  pass = got == expected && 5 % order == 0;
  return Json{{"example_input", t.entries()}, {"example_output", got.entries()}, {"matches", got == expected}, {"order", order}};
}

Json rowmotion_check(const RunConfig& cfg, bool& pass) {
  if (cfg.k == cfg.n) {
    pass = true;
    return Json{{"skipped", "k = n"}};
  }
  const auto rep = rowmotion_fixed_check(cfg.k, cfg.n, cfg.t, 20, cfg.seed);
  pass = rep.pass;
  return Json{{"critical_points", rep.critical_points},
              {"max_critical_residual", rep.max_critical_residual},
              {"newton_starts", rep.newton_starts},
              {"newton_fixed_points", rep.newton_fixed},
              {"unmatched", rep.unmatched}};
}

Json flow_check(const RunConfig& cfg, bool& pass) {
  if (cfg.k == cfg.n) {
    pass = true;
    return Json{{"skipped", "k = n"}};
  }
  // Contraction rate is the gap between the k-th and (k+1)-th largest real
  // parts of the eigenvalues; run long enough for e^{-gap s} < 1e-10.
  auto roots = shift_roots(cfg.k, cfg.n, Complex(1.0, 0.0));
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) { return a.real() > b.real(); });
  const double gap = roots[static_cast<std::size_t>(cfg.k - 1)].real() - roots[static_cast<std::size_t>(cfg.k)].real();
  const double horizon = std::max(40.0, std::ceil(23.0 / gap / 8.0) * 8.0);
  const auto v0 = tnn_fixed_point(cfg.k, cfg.n, 1.0);
  std::mt19937_64 rng(cfg.seed + 2);
  double worst_final = 0.0;
  bool monotone = true;
  for (int i = 0; i < 5; ++i) {
    const auto p = random_tp_point(cfg.k, cfg.n, rng);
    double prev = 1e300;
    for (int step = 0; step <= 8; ++step) {
      const double d = projective_distance(flow(p, horizon * step / 8.0), v0);
      if (d > prev + 1e-12) monotone = false;
      prev = d;
    }
    worst_final = std::max(worst_final, prev);
  }
  pass = worst_final < 1e-6 && monotone;
  return Json{{"samples", 5}, {"spectral_gap", gap}, {"time", horizon}, {"max_final_distance", worst_final}, {"monotone", monotone}};
}

}  // namespace

VerifyOutcome run_verify_all(const RunConfig& cfg) {
  cfg.validate();
  const std::vector<Check> checks = {
      {"fixed_points", [&](bool& p) { return fixed_point_check(cfg, p); }},
      {"v0_formula", [&](bool& p) { return v0_formula_check(cfg, p); }},
      {"gamma_embedding", [&](bool& p) { return gamma_check(cfg, p); }},
      {"schur", [&](bool& p) { return schur_check(cfg, p); }},
      {"superpotential", [&](bool& p) { return superpotential_check(cfg, p); }},
      {"twist", [&](bool& p) { return twist_check(cfg, p); }},
      {"promotion", [&](bool& p) { return promotion_check(cfg, p); }},
      {"rowmotion", [&](bool& p) { return rowmotion_check(cfg, p); }},
      {"flow", [&](bool& p) { return flow_check(cfg, p); }},
  };
  VerifyOutcome out;
  out.pass = true;
  Json results = Json::array();
  for (const auto& c : checks) {
    bool ok = false;
    Json detail;
    try {
      detail = c.run(ok);
    } catch (const std::exception& e) {
      ok = false;
      detail = Json{{"error", e.what()}};
    }
    out.pass = out.pass && ok;
    Json entry{{"name", c.name}, {"pass", ok}};
    entry.update(detail);
    results.push_back(std::move(entry));
  }
  out.report = Json{{"config",
                     {{"k", cfg.k},
                      {"n", cfg.n},
                      {"t", to_json(cfg.t)},
                      {"seed", cfg.seed},
                      {"abs_eps", cfg.tol.abs_eps},
                      {"rel_eps", cfg.tol.rel_eps},
                      {"zero_eps", cfg.tol.zero_eps}}},
                    {"checks", std::move(results)},
                    {"pass", out.pass}};
  return out;
}

Json minmax_plucker(int k, int n) {
  if (k < 1 || n <= k) throw UsageError("minmax needs 1 <= k < n");
  if (n > kMaxN) throw UsageError("n exceeds the cap of " + std::to_string(kMaxN));
  const auto subsets = all_subsets(n, k);
  std::vector<double> values;
  for (const auto& s : subsets) values.push_back(v0_plucker_formula(k, n, s));
  const double lo = *std::min_element(values.begin(), values.end());
  const double hi = *std::max_element(values.begin(), values.end());
  auto close = [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)); };

  Json min_sets = Json::array();
  Json max_sets = Json::array();
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    if (close(values[i], lo)) min_sets.push_back(subsets[i].to_string());
    if (close(values[i], hi)) max_sets.push_back(subsets[i].to_string());
  }

  // Orbits under rotation and reflection, listed by their lex-first member.
  Json orbits = Json::array();
  std::set<std::size_t> seen;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    if (seen.count(i)) continue;
    std::set<std::size_t> orbit;
    for (int r = 0; r < n; ++r) {
      const Subset rot = subsets[i].rotated(r);
      orbit.insert(subset_rank(rot));
      orbit.insert(subset_rank(rot.reflected()));
    }
    Json members = Json::array();
    for (auto m : orbit) {
      seen.insert(m);
      members.push_back(subsets[m].to_string());
    }
    orbits.push_back(Json{{"value", values[i]}, {"subsets", std::move(members)}});
  }
  return Json{{"k", k},
              {"n", n},
              {"min", {{"value", lo}, {"subsets", std::move(min_sets)}}},
              {"max", {{"value", hi}, {"subsets", std::move(max_sets)}}},
              {"orbits", std::move(orbits)}};
}

}  // namespace grcyc::app

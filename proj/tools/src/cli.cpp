#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <optional>

#include <CLI11.hpp>

#include "grcyc/cyclic_shift.hpp"
#include "grcyc/moment_curve.hpp"
#include "grcyc/peterson.hpp"
#include "grcyc/positivity.hpp"
#include "grcyc/schur.hpp"
#include "grcyc/superpotential.hpp"
#include "grcyc/twist.hpp"
#include "io.hpp"
#include "verify.hpp"

namespace grcyc::app {

namespace {

struct Options {
  int k = 0;
  int n = 0;
  std::string t = "1";
  std::string q = "1";
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  std::string output = "json";
  bool json_flag = false;

  std::string input;
  bool matrix = false;
  bool pluckers = false;
  double theta = 0.0;
  int samples = 1000;
  std::string lambda;
  bool all_root_subsets = false;
  int starts = 20;
  bool left = false;
  std::string tableau;
  int tableau_n = 0;
  bool orbit = false;
  bool fixed_check = false;
  double time = 0.0;
};

void require_kn(const Options& o, bool strict) {
  if (o.k < 1 || o.n < o.k || (strict && o.n == o.k)) {
    throw UsageError(strict ? "need 1 <= k < n" : "need 1 <= k <= n");
  }
  if (o.n > kMaxN) throw UsageError("n = " + std::to_string(o.n) + " exceeds the cap of " + std::to_string(kMaxN));
}

void require_cap(int n) {
  if (n > kMaxN) throw UsageError("n = " + std::to_string(n) + " exceeds the cap of " + std::to_string(kMaxN));
}

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("GRCYC_SEED")) {
    std::string text(env);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) throw UsageError("GRCYC_SEED is not an unsigned integer");
    return v;
  }
  return 1;
}

Tolerance resolve_tol(const Options& o) {
  Tolerance tol;
  if (o.tol) {
    tol.abs_eps = *o.tol;
    tol.rel_eps = *o.tol;
  }
  try {
    tol.validate();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  return tol;
}

Json roots_json(const std::vector<Complex>& zs) {
  Json out = Json::array();
  for (auto z : zs) out.push_back(to_json(z));
  return out;
}

Json cmd_v0(const Options& o) {
  require_kn(o, false);
  const Matrix a = v0_matrix(o.k, o.n, o.theta);
  if (o.matrix) return matrix_to_json(a);
  return point_to_json(plucker_from_matrix(a, resolve_tol(o)));
}

Json cmd_fixed_points(const Options& o) {
  require_kn(o, false);
  const Complex t = parse_complex(o.t);
  if (t == Complex(0.0, 0.0)) throw UsageError("t must be nonzero");
  const auto tol = resolve_tol(o);
  Json out = Json::array();
  for (const auto& fp : enumerate_fixed_points(o.k, o.n, t)) {
    Json entry{{"roots", roots_json(fp.roots.roots)}, {"root_indices", fp.root_indices.to_string()}};
    entry.update(point_to_json(fp.point));
    entry["tnn"] = is_tnn(fp.point, tol);
    out.push_back(std::move(entry));
  }
  return out;
}

Json cmd_tnn(const Options& o) {
  const auto p = point_or_matrix_from_json(read_json_file(o.input));
  require_cap(p.n());
  const auto tol = resolve_tol(o);
  Json out{{"tnn", is_tnn(p, tol)}, {"tp", is_tp(p, tol)}};
  try {
    const auto rep = gk_sample_check(p, o.samples, resolve_seed(o), tol);
    out["gk_max_variation"] = rep.max_variation;
    out["gk_bound"] = rep.bound;
    out["gk_pass"] = rep.pass;
    if (rep.witness) out["gk_witness"] = *rep.witness;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotRealizable) throw;
    out["gk_max_variation"] = nullptr;
    out["realizable"] = false;
  }
  return out;
}

std::vector<Partition> parse_lambdas(const Options& o) {
  if (o.lambda.empty()) return all_partitions(o.k, o.n);
  std::vector<int> parts;
  std::string_view rest = o.lambda;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto piece = rest.substr(0, comma);
    int v = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (ec != std::errc() || ptr != piece.data() + piece.size()) throw UsageError("bad --lambda");
    parts.push_back(v);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
  }
  try {
    return {Partition(o.k, o.n, parts)};
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

Json cmd_schur(const Options& o) {
  require_kn(o, false);
  const Complex t = parse_complex(o.t);
  if (t == Complex(0.0, 0.0)) throw UsageError("t must be nonzero");
  const auto lambdas = parse_lambdas(o);
  const auto data = roots_and_s0(o.k, o.n, t);
  std::vector<FixedPoint> sets;
  if (o.all_root_subsets) {
    sets = enumerate_fixed_points(o.k, o.n, t);
  } else {
    if (!data.s0) throw UsageError("t is not real positive; pass --all-root-subsets");
    for (const auto& fp : enumerate_fixed_points(o.k, o.n, t)) {
      bool same = true;
      for (auto z : data.s0->roots) {
        bool hit = false;
        for (auto w : fp.roots.roots) hit = hit || std::abs(z - w) < 1e-9;
        same = same && hit;
      }
      if (same) sets.push_back(fp);
    }
  }
  Json rows = Json::array();
  for (const auto& fp : sets) {
    Json values = Json::array();
    bool all_nonneg = true;
    for (const auto& lam : lambdas) {
      const Complex v = schur_eval(lam, fp.roots.roots);
      const bool nonneg = std::abs(v.imag()) <= 1e-9 * std::max(1.0, std::abs(v)) && v.real() >= -1e-9;
      all_nonneg = all_nonneg && nonneg;
      values.push_back(Json{{"lambda", lam.to_string()},
                            {"bialternant", to_json(v)},
                            {"via_plucker", to_json(schur_via_plucker(lam, fp.point))},
                            {"nonnegative", nonneg}});
      if (data.s0 && !o.all_root_subsets) values.back()["sine_formula"] = schur_sine_formula(lam, t.real());
    }
    rows.push_back(Json{{"roots", roots_json(fp.roots.roots)},
                        {"root_indices", fp.root_indices.to_string()},
                        {"all_nonnegative", all_nonneg},
                        {"values", std::move(values)}});
  }
  return Json{{"k", o.k}, {"n", o.n}, {"t", to_json(t)}, {"root_subsets", std::move(rows)}};
}

Json cmd_critical(const Options& o) {
  require_kn(o, true);
  const Complex q = parse_complex(o.q);
  if (q == Complex(0.0, 0.0)) throw UsageError("q must be nonzero");
  const auto search = find_critical_points(o.k, o.n, q, o.starts, resolve_seed(o));
  std::vector<std::pair<std::string, TorusPoint>> charts;
  for (const auto& fp : enumerate_fixed_points(o.k, o.n, q)) {
    try {
      charts.emplace_back(fp.root_indices.to_string(), chart_coords(fp.point));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ChartUndefined) throw;
    }
  }
  Json points = Json::array();
  for (const auto& c : search.points) {
    Json match = nullptr;
    for (const auto& [name, x] : charts) {
      if (distance(x, c.x) < 1e-6) match = name;
    }
    const PosetLabeling lab = PosetLabeling::from_torus(c.x, q);
    points.push_back(Json{{"x", labels_to_json(lab)["values"]}, {"gradient_residual", c.residual}, {"fixed_point_root_indices", match}});
  }
  return Json{{"k", o.k},
              {"n", o.n},
              {"q", to_json(q)},
              {"starts", search.starts},
              {"dropped", search.dropped},
              {"critical_points", std::move(points)}};
}

Json cmd_twist(const Options& o) {
  const Json doc = read_json_file(o.input);
  const Matrix a = doc.contains("pluckers") ? representative_matrix(point_from_json(doc)) : matrix_from_json(doc);
  require_cap(static_cast<int>(a.cols()));
  const auto tol = resolve_tol(o);
  return matrix_to_json(o.left ? left_twist(a, tol) : right_twist(a, tol));
}

Json cmd_twist_fixed(const Options& o) {
  require_kn(o, false);
  const Complex t = parse_complex(o.t);
  if (t == Complex(0.0, 0.0)) throw UsageError("t must be nonzero");
  const auto tol = resolve_tol(o);
  Json out = Json::array();
  for (const auto& c : twist_fixed_candidates(o.k, o.n, t)) {
    Json entry{{"roots", roots_json(c.fixed.roots.roots)}, {"root_indices", c.fixed.root_indices.to_string()}};
    entry.update(point_to_json(c.fixed.point));
    entry["twist_residual"] = c.twist_residual;
    entry["twist_fixed"] = c.twist_fixed;
    entry["tnn"] = is_tnn(c.fixed.point, tol);
    out.push_back(std::move(entry));
  }
  return out;
}

Json cmd_promote(const Options& o) {
  Json doc = read_json_file(o.tableau);
  if (o.tableau_n > 0) doc["n"] = o.tableau_n;
  const Tableau t = tableau_from_json(doc);
  require_cap(t.n());
  if (!o.orbit) return tableau_to_json(promotion(t));
  Json orbit = Json::array();
  Tableau cur = t;
  do {
    orbit.push_back(cur.entries());
    cur = promotion(cur);
  } while (!(cur == t));
  const auto order = orbit.size();
  return Json{{"n", t.n()}, {"order", order}, {"orbit", std::move(orbit)}};
}

Json cmd_rowmotion(const Options& o, bool& pass) {
  require_kn(o, true);
  const Complex q = parse_complex(o.q);
  if (q == Complex(0.0, 0.0)) throw UsageError("q must be nonzero");
  Json out{{"k", o.k}, {"n", o.n}, {"q", to_json(q)}};
  if (!o.input.empty()) {
    const auto x = labels_from_json(read_json_file(o.input), o.k, o.n, q);
    out["image"] = labels_to_json(birational_rowmotion(x, resolve_tol(o)))["values"];
  }
  if (o.fixed_check) {
    const auto rep = rowmotion_fixed_check(o.k, o.n, q, o.starts, resolve_seed(o));
    out["fixed_check"] = Json{{"critical_points", rep.critical_points},
                              {"max_critical_residual", rep.max_critical_residual},
                              {"newton_starts", rep.newton_starts},
                              {"newton_fixed_points", rep.newton_fixed},
                              {"unmatched", rep.unmatched},
                              {"pass", rep.pass}};
    pass = rep.pass;
  }
  if (o.input.empty() && !o.fixed_check) throw UsageError("rowmotion needs --input or --fixed-check");
  return out;
}

Json cmd_flow(const Options& o) {
  const auto p = point_or_matrix_from_json(read_json_file(o.input));
  require_cap(p.n());
  if (!(o.time >= 0.0)) throw UsageError("--time must be nonnegative");
  return point_to_json(flow(p, o.time));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclic-symmetry computations on Grassmannians", "grcyc"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--tol", o.tol, "Absolute and relative comparison tolerance");
  app.add_option("--seed", o.seed, "Random seed (default: $GRCYC_SEED, else 1)");
  app.add_option("--output", o.output, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--json", o.json_flag, "Same as --output json");

  auto add_kn = [&](CLI::App* sub) {
    sub->add_option("--k", o.k, "Subspace dimension")->required();
    sub->add_option("--n", o.n, "Ambient dimension")->required();
  };
  auto add_common = [&](CLI::App* sub) {
    // Global flags are also accepted after the subcommand name.
    sub->add_option("--tol", o.tol);
    sub->add_option("--seed", o.seed);
    sub->add_option("--output", o.output)->check(CLI::IsMember({"json", "csv"}));
    sub->add_flag("--json", o.json_flag);
  };

  auto* v0 = app.add_subcommand("v0", "Totally positive fixed point V_0");
  add_kn(v0);
  add_common(v0);
  auto* v0_matrix_flag = v0->add_flag("--matrix", o.matrix, "Emit the moment-curve matrix");
  v0->add_flag("--pluckers", o.pluckers, "Emit Plücker coordinates (default)")->excludes(v0_matrix_flag);
  v0->add_option("--theta", o.theta, "Starting angle of the moment-curve samples");

  auto* fixed = app.add_subcommand("fixed-points", "All fixed points of the deformed cyclic shift");
  add_kn(fixed);
  add_common(fixed);
  fixed->add_option("--t", o.t, "Deformation parameter RE[,IM]");

  auto* tnn = app.add_subcommand("tnn", "Total nonnegativity tests for a point");
  add_common(tnn);
  tnn->add_option("--input", o.input, "Point or matrix JSON")->required()->check(CLI::ExistingFile);
  tnn->add_option("--samples", o.samples, "Sign-variation samples")->check(CLI::PositiveNumber);

  auto* schur = app.add_subcommand("schur", "Schur polynomials at fixed-point root sets");
  add_kn(schur);
  add_common(schur);
  schur->add_option("--t", o.t, "Deformation parameter RE[,IM]");
  schur->add_option("--lambda", o.lambda, "Partition, comma separated (default: all in the box)");
  schur->add_flag("--all-root-subsets", o.all_root_subsets, "Evaluate at every k-subset of roots");

  auto* critical = app.add_subcommand("critical", "Chart critical points of the superpotential");
  add_kn(critical);
  add_common(critical);
  critical->add_option("--q", o.q, "Parameter RE[,IM]");
  critical->add_option("--starts", o.starts, "Extra random Newton starts")->check(CLI::NonNegativeNumber);

  auto* twist = app.add_subcommand("twist", "Right (or left) twist of a matrix");
  add_common(twist);
  twist->add_option("--input", o.input, "Matrix or point JSON")->required()->check(CLI::ExistingFile);
  twist->add_flag("--left", o.left, "Apply the left twist");

  auto* twist_fixed = app.add_subcommand("twist-fixed", "Inversion-closed fixed points and their twist residuals");
  add_kn(twist_fixed);
  add_common(twist_fixed);
  twist_fixed->add_option("--t", o.t, "Deformation parameter RE[,IM]");

  auto* promote = app.add_subcommand("promote", "Promotion of a rectangular semistandard tableau");
  add_common(promote);
  promote->add_option("--tableau", o.tableau, "Tableau JSON")->required()->check(CLI::ExistingFile);
  promote->add_option("--n", o.tableau_n, "Alphabet size (overrides the file)");
  promote->add_flag("--orbit", o.orbit, "Emit the whole promotion orbit");

  auto* rowmotion = app.add_subcommand("rowmotion", "Birational rowmotion on [k] x [n-k]");
  add_kn(rowmotion);
  add_common(rowmotion);
  rowmotion->add_option("--q", o.q, "Top boundary label RE[,IM]");
  rowmotion->add_option("--input", o.input, "Labels JSON")->check(CLI::ExistingFile);
  rowmotion->add_flag("--fixed-check", o.fixed_check, "Compare fixed points with critical points");
  rowmotion->add_option("--starts", o.starts, "Random Newton starts for --fixed-check")->check(CLI::NonNegativeNumber);

  auto* flow_cmd = app.add_subcommand("flow", "Image of a point under exp(s sigma)");
  add_common(flow_cmd);
  flow_cmd->add_option("--input", o.input, "Point or matrix JSON")->required()->check(CLI::ExistingFile);
  flow_cmd->add_option("--time", o.time, "Flow time s >= 0")->required();

  auto* minmax = app.add_subcommand("minmax", "Extreme Plücker coordinates of V_0");
  add_kn(minmax);
  add_common(minmax);

  auto* verify = app.add_subcommand("verify-all", "Run every cross-check for one configuration");
  add_kn(verify);
  add_common(verify);
  verify->add_option("--t", o.t, "Deformation parameter RE[,IM]");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "grcyc: " << e.what() << '\n';
    return 2;
  }

  try {
    const OutputFormat format = (o.json_flag || o.output == "json") ? OutputFormat::Json : OutputFormat::Csv;
    Json doc;
    bool pass = true;
    if (*v0) {
      doc = cmd_v0(o);
    } else if (*fixed) {
      doc = cmd_fixed_points(o);
    } else if (*tnn) {
      doc = cmd_tnn(o);
    } else if (*schur) {
      doc = cmd_schur(o);
    } else if (*critical) {
      doc = cmd_critical(o);
    } else if (*twist) {
      doc = cmd_twist(o);
    } else if (*twist_fixed) {
      doc = cmd_twist_fixed(o);
    } else if (*promote) {
      doc = cmd_promote(o);
    } else if (*rowmotion) {
      doc = cmd_rowmotion(o, pass);
    } else if (*flow_cmd) {
      doc = cmd_flow(o);
    } else if (*minmax) {
      doc = minmax_plucker(o.k, o.n);
    } else if (*verify) {
      RunConfig cfg;
      cfg.k = o.k;
      cfg.n = o.n;
      cfg.t = parse_complex(o.t);
      cfg.seed = resolve_seed(o);
      cfg.tol = resolve_tol(o);
      cfg.output = format;
      auto result = run_verify_all(cfg);
      doc = std::move(result.report);
      pass = result.pass;
    }
    out << render(doc, format);
    return pass ? 0 : 1;
  } catch (const UsageError& e) {
    err << "grcyc: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "grcyc: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace grcyc::app

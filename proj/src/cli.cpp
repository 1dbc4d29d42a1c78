#include "grazecont/cli.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "grazecont/continuation.hpp"
#include "grazecont/csv.hpp"
#include "grazecont/errors.hpp"
#include "grazecont/oscillator.hpp"
#include "grazecont/selftest.hpp"
#include "grazecont/vivid.hpp"

namespace grazecont::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumerics = 2;

ModelParams model_from(const RunConfig& cfg) {
  ModelParams p;
  p.zeta = cfg.zeta;
  p.eps = cfg.eps;
  p.omega = cfg.omega;
  p.amp = cfg.amp;
  return p;
}

ContinuationConfig continuation_from(const RunConfig& cfg) {
  ContinuationConfig c;
  c.newton.tol = cfg.newton_tol;
  c.newton.max_iter = cfg.newton_max_iter;
  c.crossing.time_tol = cfg.time_tol;
  c.bif_tol = cfg.bif_tol;
  return c;
}

/// "dir/run.csv" -> "dir/run<suffix>.csv"; appends if there is no ".csv".
std::string derived_path(const std::string& base, const std::string& suffix) {
  const std::string ext = ".csv";
  if (base.size() >= ext.size() &&
      base.compare(base.size() - ext.size(), ext.size(), ext) == 0) {
    return base.substr(0, base.size() - ext.size()) + suffix + ext;
  }
  return base + suffix + ext;
}

/// Branch seed: the explicit (seed_y_imp, seed_z_imp) if configured,
/// otherwise brute-force simulation at the configured parameters.
ImpactPoint resolve_seed(const RunConfig& cfg, const ModelParams& params,
                         const CrossingSolverConfig& ccfg) {
  if (cfg.seed_y_imp) {
    const double z0 = cfg.seed_z_imp ? *cfg.seed_z_imp : z_graz(params);
    return {*cfg.seed_y_imp, z0};
  }
  return seed_by_simulation(params, cfg.p_loops, cfg.sim_steps,
                            cfg.transient_steps, ccfg);
}

/// Merge a curve traced in both omega directions from a common start point,
/// ordering by ascending omega when domega > 0 was the "up" direction.
/// Terminal points (resonance extrapolations / refined boundaries) are
/// placed at their respective ends.
std::vector<BifPoint> merge_two_sided(const Codim2Result& down,
                                      const Codim2Result& up) {
  std::vector<BifPoint> rows;
  if (down.terminal) rows.push_back(*down.terminal);
  for (auto it = down.points.rbegin(); it != down.points.rend(); ++it) {
    rows.push_back(*it);
  }
  for (std::size_t i = 1; i < up.points.size(); ++i) {
    rows.push_back(up.points[i]);
  }
  if (up.terminal) rows.push_back(*up.terminal);
  return rows;
}

std::vector<std::string> stop_annotations(const Codim2Result& down,
                                          const Codim2Result& up) {
  return {"low-omega stop: " + codim2_stop_name(down.stop),
          "high-omega stop: " + codim2_stop_name(up.stop)};
}

/// Locate the first codimension-one point of `kind` on a fresh branch traced
/// from `seed`: downward to the grazing point when the seed sits at
/// appreciable impact velocity (the bifurcations of interest lie between a
/// simulated attractor and grazing), upward for n_steps otherwise.
BifPoint locate_on_branch(const ImpactPoint& seed, BifKind kind,
                          const RunConfig& cfg, const ModelParams& params,
                          const ContinuationConfig& cont) {
  const double dy = std::abs(cfg.dy_imp);
  int n_steps = cfg.n_steps;
  double signed_dy = dy;
  if (seed.y > 100.0 * dy) {
    signed_dy = -dy;
    n_steps = static_cast<int>(std::ceil(seed.y / dy)) + 20;
  }
  const BranchResult branch =
      continue_branch(seed, n_steps, signed_dy, params, cfg.p_loops, cont);
  const std::vector<BifPoint> found =
      detect_codim1(branch.points, kind, params, cfg.p_loops, cont);
  return found.front();
}

}  // namespace

// ================================ graze ================================

int cmd_graze(const RunConfig& cfg) {
  const std::vector<GrazePoint> rows =
      grazing_curve(cfg.omega_min, cfg.omega_max, cfg.n_steps, cfg.zeta);
  write_graze_csv(cfg.output_path, rows);
  std::printf("graze: %zu rows over omega in [%g, %g] -> %s\n", rows.size(),
              cfg.omega_min, cfg.omega_max, cfg.output_path.c_str());
  return kExitOk;
}

// ================================ seed =================================

int cmd_seed(const RunConfig& cfg) {
  const ModelParams params = model_from(cfg);
  const ContinuationConfig cont = continuation_from(cfg);
  const ImpactPoint guess = resolve_seed(cfg, params, cont.crossing);

  const NewtonResult polished = newton_solve(
      guess.y, guess.z, params.amp, cfg.p_loops, params, cont.newton,
      cont.crossing);
  if (!polished.converged()) {
    std::fprintf(stderr,
                 "seed: Newton polish failed (residual %g after %d "
                 "iterations)\n",
                 polished.residual.max_norm(), polished.iterations);
    return kExitNumerics;
  }
  write_seed_csv(cfg.output_path, {guess.y, polished.z}, polished.amp,
                 cfg.omega);
  std::printf(
      "seed: y_imp=%.12g z_imp=%.12g amp=%.12g omega=%.12g -> %s\n", guess.y,
      polished.z, polished.amp, cfg.omega, cfg.output_path.c_str());
  return kExitOk;
}

// ================================ branch ===============================

int cmd_branch(const RunConfig& cfg) {
  const ModelParams params = model_from(cfg);
  const ContinuationConfig cont = continuation_from(cfg);
  const ImpactPoint seed = resolve_seed(cfg, params, cont.crossing);

  const BranchResult result = continue_branch(seed, cfg.n_steps, cfg.dy_imp,
                                              params, cfg.p_loops, cont);
  write_branch_csv(cfg.output_path, result.points);
  std::printf("branch: %zu points -> %s\n", result.points.size(),
              cfg.output_path.c_str());

  // Codimension-one sidecar: PD / SN by bisection, plus the grazing point
  // itself whenever the branch crosses y_imp = 0 (its location is analytic).
  std::vector<BifPoint> bifs;
  for (const BifKind kind : {BifKind::PD, BifKind::SN}) {
    try {
      for (const BifPoint& b :
           detect_codim1(result.points, kind, params, cfg.p_loops, cont)) {
        bifs.push_back(b);
      }
    } catch (const NoBracket&) {
      // The branch simply does not cross this bifurcation; not an error.
    }
  }
  for (std::size_t i = 1; i < result.points.size(); ++i) {
    const double y0 = result.points[i - 1].y_imp;
    const double y1 = result.points[i].y_imp;
    if ((y0 > 0.0 && y1 <= 0.0) || (y0 <= 0.0 && y1 > 0.0)) {
      bifs.push_back({BifKind::GRAZE, params.omega, a_graz(params), 0.0,
                      z_graz(params)});
    }
  }
  const std::string sidecar = derived_path(cfg.output_path, ".bif");
  write_bif_csv(sidecar, bifs);
  for (const BifPoint& b : bifs) {
    std::printf("branch: %s at omega=%.12g amp=%.12g y_imp=%.12g\n",
                bif_kind_name(b.kind).c_str(), b.omega, b.amp, b.y_imp);
  }
  std::printf("branch: %zu codim-1 points -> %s\n", bifs.size(),
              sidecar.c_str());

  if (!result.completed) {
    std::fprintf(stderr, "branch: stopped at step %d: %s\n",
                 result.failed_step, result.failure_reason.c_str());
    return kExitNumerics;
  }
  return kExitOk;
}

// ================================ codim2 ===============================

int cmd_codim2(const RunConfig& cfg) {
  const ContinuationConfig cont = continuation_from(cfg);
  const double dom = std::abs(cfg.domega);

  // --- analytic grazing curve ---
  const int n_graze =
      static_cast<int>(std::lround((cfg.omega_max - cfg.omega_min) / dom)) + 1;
  const std::string graze_path = derived_path(cfg.output_path, "_graze");
  write_graze_csv(graze_path,
                  grazing_curve(cfg.omega_min, cfg.omega_max, n_graze,
                                cfg.zeta));
  std::printf("codim2: grazing curve -> %s\n", graze_path.c_str());

  // --- period-doubling curve, seeded at the configured frequency ---
  ModelParams pd_params = model_from(cfg);
  const ImpactPoint pd_seed =
      resolve_seed(cfg, pd_params, cont.crossing);
  const BifPoint pd0 =
      locate_on_branch(pd_seed, BifKind::PD, cfg, pd_params, cont);
  std::printf("codim2: PD seed at omega=%.12g amp=%.12g y_imp=%.12g\n",
              pd0.omega, pd0.amp, pd0.y_imp);
  const Codim2Result pd_down =
      continue_codim2(pd0, BifKind::PD, -dom, cfg.omega_min, cfg.omega_max,
                      pd_params, cfg.p_loops, cont);
  const Codim2Result pd_up =
      continue_codim2(pd0, BifKind::PD, dom, cfg.omega_min, cfg.omega_max,
                      pd_params, cfg.p_loops, cont);
  const std::string pd_path = derived_path(cfg.output_path, "_pd");
  write_bif_csv(pd_path, merge_two_sided(pd_down, pd_up),
                stop_annotations(pd_down, pd_up));
  std::printf("codim2: PD curve (%zu + %zu points, stops: %s / %s) -> %s\n",
              pd_down.points.size(), pd_up.points.size(),
              codim2_stop_name(pd_down.stop).c_str(),
              codim2_stop_name(pd_up.stop).c_str(), pd_path.c_str());

  // --- saddle-node curve, seeded from the grazing zero at omega_sn ---
  ModelParams sn_params = model_from(cfg);
  sn_params.omega = cfg.omega_sn;
  sn_params.amp = a_graz(sn_params);
  const ImpactPoint sn_seed{0.0, z_graz(sn_params)};
  const BifPoint sn0 =
      locate_on_branch(sn_seed, BifKind::SN, cfg, sn_params, cont);
  std::printf("codim2: SN seed at omega=%.12g amp=%.12g y_imp=%.12g\n",
              sn0.omega, sn0.amp, sn0.y_imp);
  const Codim2Result sn_down =
      continue_codim2(sn0, BifKind::SN, -dom, cfg.omega_min, cfg.omega_max,
                      sn_params, cfg.p_loops, cont);
  const Codim2Result sn_up =
      continue_codim2(sn0, BifKind::SN, dom, cfg.omega_min, cfg.omega_max,
                      sn_params, cfg.p_loops, cont);
  const std::string sn_path = derived_path(cfg.output_path, "_sn");
  write_bif_csv(sn_path, merge_two_sided(sn_down, sn_up),
                stop_annotations(sn_down, sn_up));
  std::printf("codim2: SN curve (%zu + %zu points, stops: %s / %s) -> %s\n",
              sn_down.points.size(), sn_up.points.size(),
              codim2_stop_name(sn_down.stop).c_str(),
              codim2_stop_name(sn_up.stop).c_str(), sn_path.c_str());

  // --- secondary-grazing curve from the SN boundary terminal, if any ---
  const std::string g2_path = derived_path(cfg.output_path, "_graze2");
  const Codim2Result* sn_sides[2] = {&sn_down, &sn_up};
  bool wrote_g2 = false;
  for (const Codim2Result* side : sn_sides) {
    if (side->stop != Codim2Stop::secondary_grazing || !side->terminal) {
      continue;
    }
    const BifPoint g2_start = *side->terminal;
    const Codim2Result g2_down =
        continue_graze2(g2_start, -dom, cfg.omega_min, cfg.omega_max,
                        model_from(cfg), cfg.p_loops, cont,
                        side->terminal_hints);
    const Codim2Result g2_up =
        continue_graze2(g2_start, dom, cfg.omega_min, cfg.omega_max,
                        model_from(cfg), cfg.p_loops, cont,
                        side->terminal_hints);
    write_bif_csv(g2_path, merge_two_sided(g2_down, g2_up),
                  stop_annotations(g2_down, g2_up));
    std::printf(
        "codim2: secondary-grazing curve (%zu + %zu points, stops: %s / %s) "
        "-> %s\n",
        g2_down.points.size(), g2_up.points.size(),
        codim2_stop_name(g2_down.stop).c_str(),
        codim2_stop_name(g2_up.stop).c_str(), g2_path.c_str());
    wrote_g2 = true;
    break;
  }
  if (!wrote_g2) {
    write_bif_csv(g2_path, {});
    std::printf(
        "codim2: no secondary-grazing boundary found on the SN curve -> %s "
        "(header only)\n",
        g2_path.c_str());
  }
  return kExitOk;
}

// =============================== selftest ==============================

int cmd_selftest(const RunConfig& cfg) {
  const SelftestReport rep = run_selftest(cfg);
  for (const SelftestCheck& c : rep.checks) {
    std::printf("[%s] %s: %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                c.detail.c_str());
  }
  std::printf("selftest: %s\n", rep.all_pass ? "all checks passed"
                                             : "FAILURES detected");
  return rep.all_pass ? kExitOk : kExitNumerics;
}

// ============================= entry point =============================

int run(int argc, char** argv) {
  CLI::App app{
      "graze-cont: continuation of maximal periodic orbits of an impact "
      "oscillator through grazing"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_override;
  const struct {
    const char* name;
    const char* desc;
    int (*fn)(const RunConfig&);
  } commands[] = {
      {"graze", "tabulate the analytic grazing curve", cmd_graze},
      {"seed", "find one periodic orbit and write it as a seed", cmd_seed},
      {"branch", "continue a branch in amplitude at fixed frequency",
       cmd_branch},
      {"codim2", "trace the two-parameter bifurcation curves", cmd_codim2},
      {"selftest", "run the built-in diagnostics battery", cmd_selftest},
  };
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.desc);
    sub->add_option("--config", config_path, "configuration file (key = value)")
        ->required();
    sub->add_option("--out", out_override,
                    "override the configured output path");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  RunConfig cfg;
  try {
    cfg = parse_config_file(config_path);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  }
  if (!out_override.empty()) cfg.output_path = out_override;

  for (const auto& c : commands) {
    if (!app.get_subcommand(c.name)->parsed()) continue;
    cfg.command = c.name;
    try {
      return c.fn(cfg);
    } catch (const NumericsError& e) {
      std::fprintf(stderr, "%s: numerical failure: %s\n", c.name, e.what());
      return kExitNumerics;
    } catch (const std::invalid_argument& e) {
      std::fprintf(stderr, "%s: invalid argument: %s\n", c.name, e.what());
      return kExitNumerics;
    }
  }
  return kExitConfig;  // unreachable: a subcommand is required
}

}  // namespace grazecont::cli

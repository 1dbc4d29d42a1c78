#include "grazecont/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "grazecont/errors.hpp"

namespace grazecont {

namespace {

// History entry used by the branch predictor; z is kept unwrapped so the
// extrapolation never sees the 0/2pi seam.  The crossing hints of the last
// accepted solution keep the chain following the same section crossings.
struct HistPoint {
  double y = 0.0;
  double z = 0.0;
  double amp = 0.0;
  ChainHints hints{};
};

// Lagrange extrapolation through the last (up to three) accepted points.
double extrapolate(const std::vector<HistPoint>& hist, double y_new,
                   double HistPoint::* field) {
  const std::size_t n = hist.size();
  if (n == 1) return hist[0].*field;
  if (n == 2) {
    const HistPoint& a = hist[0];
    const HistPoint& b = hist[1];
    return b.*field + (b.*field - a.*field) * (y_new - b.y) / (b.y - a.y);
  }
  const HistPoint& a = hist[n - 3];
  const HistPoint& b = hist[n - 2];
  const HistPoint& c = hist[n - 1];
  const double la =
      (y_new - b.y) * (y_new - c.y) / ((a.y - b.y) * (a.y - c.y));
  const double lb =
      (y_new - a.y) * (y_new - c.y) / ((b.y - a.y) * (b.y - c.y));
  const double lc =
      (y_new - a.y) * (y_new - b.y) / ((c.y - a.y) * (c.y - b.y));
  return la * (a.*field) + lb * (b.*field) + lc * (c.*field);
}

std::string newton_status_name(NewtonStatus s) {
  switch (s) {
    case NewtonStatus::converged: return "converged";
    case NewtonStatus::max_iter_exceeded: return "max iterations exceeded";
    case NewtonStatus::singular_jacobian: return "singular Jacobian";
    case NewtonStatus::evaluation_failed: return "evaluation failed";
  }
  return "unknown";
}

// Attach multipliers and flags to an accepted solution.
BranchPoint make_branch_point(double y, double z_wrapped, double amp,
                              const ModelParams& base, int p_loops,
                              const ContinuationConfig& cfg, bool halved,
                              const ChainHints& hints) {
  BranchPoint bp;
  bp.y_imp = y;
  bp.z_imp = z_wrapped;
  bp.amp = amp;
  bp.omega = base.omega;
  bp.is_virtual = y < 0.0;
  bp.halved_step = halved;
  if (std::abs(y) >= cfg.multiplier_guard) {
    ModelParams mp = base;
    mp.amp = amp;
    try {
      const ImpactOscillator osc(mp);
      const Multipliers m = stability_multipliers({y, z_wrapped}, p_loops,
                                                  osc, cfg.crossing, &hints);
      bp.lambda1 = m.lambda1;
      bp.lambda2 = m.lambda2;
      bp.multipliers_valid = true;
      bp.stable = y > 0.0 && std::abs(m.lambda1) < 1.0 &&
                  std::abs(m.lambda2) < 1.0;
    } catch (const NumericsError&) {
      // Leave the multipliers flagged invalid.
    }
  }
  return bp;
}

// Codimension-one test functions.  For a complex pair both eigenvalues
// share the real part, so the expressions below remain continuous across
// the real/complex transition.
double codim1_test(const Multipliers& m, BifKind kind) {
  return (kind == BifKind::PD) ? m.lambda2.real() + 1.0
                               : m.lambda1.real() - 1.0;
}

// A solved point of the defect function with a test-function value and the
// crossing hints of its chain.
struct TrialEval {
  double y = 0.0;
  double z = 0.0;  // wrapped
  double amp = 0.0;
  double g = 0.0;
  ChainHints hints{};
};

// Evaluate the codim-1 test function (or the secondary-grazing distance for
// GRAZE2) at fixed (omega taken from base, y), solving for (z, A) first.
// warm_hints seeds the crossing chain (pass an invalid ChainHints for a
// fresh first-crossing evaluation).
std::optional<TrialEval> eval_test_function(
    double y, double z_warm, double amp_warm, const ChainHints& warm_hints,
    BifKind kind, const ModelParams& base, int p_loops,
    const ContinuationConfig& cfg) {
  ChainHints h = warm_hints;
  const NewtonResult nr = newton_solve(y, z_warm, amp_warm, p_loops, base,
                                       cfg.newton, cfg.crossing, &h);
  if (!nr.converged()) return std::nullopt;
  ModelParams mp = base;
  mp.amp = nr.amp;
  try {
    const ImpactOscillator osc(mp);
    double g;
    if (kind == BifKind::GRAZE2) {
      g = detect_secondary_grazing({y, nr.z}, p_loops, osc, cfg.crossing);
    } else {
      const Multipliers m =
          stability_multipliers({y, nr.z}, p_loops, osc, cfg.crossing, &h);
      g = codim1_test(m, kind);
    }
    return TrialEval{y, nr.z, nr.amp, g, h};
  } catch (const NumericsError&) {
    return std::nullopt;
  }
}

// Interpolate a phase between two wrapped values without crossing the seam.
double lerp_phase(double z_from, double z_to, double frac) {
  return z_from + wrap_pi(z_to - z_from) * frac;
}

// Bisection in y between two evaluated points with opposite test-function
// signs.  Returns the point with |g| < bif_tol (or the best midpoint once
// the interval is exhausted).
std::optional<TrialEval> bisect_test_function(TrialEval lo, TrialEval hi,
                                              BifKind kind,
                                              const ModelParams& base,
                                              int p_loops,
                                              const ContinuationConfig& cfg) {
  if (lo.y > hi.y) std::swap(lo, hi);
  TrialEval best = (std::abs(lo.g) < std::abs(hi.g)) ? lo : hi;
  for (int it = 0; it < 200; ++it) {
    if (std::abs(best.g) < cfg.bif_tol) return best;
    const double span = hi.y - lo.y;
    if (span < 1e-14 * std::max(1.0, std::abs(hi.y))) break;
    const double y_m = 0.5 * (lo.y + hi.y);
    const double frac = (y_m - lo.y) / span;
    const double z_warm = lerp_phase(lo.z, hi.z, frac);
    const double amp_warm = lo.amp + (hi.amp - lo.amp) * frac;
    std::optional<TrialEval> mid = eval_test_function(
        y_m, z_warm, amp_warm, lo.hints, kind, base, p_loops, cfg);
    if (!mid) {
      // Retry slightly off-centre before giving up on the bracket.
      mid = eval_test_function(lo.y + 0.45 * span, z_warm, amp_warm, lo.hints,
                               kind, base, p_loops, cfg);
      if (!mid) return std::nullopt;
    }
    if (std::abs(mid->g) < std::abs(best.g)) best = *mid;
    if ((mid->g > 0.0) == (lo.g > 0.0)) {
      lo = *mid;
    } else {
      hi = *mid;
    }
  }
  if (std::abs(best.g) < cfg.bif_tol) return best;
  return std::nullopt;
}

// Build a sign-change bracket for the test function around y_pred by
// probing outward on both sides.
std::optional<std::pair<TrialEval, TrialEval>> bracket_test_function(
    double y_pred, double half_width, double z_warm, double amp_warm,
    const ChainHints& hints_warm, BifKind kind, const ModelParams& base,
    int p_loops, const ContinuationConfig& cfg) {
  std::optional<TrialEval> neg;
  std::optional<TrialEval> pos;
  const auto note = [&](const std::optional<TrialEval>& e) {
    if (!e) return;
    if (e->g < 0.0) {
      if (!neg || std::abs(e->g) < std::abs(neg->g)) neg = e;
    } else {
      if (!pos || std::abs(e->g) < std::abs(pos->g)) pos = e;
    }
  };

  double z_w = z_warm;
  double a_w = amp_warm;
  ChainHints h_w = hints_warm;
  const auto probe = [&](double y) {
    if (y < cfg.y_bisect_floor) y = cfg.y_bisect_floor;
    const std::optional<TrialEval> e =
        eval_test_function(y, z_w, a_w, h_w, kind, base, p_loops, cfg);
    if (e) {
      z_w = e->z;  // warm-start the next probe from the nearest solution
      a_w = e->amp;
      h_w = e->hints;
    }
    note(e);
    return neg && pos;
  };

  if (probe(y_pred)) return std::make_pair(*neg, *pos);
  double h = half_width;
  for (int k = 0; k < 24; ++k) {
    if (probe(y_pred + h)) return std::make_pair(*neg, *pos);
    if (y_pred - h > cfg.y_bisect_floor || k < 12) {
      if (probe(y_pred - h)) return std::make_pair(*neg, *pos);
    }
    h *= 1.7;
  }
  return std::nullopt;
}

BifPoint to_bif_point(const TrialEval& e, BifKind kind, double omega) {
  return {kind, omega, e.amp, e.y, e.z};
}

// Linear extrapolation of a codim-2 curve to y = 0, used for the resonance
// terminal point.
BifPoint extrapolate_resonance(const std::vector<BifPoint>& pts) {
  const BifPoint& b = pts.back();
  if (pts.size() < 2 || pts[pts.size() - 2].y_imp == b.y_imp) {
    return {BifKind::RESONANCE, b.omega, b.amp, 0.0, b.z_imp};
  }
  const BifPoint& a = pts[pts.size() - 2];
  const double frac = (0.0 - b.y_imp) / (b.y_imp - a.y_imp);
  BifPoint r;
  r.kind = BifKind::RESONANCE;
  r.omega = b.omega + (b.omega - a.omega) * frac;
  r.amp = b.amp + (b.amp - a.amp) * frac;
  r.y_imp = 0.0;
  r.z_imp = wrap_2pi(b.z_imp + wrap_pi(b.z_imp - a.z_imp) * frac);
  return r;
}

// Shared driver for the PD / SN / GRAZE2 codim-2 curves: step omega, re-solve
// the test function by bisection in y, stop on a fired rule.  When a full
// omega step can no longer be solved the terminus is approached by bisecting
// omega between the last solvable frequency and the failed one: these curves
// end inside the frequency window only by y collapsing to zero at a
// resonance, so if y fails to collapse the stop is an honest bracket
// collapse.
Codim2Result trace_codim2_curve(const BifPoint& start, BifKind kind,
                                double domega, double omega_min,
                                double omega_max, const ModelParams& base,
                                int p_loops, const ContinuationConfig& cfg,
                                const ChainHints& seed_hints) {
  if (domega == 0.0) {
    throw std::invalid_argument("domega must be nonzero");
  }
  Codim2Result out;
  out.points.push_back(start);
  out.stop = Codim2Stop::step_limit;

  double omega = start.omega;
  double y_prev = start.y_imp;
  double y_prev2 = start.y_imp;  // for the linear y predictor
  double z_prev = start.z_imp;
  double amp_prev = start.amp;
  ChainHints hints_prev = seed_hints;
  double half_width = std::max(0.3 * std::abs(start.y_imp), 1e-6);

  // Solve the curve condition at frequency om near y_pred, warm-starting
  // from the last accepted solution.
  const auto try_solve_at =
      [&](double om, double y_pred,
          double width) -> std::optional<TrialEval> {
    ModelParams stepped = base;
    stepped.omega = om;
    const auto bracket =
        bracket_test_function(y_pred, width, z_prev, amp_prev, hints_prev,
                              kind, stepped, p_loops, cfg);
    if (!bracket) return std::nullopt;
    return bisect_test_function(bracket->first, bracket->second, kind,
                                stepped, p_loops, cfg);
  };

  const auto accept = [&](const TrialEval& solved, double om) {
    out.points.push_back(to_bif_point(solved, kind, om));
    y_prev2 = y_prev;
    y_prev = solved.y;
    z_prev = solved.z;
    amp_prev = solved.amp;
    hints_prev = solved.hints;
    omega = om;
  };

  // Walk toward the terminus between the last solvable frequency and om_bad.
  const auto refine_terminus = [&](double om_bad) {
    double om_good = omega;
    for (int it = 0; it < 80 && std::abs(om_bad - om_good) > 1e-11; ++it) {
      const double om_mid = 0.5 * (om_good + om_bad);
      const auto sol = try_solve_at(om_mid, y_prev,
                                    std::max(0.3 * std::abs(y_prev), 1e-6));
      if (sol) {
        accept(*sol, om_mid);
        om_good = om_mid;
        if (sol->y < cfg.resonance_y_tol) break;
      } else {
        om_bad = om_mid;
      }
    }
    if (y_prev < 100.0 * cfg.resonance_y_tol) {
      out.stop = Codim2Stop::resonance;
      out.terminal = extrapolate_resonance(out.points);
    } else {
      out.stop = Codim2Stop::bracket_collapse;
    }
  };

  for (int step = 1; step <= cfg.max_codim2_steps; ++step) {
    const double omega_new = omega + domega;
    if (omega_new < omega_min || omega_new > omega_max) {
      out.stop = Codim2Stop::omega_window;
      break;
    }

    double y_pred = 2.0 * y_prev - y_prev2;
    if (out.points.size() < 2) y_pred = y_prev;
    if (y_pred < cfg.y_bisect_floor) y_pred = cfg.y_bisect_floor;

    const std::optional<TrialEval> solved =
        try_solve_at(omega_new, y_pred, half_width);
    if (!solved) {
      refine_terminus(omega_new);
      break;
    }

    out.points.push_back(to_bif_point(*solved, kind, omega_new));
    if (solved->y < cfg.resonance_y_tol) {
      hints_prev = solved->hints;
      out.stop = Codim2Stop::resonance;
      out.terminal = extrapolate_resonance(out.points);
      break;
    }

    // The SN curve ends where the deepest non-impacting maximum of the
    // orbit reaches the stop; refine that boundary in omega and stop there.
    bool stopped = false;
    if (kind == BifKind::SN) {
      ModelParams mp = base;
      mp.omega = omega_new;
      mp.amp = solved->amp;
      const ImpactOscillator osc(mp);
      const double g2 = detect_secondary_grazing({solved->y, solved->z},
                                                 p_loops, osc, cfg.crossing);
      if (g2 >= 0.0) {
        out.points.pop_back();  // the overshot point is beyond the boundary
        out.stop = Codim2Stop::secondary_grazing;

        // Bisect in omega between the clearing side and the overshot side;
        // each trial re-solves the SN condition at the midpoint frequency.
        double om_neg = omega;      // side with g2 < 0
        double om_pos = omega_new;  // side with g2 >= 0
        TrialEval warm = *solved;
        TrialEval boundary = *solved;
        double boundary_om = omega_new;
        double boundary_g2 = g2;
        for (int it = 0; it < 100; ++it) {
          if (std::abs(boundary_g2) < cfg.bif_tol ||
              std::abs(om_pos - om_neg) < 1e-12) {
            break;
          }
          const double om_mid = 0.5 * (om_neg + om_pos);
          ModelParams mid = base;
          mid.omega = om_mid;
          const auto br = bracket_test_function(
              warm.y, std::max(0.3 * std::abs(warm.y), 1e-6), warm.z,
              warm.amp, warm.hints, BifKind::SN, mid, p_loops, cfg);
          if (!br) break;
          const auto sol = bisect_test_function(br->first, br->second,
                                                BifKind::SN, mid, p_loops,
                                                cfg);
          if (!sol) break;
          ModelParams msol = mid;
          msol.amp = sol->amp;
          const ImpactOscillator osc_mid(msol);
          const double g2_mid = detect_secondary_grazing(
              {sol->y, sol->z}, p_loops, osc_mid, cfg.crossing);
          if (std::abs(g2_mid) < std::abs(boundary_g2)) {
            boundary = *sol;
            boundary_om = om_mid;
            boundary_g2 = g2_mid;
          }
          if (g2_mid >= 0.0) {
            om_pos = om_mid;
          } else {
            om_neg = om_mid;
          }
          warm = *sol;
        }
        BifPoint end = to_bif_point(boundary, BifKind::SN, boundary_om);
        out.points.push_back(end);
        hints_prev = boundary.hints;
        end.kind = BifKind::GRAZE2;
        out.terminal = end;
        stopped = true;
      }
    }
    if (stopped) break;

    y_prev2 = y_prev;
    y_prev = solved->y;
    z_prev = solved->z;
    amp_prev = solved->amp;
    hints_prev = solved->hints;
    omega = omega_new;
    half_width = std::clamp(4.0 * std::abs(y_prev - y_prev2), 1e-7,
                            std::max(0.5 * std::abs(y_prev), 1e-6));
  }
  out.terminal_hints = hints_prev;
  return out;
}

}  // namespace

// ============================== Seeding ==============================

ImpactPoint seed_by_simulation(const ModelParams& params, int p_loops,
                               int sim_steps, int transient_steps,
                               const CrossingSolverConfig& cfg) {
  if (p_loops < 1) throw std::invalid_argument("p_loops must be >= 1");
  if (sim_steps <= transient_steps || transient_steps < 0) {
    throw std::invalid_argument("need 0 <= transient_steps < sim_steps");
  }
  const ImpactOscillator osc(params);

  // Start at the forced-response maximum; for amplitudes beyond grazing
  // this is a virtual point and the first step already applies the
  // discontinuity correction.
  const SectionPoint s0{params.amp / a_graz(params) - 1.0, z_graz(params)};
  std::vector<PoincareStep> steps;
  try {
    steps = simulate_hybrid(s0, sim_steps, osc, cfg);
  } catch (const NumericsError& e) {
    throw NoPeriodicAttractor(std::string("hybrid simulation failed: ") +
                              e.what());
  }

  std::vector<std::pair<int, ImpactPoint>> impacts;
  for (int i = transient_steps; i < sim_steps; ++i) {
    if (steps[static_cast<std::size_t>(i)].impact) {
      impacts.emplace_back(i, *steps[static_cast<std::size_t>(i)].impact);
    }
  }
  if (impacts.size() < 2) {
    throw NoPeriodicAttractor(
        "fewer than two impacts after the transient; no impacting periodic "
        "attractor found");
  }
  constexpr double kRecurTol = 1e-6;
  for (std::size_t k = 1; k < impacts.size(); ++k) {
    if (impacts[k].first - impacts[k - 1].first != p_loops) {
      throw NoPeriodicAttractor(
          "impacts do not recur every " + std::to_string(p_loops) +
          " steps (gap of " +
          std::to_string(impacts[k].first - impacts[k - 1].first) + ")");
    }
    const double dy = impacts[k].second.y - impacts[k - 1].second.y;
    const double dz = wrap_pi(impacts[k].second.z - impacts[k - 1].second.z);
    if (std::abs(dy) > kRecurTol || std::abs(dz) > kRecurTol) {
      throw NoPeriodicAttractor(
          "impact points do not recur within 1e-6 after the transient");
    }
  }

  double y_sum = 0.0;
  double z_sum = 0.0;
  const double z_anchor = impacts.front().second.z;
  for (const auto& [idx, imp] : impacts) {
    y_sum += imp.y;
    z_sum += z_anchor + wrap_pi(imp.z - z_anchor);
  }
  const double n = static_cast<double>(impacts.size());
  return {y_sum / n, wrap_2pi(z_sum / n)};
}

// ========================== One-parameter branch ==========================

BranchResult continue_branch(const ImpactPoint& seed, int n_steps, double dy,
                             const ModelParams& base, int p_loops,
                             const ContinuationConfig& cfg) {
  BranchResult out;
  ChainHints seed_hints;
  const NewtonResult first =
      newton_solve(seed.y, seed.z, base.amp, p_loops, base, cfg.newton,
                   cfg.crossing, &seed_hints);
  if (!first.converged()) {
    out.completed = false;
    out.failed_step = 0;
    out.failure_reason =
        "seed polish failed: " + newton_status_name(first.status);
    return out;
  }

  std::vector<HistPoint> hist;
  hist.push_back({seed.y, first.z, first.amp, seed_hints});
  out.points.push_back(make_branch_point(seed.y, first.z, first.amp, base,
                                         p_loops, cfg, false, seed_hints));

  const auto try_step = [&](double y_new) -> std::optional<HistPoint> {
    const double z_pred = extrapolate(hist, y_new, &HistPoint::z);
    const double amp_pred = extrapolate(hist, y_new, &HistPoint::amp);
    ChainHints h = hist.back().hints;
    const NewtonResult nr = newton_solve(y_new, z_pred, amp_pred, p_loops,
                                         base, cfg.newton, cfg.crossing, &h);
    if (!nr.converged()) return std::nullopt;
    // Keep the stored phase continuous with the prediction.
    return HistPoint{y_new, z_pred + wrap_pi(nr.z - z_pred), nr.amp, h};
  };

  for (int step = 1; step <= n_steps; ++step) {
    bool halved = false;
    std::optional<HistPoint> accepted = try_step(hist.back().y + dy);
    if (!accepted) {
      halved = true;
      accepted = try_step(hist.back().y + 0.5 * dy);
    }
    if (!accepted) {
      out.completed = false;
      out.failed_step = step;
      out.failure_reason = "Newton failed at y_imp = " +
                           std::to_string(hist.back().y + dy) +
                           " even after one step halving";
      return out;
    }
    hist.push_back(*accepted);
    if (hist.size() > 3) hist.erase(hist.begin());
    out.points.push_back(make_branch_point(accepted->y,
                                           wrap_2pi(accepted->z),
                                           accepted->amp, base, p_loops, cfg,
                                           halved, accepted->hints));
  }
  return out;
}

std::vector<BifPoint> detect_codim1(const std::vector<BranchPoint>& branch,
                                    BifKind kind, const ModelParams& base,
                                    int p_loops,
                                    const ContinuationConfig& cfg) {
  if (kind != BifKind::PD && kind != BifKind::SN) {
    throw std::invalid_argument(
        "detect_codim1 locates PD or SN points only");
  }
  const auto g_of = [&](const BranchPoint& bp) {
    return (kind == BifKind::PD) ? bp.lambda2.real() + 1.0
                                 : bp.lambda1.real() - 1.0;
  };
  const auto usable = [](const BranchPoint& bp) {
    return bp.multipliers_valid && bp.lambda1.imag() == 0.0 &&
           bp.lambda2.imag() == 0.0;
  };

  std::vector<BifPoint> found;
  for (std::size_t i = 0; i + 1 < branch.size(); ++i) {
    const BranchPoint& a = branch[i];
    const BranchPoint& b = branch[i + 1];
    if (!usable(a) || !usable(b)) continue;
    const double ga = g_of(a);
    const double gb = g_of(b);
    if (ga * gb > 0.0 || (ga == 0.0 && gb == 0.0)) continue;

    const TrialEval ea{a.y_imp, a.z_imp, a.amp, ga, ChainHints{}};
    const TrialEval eb{b.y_imp, b.z_imp, b.amp, gb, ChainHints{}};
    const std::optional<TrialEval> refined =
        bisect_test_function(ea, eb, kind, base, p_loops, cfg);
    if (refined) {
      found.push_back(to_bif_point(*refined, kind, base.omega));
    }
  }
  if (found.empty()) {
    throw NoBracket(std::string("no sign change of the ") +
                    (kind == BifKind::PD ? "lambda2 + 1" : "lambda1 - 1") +
                    " test function along the branch");
  }
  return found;
}

// ========================== Two-parameter curves ==========================

Codim2Result continue_codim2(const BifPoint& start, BifKind kind,
                             double domega, double omega_min, double omega_max,
                             const ModelParams& base, int p_loops,
                             const ContinuationConfig& cfg,
                             const ChainHints& seed_hints) {
  if (kind != BifKind::PD && kind != BifKind::SN) {
    throw std::invalid_argument("continue_codim2 traces PD or SN curves");
  }
  return trace_codim2_curve(start, kind, domega, omega_min, omega_max, base,
                            p_loops, cfg, seed_hints);
}

double detect_secondary_grazing(const ImpactPoint& p, int p_loops,
                                const HybridModel& model,
                                const CrossingSolverConfig& cfg) {
  if (p_loops <= 1) return -std::numeric_limits<double>::infinity();
  // One period of free flight: from just after the outgoing impact to the
  // next impact, which by periodicity lies exactly p_loops forcing periods
  // after the incoming one.
  const ImpactPoint outgoing = model.reset(p);
  const double t_out = p.z / model.omega();
  const double t_next =
      t_out + p_loops * 2.0 * std::numbers::pi / model.omega();
  const State s{0.0, outgoing.y, t_out, p.z};
  double deepest = -std::numeric_limits<double>::infinity();
  for (const SectionArrival& m : flow_maxima(s, t_next, model, cfg)) {
    deepest = std::max(deepest, m.x);
  }
  return deepest;
}

Codim2Result continue_graze2(const BifPoint& start, double domega,
                             double omega_min, double omega_max,
                             const ModelParams& base, int p_loops,
                             const ContinuationConfig& cfg,
                             const ChainHints& seed_hints) {
  BifPoint s2 = start;
  s2.kind = BifKind::GRAZE2;
  return trace_codim2_curve(s2, BifKind::GRAZE2, domega, omega_min, omega_max,
                            base, p_loops, cfg, seed_hints);
}

// ============================ Grazing curve ============================

std::vector<GrazePoint> grazing_curve(double omega_min, double omega_max,
                                      int n, double zeta) {
  std::vector<GrazePoint> out;
  if (n <= 0) return out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double w =
        (n == 1) ? omega_min
                 : omega_min + (omega_max - omega_min) * i / (n - 1.0);
    ModelParams p;
    p.zeta = zeta;
    p.omega = w;
    out.push_back({w, a_graz(p), z_graz(p)});
  }
  return out;
}

}  // namespace grazecont

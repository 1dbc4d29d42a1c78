#include "grazecont/maps.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "grazecont/errors.hpp"

namespace grazecont {

namespace {

// Below this arrival |acceleration| the crossing-time derivatives blow up
// and the map Jacobians are rejected as singular.
constexpr double kSingularAccel = 1e-10;

// A start point whose |velocity| is below this is treated as already lying
// on the section by next_section_crossing (skip-current semantics).
constexpr double kOnSectionVel = 1e-10;

// Offset applied to hop over a crossing at the start point itself.  It is
// far above the crossing-time tolerance and far below the distance to any
// neighbouring velocity zero of the smooth flow.
constexpr double kSkipOffset = 1e-6;

double default_bracket_dt(const HybridModel& model,
                          const CrossingSolverConfig& cfg) {
  if (cfg.bracket_dt > 0.0) return cfg.bracket_dt;
  return 2.0 * std::numbers::pi / (64.0 * model.omega());
}

// Bisection-safeguarded Newton iteration for a root of the velocity inside
// the bracket [ta, tb] (any orientation) with va = v(ta), vb = v(tb) of
// opposite sign.  The derivative of the velocity is the analytic
// acceleration.  Converges to |dt| <= time_tol.
double polish_velocity_root(const HybridModel& model, double x0, double y0,
                            double t0, double ta, double va, double tb,
                            double vb, double time_tol) {
  double lo = std::min(ta, tb);
  double hi = std::max(ta, tb);
  double vlo = (ta <= tb) ? va : vb;
  double t = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const FlowPoint fp = model.flow_point(t, x0, y0, t0);
    if (fp.v == 0.0) return t;
    if ((fp.v > 0.0) == (vlo > 0.0)) {
      lo = t;
      vlo = fp.v;
    } else {
      hi = t;
    }
    double t_next;
    if (fp.a != 0.0) {
      t_next = t - fp.v / fp.a;
      if (!(t_next > lo && t_next < hi)) t_next = 0.5 * (lo + hi);
    } else {
      t_next = 0.5 * (lo + hi);
    }
    if (std::abs(t_next - t) <= time_tol || (hi - lo) <= time_tol) {
      return t_next;
    }
    t = t_next;
  }
  return t;
}

struct Crossing {
  double t = 0.0;  // unwrapped crossing time
  double x = 0.0;  // displacement at the crossing
  double v = 0.0;  // velocity residual (|v| ~ acceleration * time_tol)
  double a = 0.0;  // acceleration at the crossing
};

// First velocity zero with negative acceleration from (x0, y0) at t0 in the
// given direction.  skip_initial hops over a crossing located at the start
// point itself.
Crossing find_section_crossing(const HybridModel& model, double x0, double y0,
                               double t0, Direction dir, bool skip_initial,
                               const CrossingSolverConfig& cfg) {
  const double h = default_bracket_dt(model, cfg);
  const double sgn = (dir == Direction::forward) ? 1.0 : -1.0;

  double t_prev = t0;
  double v_prev = y0;
  if (skip_initial || v_prev == 0.0) {
    t_prev = t0 + sgn * kSkipOffset;
    v_prev = model.flow_point(t_prev, x0, y0, t0).v;
  }

  for (int k = 1; k <= cfg.max_bracket_steps; ++k) {
    const double t_k = t_prev + sgn * h;
    const FlowPoint fp_k = model.flow_point(t_k, x0, y0, t0);
    if (v_prev * fp_k.v <= 0.0) {
      const double t_root =
          (fp_k.v == 0.0)
              ? t_k
              : polish_velocity_root(model, x0, y0, t0, t_prev, v_prev, t_k,
                                     fp_k.v, cfg.time_tol);
      const FlowPoint at_root = model.flow_point(t_root, x0, y0, t0);
      if (at_root.a < 0.0) {
        return {t_root, at_root.x, at_root.v, at_root.a};
      }
      // Displacement minimum: skip and keep scanning.
    }
    t_prev = t_k;
    v_prev = fp_k.v;
  }
  throw NoCrossingFound(
      "no section crossing within " + std::to_string(cfg.max_bracket_steps) +
      " bracketing steps from t = " + std::to_string(t0));
}

// Window half-width (fraction of the forcing period) and sample count of
// the hinted crossing search.  The window is wide enough to keep a followed
// crossing inside across one continuation step and narrow enough to exclude
// the corresponding crossing of the neighbouring loop.
constexpr double kHintWindowFrac = 0.45;
constexpr int kHintSamples = 64;

// All velocity zeros with negative acceleration inside the hint window;
// returns the one nearest t_hint.
Crossing find_crossing_near(const HybridModel& model, double x0, double y0,
                            double t0, double t_hint,
                            const CrossingSolverConfig& cfg) {
  const double half =
      kHintWindowFrac * 2.0 * std::numbers::pi / model.omega();
  const double h = 2.0 * half / kHintSamples;
  std::optional<Crossing> best;
  double t_prev = t_hint - half;
  double v_prev = model.flow_point(t_prev, x0, y0, t0).v;
  for (int k = 1; k <= kHintSamples; ++k) {
    const double t_k = t_hint - half + k * h;
    const FlowPoint fp_k = model.flow_point(t_k, x0, y0, t0);
    if (v_prev * fp_k.v <= 0.0 && (v_prev != 0.0 || fp_k.v != 0.0)) {
      double t_root;
      if (fp_k.v == 0.0) {
        t_root = t_k;
      } else if (v_prev == 0.0) {
        t_root = t_prev;
      } else {
        t_root = polish_velocity_root(model, x0, y0, t0, t_prev, v_prev, t_k,
                                      fp_k.v, cfg.time_tol);
      }
      const FlowPoint at_root = model.flow_point(t_root, x0, y0, t0);
      if (at_root.a < 0.0 &&
          (!best || std::abs(t_root - t_hint) < std::abs(best->t - t_hint))) {
        best = Crossing{t_root, at_root.x, at_root.v, at_root.a};
      }
    }
    t_prev = t_k;
    v_prev = fp_k.v;
  }
  if (!best) {
    throw NoCrossingFound(
        "no section crossing inside the hint window around t = " +
        std::to_string(t_hint));
  }
  return *best;
}

// First root of the displacement x(t) = 0 backward in time from
// (x0 > 0, y0 = 0) at t0; used to recover the incoming impact preimage of a
// virtual section point.  The root must be approached with positive
// velocity (the incoming branch).
Crossing find_incoming_impact(const HybridModel& model, double x0, double t0,
                              const CrossingSolverConfig& cfg) {
  const double h = default_bracket_dt(model, cfg);
  double t_prev = t0;
  double x_prev = x0;
  for (int k = 1; k <= cfg.max_bracket_steps; ++k) {
    const double t_k = t_prev - h;
    const FlowPoint fp_k = model.flow_point(t_k, x0, 0.0, t0);
    if (x_prev * fp_k.x <= 0.0) {
      // Bisection-safeguarded Newton on x(t) with derivative v(t).
      double lo = t_k, hi = t_prev;
      double xlo = fp_k.x;
      double t = 0.5 * (lo + hi);
      for (int it = 0; it < 200; ++it) {
        const FlowPoint fp = model.flow_point(t, x0, 0.0, t0);
        if (fp.x == 0.0) break;
        if ((fp.x > 0.0) == (xlo > 0.0)) {
          lo = t;
          xlo = fp.x;
        } else {
          hi = t;
        }
        double t_next;
        if (fp.v != 0.0) {
          t_next = t - fp.x / fp.v;
          if (!(t_next > lo && t_next < hi)) t_next = 0.5 * (lo + hi);
        } else {
          t_next = 0.5 * (lo + hi);
        }
        if (std::abs(t_next - t) <= cfg.time_tol || (hi - lo) <= cfg.time_tol) {
          t = t_next;
          break;
        }
        t = t_next;
      }
      const FlowPoint at_root = model.flow_point(t, x0, 0.0, t0);
      if (!(at_root.v > 0.0)) {
        throw InverseBranchFailure(
            "backward impact preimage has non-positive velocity " +
            std::to_string(at_root.v));
      }
      return {t, at_root.x, at_root.v, at_root.a};
    }
    t_prev = t_k;
    x_prev = fp_k.x;
  }
  throw InverseBranchFailure(
      "no impacting-surface preimage within the bracketing horizon; the "
      "section point is too far from the stop for the local construction");
}

// Discontinuity correction with unwrapped times: from a virtual maximum
// (x > 0) at unwrapped time t0, recover the incoming impact, reset, and map
// the outgoing point back to Pi.
struct CorrectionResult {
  SectionArrival corrected;  // (x3, t3)
  ImpactPoint incoming;      // (y1, z1)
};

CorrectionResult p_disc_r_core(const HybridModel& model, double x, double t0,
                               const CrossingSolverConfig& cfg) {
  const Crossing imp = find_incoming_impact(model, x, t0, cfg);
  const ImpactPoint incoming{imp.v, wrap_2pi(model.omega() * imp.t)};
  const ImpactPoint outgoing = model.reset(incoming);
  const SectionArrival corrected =
      p_virt_arrival(outgoing.y, imp.t, model, cfg);
  return {corrected, incoming};
}

}  // namespace

// ============================ Crossing solver ============================

State next_section_crossing(const State& start, Direction dir,
                            const HybridModel& model,
                            const CrossingSolverConfig& cfg) {
  const bool on_section = std::abs(start.y) < kOnSectionVel;
  const Crossing c = find_section_crossing(model, start.x, start.y, start.t,
                                           dir, on_section, cfg);
  return {c.x, c.v, c.t, wrap_2pi(model.omega() * c.t)};
}

State next_section_crossing_near(const State& start, double t_hint,
                                 const HybridModel& model,
                                 const CrossingSolverConfig& cfg) {
  const Crossing c =
      find_crossing_near(model, start.x, start.y, start.t, t_hint, cfg);
  return {c.x, c.v, c.t, wrap_2pi(model.omega() * c.t)};
}

std::vector<SectionArrival> flow_maxima(const State& start, double t_end,
                                        const HybridModel& model,
                                        const CrossingSolverConfig& cfg) {
  std::vector<SectionArrival> out;
  const double span = t_end - start.t;
  if (!(span > 0.0)) return out;
  const double h0 = 0.5 * default_bracket_dt(model, cfg);
  const int n = std::max(2, static_cast<int>(std::ceil(span / h0)));
  const double h = span / n;

  double t_prev = start.t;
  double v_prev = start.y;
  if (std::abs(v_prev) < kOnSectionVel) {
    // The start itself sits on the section; hop over it.
    t_prev += kSkipOffset;
    v_prev = model.flow_point(t_prev, start.x, start.y, start.t).v;
  }
  for (int k = 1; k <= n; ++k) {
    const double t_k = std::min(start.t + k * h, t_end);
    if (t_k <= t_prev) continue;
    const FlowPoint fp_k = model.flow_point(t_k, start.x, start.y, start.t);
    if (v_prev * fp_k.v <= 0.0 && (v_prev != 0.0 || fp_k.v != 0.0)) {
      double t_root;
      if (fp_k.v == 0.0) {
        t_root = t_k;
      } else if (v_prev == 0.0) {
        t_root = t_prev;
      } else {
        t_root = polish_velocity_root(model, start.x, start.y, start.t,
                                      t_prev, v_prev, t_k, fp_k.v,
                                      cfg.time_tol);
      }
      const FlowPoint at_root =
          model.flow_point(t_root, start.x, start.y, start.t);
      if (at_root.a < 0.0 && t_root > start.t && t_root < t_end) {
        if (out.empty() || t_root > out.back().t + cfg.time_tol) {
          out.push_back({at_root.x, t_root});
        }
      }
    }
    t_prev = t_k;
    v_prev = fp_k.v;
  }
  return out;
}

// ============================== Section maps ==============================

SectionArrival p_virt_arrival(double y, double t_start,
                              const HybridModel& model,
                              const CrossingSolverConfig& cfg) {
  if (y == 0.0) return {0.0, t_start};
  const Direction dir = (y > 0.0) ? Direction::forward : Direction::backward;
  const Crossing c =
      find_section_crossing(model, 0.0, y, t_start, dir, false, cfg);
  return {c.x, c.t};
}

SectionArrival p_virt_arrival(double y, double t_start, double t_hint,
                              const HybridModel& model,
                              const CrossingSolverConfig& cfg) {
  if (y == 0.0) return {0.0, t_start};
  const Crossing c = find_crossing_near(model, 0.0, y, t_start, t_hint, cfg);
  return {c.x, c.t};
}

SectionPoint p_virt(const ImpactPoint& p, const HybridModel& model,
                    const CrossingSolverConfig& cfg) {
  const double t_start = p.z / model.omega();
  const SectionArrival arr = p_virt_arrival(p.y, t_start, model, cfg);
  return {arr.x, wrap_2pi(model.omega() * arr.t)};
}

MapDerivatives p_virt_jacobian_at(double y, double t_start, double t_arrival,
                                  const HybridModel& model) {
  const FlowJet jet = model.flow(t_arrival, 0.0, y, t_start);
  if (std::abs(jet.dtt) < kSingularAccel) {
    throw SingularCrossing("near-tangential section arrival: |phi_tt| = " +
                           std::to_string(std::abs(jet.dtt)));
  }
  const double w = model.omega();
  MapDerivatives md;
  // The arrival condition phi_t = 0 defines the crossing time; implicit
  // differentiation gives the phase row, and the displacement row follows
  // from the total derivative of phi along the varying crossing time.
  md.d_state.m21 = -w * jet.dy0_dt / jet.dtt;
  md.d_state.m22 = -jet.dt0_dt / jet.dtt;
  md.d_state.m11 = jet.dy0 + jet.dt * md.d_state.m21 / w;
  md.d_state.m12 = (jet.dt0 + jet.dt * md.d_state.m22) / w;
  md.d_mu.v2 = -w * jet.dA_dt / jet.dtt;
  md.d_mu.v1 = jet.dA + jet.dt * md.d_mu.v2 / w;
  return md;
}

MapDerivatives p_virt_jacobian(const ImpactPoint& p, const HybridModel& model,
                               const CrossingSolverConfig& cfg) {
  const double t_start = p.z / model.omega();
  const SectionArrival arr = p_virt_arrival(p.y, t_start, model, cfg);
  return p_virt_jacobian_at(p.y, t_start, arr.t, model);
}

SectionArrival p_global_arrival(double x, double t_start,
                                const HybridModel& model,
                                const CrossingSolverConfig& cfg) {
  const Crossing c =
      find_section_crossing(model, x, 0.0, t_start, Direction::forward,
                            /*skip_initial=*/true, cfg);
  return {c.x, c.t};
}

SectionArrival p_global_arrival(double x, double t_start, double t_hint,
                                const HybridModel& model,
                                const CrossingSolverConfig& cfg) {
  const Crossing c = find_crossing_near(model, x, 0.0, t_start, t_hint, cfg);
  return {c.x, c.t};
}

SectionPoint p_global_p(const SectionPoint& s, int p_loops,
                        const HybridModel& model,
                        const CrossingSolverConfig& cfg) {
  double x = s.x;
  double t = s.z / model.omega();
  for (int k = 0; k < p_loops; ++k) {
    const SectionArrival arr = p_global_arrival(x, t, model, cfg);
    x = arr.x;
    t = arr.t;
  }
  return {x, wrap_2pi(model.omega() * t)};
}

MapDerivatives p_global_jacobian_at(double x, double t_start, double t_arrival,
                                    const HybridModel& model) {
  const FlowJet jet = model.flow(t_arrival, x, 0.0, t_start);
  if (std::abs(jet.dtt) < kSingularAccel) {
    throw SingularCrossing("near-tangential section arrival: |phi_tt| = " +
                           std::to_string(std::abs(jet.dtt)));
  }
  const double w = model.omega();
  MapDerivatives md;
  md.d_state.m21 = -w * jet.dx0_dt / jet.dtt;
  md.d_state.m22 = -jet.dt0_dt / jet.dtt;
  md.d_state.m11 = jet.dx0 + jet.dt * md.d_state.m21 / w;
  md.d_state.m12 = (jet.dt0 + jet.dt * md.d_state.m22) / w;
  md.d_mu.v2 = -w * jet.dA_dt / jet.dtt;
  md.d_mu.v1 = jet.dA + jet.dt * md.d_mu.v2 / w;
  return md;
}

MapDerivatives p_global_p_jacobian(const SectionPoint& s, int p_loops,
                                   const HybridModel& model,
                                   const CrossingSolverConfig& cfg) {
  double x = s.x;
  double t = s.z / model.omega();
  Mat2 total = Mat2::identity();
  Vec2 total_mu{0.0, 0.0};
  for (int k = 0; k < p_loops; ++k) {
    const SectionArrival arr = p_global_arrival(x, t, model, cfg);
    const MapDerivatives loop = p_global_jacobian_at(x, t, arr.t, model);
    total_mu = loop.d_state * total_mu + loop.d_mu;
    total = loop.d_state * total;
    x = arr.x;
    t = arr.t;
  }
  return {total, total_mu};
}

std::pair<SectionPoint, ImpactPoint> p_disc_r(const SectionPoint& s,
                                              const HybridModel& model,
                                              const CrossingSolverConfig& cfg) {
  const CorrectionResult res =
      p_disc_r_core(model, s.x, s.z / model.omega(), cfg);
  const SectionPoint corrected{res.corrected.x,
                               wrap_2pi(model.omega() * res.corrected.t)};
  return {corrected, res.incoming};
}

// ============================ Hybrid stepping ============================

PoincareStep full_poincare_step(const SectionPoint& s,
                                const HybridModel& model,
                                const CrossingSolverConfig& cfg) {
  double x = s.x;
  double t = s.z / model.omega();
  std::optional<ImpactPoint> impact;
  if (s.x > 0.0) {
    const CorrectionResult res = p_disc_r_core(model, s.x, t, cfg);
    x = res.corrected.x;
    t = res.corrected.t;
    impact = res.incoming;
  }
  const SectionArrival arr = p_global_arrival(x, t, model, cfg);
  return {{arr.x, wrap_2pi(model.omega() * arr.t)}, impact};
}

std::vector<PoincareStep> simulate_hybrid(const SectionPoint& s0, int n_steps,
                                          const HybridModel& model,
                                          const CrossingSolverConfig& cfg) {
  std::vector<PoincareStep> out;
  out.reserve(static_cast<std::size_t>(std::max(n_steps, 0)));
  SectionPoint s = s0;
  for (int k = 0; k < n_steps; ++k) {
    const PoincareStep step = full_poincare_step(s, model, cfg);
    out.push_back(step);
    s = step.section;
  }
  return out;
}

}  // namespace grazecont

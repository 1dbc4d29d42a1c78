// Section maps of the impacting hybrid system.
//
// Two codimension-one surfaces organise the dynamics:
//   Sigma = {x = 0}                      the impacting surface, and
//   Pi    = {y = 0, acceleration < 0}    the Poincare section of local
//                                        displacement maxima.
//
// The maps assembled here from the closed-form flow are
//   p_virt      Sigma -> Pi   flow from an impact-surface point to the
//                             nearest displacement maximum (forward in time
//                             for y > 0, backward for y < 0; identity at
//                             y = 0).  The maximum may lie beyond the stop
//                             ("virtual": x > 0); the flow is evaluated
//                             without regard to the stop.
//   p_global_p  Pi -> Pi      p complete loops of the smooth flow from
//                             maximum to maximum, ignoring the stop.
//   p_disc_r    Pi -> Pi      discontinuity correction at a virtual point
//                             x > 0: solve backward for the incoming impact,
//                             apply the restitution reset, and map the
//                             outgoing point back to Pi.
//
// full_poincare_step = p_global after correcting any virtual point with
// p_disc_r; iterating it reproduces the exact hybrid dynamics in the
// low-velocity impact regime.
//
// Crossing times are found by bracketing the velocity sign change at a
// fraction of the forcing period and polishing with a bisection-safeguarded
// Newton iteration on the analytic velocity (derivative: analytic
// acceleration).  All times are unwrapped internally; phases are produced at
// the interface.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "grazecont/linalg.hpp"
#include "grazecont/model.hpp"
#include "grazecont/types.hpp"

namespace grazecont {

/// Tuning of the crossing-time solver.
struct CrossingSolverConfig {
  /// Absolute tolerance on the crossing time.
  double time_tol = 1e-12;
  /// Bracketing horizon in sampling steps; the search fails with
  /// NoCrossingFound beyond it.
  int max_bracket_steps = 4096;
  /// Sampling step for bracketing; values <= 0 select the default
  /// 2 pi / (64 omega), i.e. 64 samples per forcing period.
  double bracket_dt = 0.0;
};

/// Search direction for crossings.
enum class Direction { forward, backward };

/// Arrival on the Poincare section: displacement and unwrapped arrival time.
struct SectionArrival {
  double x = 0.0;
  double t = 0.0;
};

/// First-order data of a section map: the 2x2 state Jacobian and the partial
/// derivative with respect to the unfolding parameter mu.
struct MapDerivatives {
  Mat2 d_state;
  Vec2 d_mu;
};

/// One iterate of the full Poincare map: the next section point and, if the
/// step corrected a virtual point, the incoming impact that was applied.
struct PoincareStep {
  SectionPoint section;
  std::optional<ImpactPoint> impact;
};

// ============================ Crossing solver ============================

/// First crossing of the Poincare section (velocity zero with negative
/// acceleration) from `start` in direction `dir`, following the smooth flow.
///
/// If `start` itself lies on the section (|velocity| < 1e-10) it is skipped
/// and the crossing one loop away is returned.  Velocity zeros with
/// non-negative acceleration (displacement minima) are skipped.
/// Throws NoCrossingFound if the bracketing horizon is exhausted.
State next_section_crossing(const State& start, Direction dir,
                            const HybridModel& model,
                            const CrossingSolverConfig& cfg);

/// Section crossing nearest a hinted time: every velocity zero with
/// negative acceleration inside a window of just under half a forcing
/// period on either side of t_hint is polished, and the one closest to the
/// hint is returned.  Continuation uses this to keep following the same
/// crossing while other velocity zeros are created or destroyed elsewhere
/// along the leg (where a first-crossing search would jump).
/// Throws NoCrossingFound if the window holds no crossing.
State next_section_crossing_near(const State& start, double t_hint,
                                 const HybridModel& model,
                                 const CrossingSolverConfig& cfg);

/// All displacement maxima of the smooth flow from `start` strictly inside
/// the open time interval (start.t, t_end): velocity zeros with negative
/// acceleration, each polished to time_tol, in increasing time order.
/// A start point lying on the section itself is not reported.
std::vector<SectionArrival> flow_maxima(const State& start, double t_end,
                                        const HybridModel& model,
                                        const CrossingSolverConfig& cfg);

// ============================== Section maps ==============================

/// Sigma -> Pi: map an impact-surface point to the nearest displacement
/// maximum of the smooth flow (forward for y > 0, backward for y < 0,
/// identity for y = 0).
SectionPoint p_virt(const ImpactPoint& p, const HybridModel& model,
                    const CrossingSolverConfig& cfg);

/// As p_virt, with the start time given unwrapped (consistent with p.z
/// modulo the forcing period) and the unwrapped arrival time returned.
SectionArrival p_virt_arrival(double y, double t_start,
                              const HybridModel& model,
                              const CrossingSolverConfig& cfg);

/// Hinted form of p_virt_arrival: the maximum nearest the unwrapped time
/// t_hint is taken instead of the first one from t_start (identity at
/// y = 0 as before).
SectionArrival p_virt_arrival(double y, double t_start, double t_hint,
                              const HybridModel& model,
                              const CrossingSolverConfig& cfg);

/// Jacobian and mu-derivative of p_virt at p.  Finite (but singular) in the
/// grazing limit y -> 0.  Throws SingularCrossing if the arrival
/// acceleration is below threshold.
MapDerivatives p_virt_jacobian(const ImpactPoint& p, const HybridModel& model,
                               const CrossingSolverConfig& cfg);

/// As p_virt_jacobian with the crossing already solved: start (0, y) at
/// unwrapped time t_start, arrival at unwrapped time t_arrival.
MapDerivatives p_virt_jacobian_at(double y, double t_start, double t_arrival,
                                  const HybridModel& model);

/// Pi -> Pi: p complete loops of the smooth flow, stop ignored.
SectionPoint p_global_p(const SectionPoint& s, int p_loops,
                        const HybridModel& model,
                        const CrossingSolverConfig& cfg);

/// One loop of the smooth flow from (x, t_start) on Pi, unwrapped times.
SectionArrival p_global_arrival(double x, double t_start,
                                const HybridModel& model,
                                const CrossingSolverConfig& cfg);

/// Hinted form of p_global_arrival: the maximum nearest the unwrapped time
/// t_hint is taken instead of the first one from t_start.
SectionArrival p_global_arrival(double x, double t_start, double t_hint,
                                const HybridModel& model,
                                const CrossingSolverConfig& cfg);

/// Jacobian and mu-derivative of p_global_p at s (chain rule across loops).
MapDerivatives p_global_p_jacobian(const SectionPoint& s, int p_loops,
                                   const HybridModel& model,
                                   const CrossingSolverConfig& cfg);

/// Single-loop Jacobian with the crossing already solved.
MapDerivatives p_global_jacobian_at(double x, double t_start,
                                    double t_arrival,
                                    const HybridModel& model);

/// Discontinuity correction at a virtual section point (s.x > 0): solve
/// backward for the incoming impact, apply the reset, and map the outgoing
/// point back to Pi.  Returns the corrected section point and the incoming
/// impact.  Throws InverseBranchFailure if the backward solve fails.
std::pair<SectionPoint, ImpactPoint> p_disc_r(const SectionPoint& s,
                                              const HybridModel& model,
                                              const CrossingSolverConfig& cfg);

// ============================ Hybrid stepping ============================

/// One iterate of the full Poincare map P = p_global o p_disc_r: apply the
/// discontinuity correction if s is virtual (s.x > 0), then one global loop.
PoincareStep full_poincare_step(const SectionPoint& s,
                                const HybridModel& model,
                                const CrossingSolverConfig& cfg);

/// Iterate full_poincare_step n_steps times from s0, recording every section
/// point and impact.  This is the reference hybrid simulator used for
/// seeding and cross-validation.
std::vector<PoincareStep> simulate_hybrid(const SectionPoint& s0, int n_steps,
                                          const HybridModel& model,
                                          const CrossingSolverConfig& cfg);

}  // namespace grazecont

// Parameter continuation of maximal periodic orbits.
//
// One-parameter branches are parametrised by the impact velocity y_imp
// rather than the forcing amplitude: y_imp is a regular branch coordinate
// everywhere (including at grazing and at amplitude folds), so stepping in
// y_imp walks straight through y_imp = 0 into the virtual continuation and
// straight through saddle-nodes with no special handling.  Each step fixes
// y_imp, predicts (z, A) by quadratic extrapolation through the last three
// accepted points, and polishes with Newton on the defect function.
//
// Codimension-one events (period doubling lambda2 = -1, saddle-node
// lambda1 = +1) are located by bisection in y_imp along a branch.
// Codimension-two curves in the (omega, A) plane are traced by stepping in
// omega and re-solving the event condition by bisection in y_imp, with the
// Newton solve for (z, A) nested inside.  Curves stop at a resonance
// (y_imp collapses to zero), at a secondary grazing (a non-impacting loop
// of the orbit touches the stop), when the bisection bracket collapses, or
// at the edge of the omega window.

#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "grazecont/maps.hpp"
#include "grazecont/oscillator.hpp"
#include "grazecont/vivid.hpp"

namespace grazecont {

/// One accepted point along a one-parameter branch.
struct BranchPoint {
  double y_imp = 0.0;
  double z_imp = 0.0;  ///< wrapped to [0, 2pi)
  double amp = 0.0;
  double omega = 0.0;
  std::complex<double> lambda1{0.0, 0.0};
  std::complex<double> lambda2{0.0, 0.0};
  /// Multipliers are skipped within the grazing guard band |y_imp| < 1e-6,
  /// where DQ is numerically singular.
  bool multipliers_valid = false;
  /// Both multipliers strictly inside the unit circle (and the orbit is
  /// physical); virtual orbits are never flagged stable.
  bool stable = false;
  /// y_imp < 0: virtual continuation, not a realisable orbit.
  bool is_virtual = false;
  /// Accepted only after the automatic one-time step halving.
  bool halved_step = false;
};

/// Kinds of codimension-one / special points.
enum class BifKind { PD, SN, GRAZE, GRAZE2, RESONANCE };

/// A located bifurcation or boundary point.
struct BifPoint {
  BifKind kind = BifKind::PD;
  double omega = 0.0;
  double amp = 0.0;
  double y_imp = 0.0;
  double z_imp = 0.0;
};

/// Shared tuning for all continuation drivers.
struct ContinuationConfig {
  NewtonConfig newton{};
  CrossingSolverConfig crossing{};
  /// Bisection target for codimension-one test functions.
  double bif_tol = 1e-8;
  /// Skip multiplier evaluation for |y_imp| below this.
  double multiplier_guard = 1e-6;
  /// Codim-2 curves stop (resonance) once the solved y_imp drops below this.
  double resonance_y_tol = 1e-5;
  /// Smallest positive y_imp probed while bracketing in codim-2 solves.
  double y_bisect_floor = 1e-10;
  /// Hard cap on accepted codim-2 curve points.
  int max_codim2_steps = 5000;
};

/// Result of tracing a one-parameter branch.  On a step failure the points
/// accepted so far are preserved and `completed` is false.
struct BranchResult {
  std::vector<BranchPoint> points;
  bool completed = true;
  int failed_step = -1;
  std::string failure_reason;
};

/// Why a codim-2 curve stopped.
enum class Codim2Stop {
  resonance,
  secondary_grazing,
  bracket_collapse,
  omega_window,
  step_limit,
};

/// Result of tracing a codim-2 curve, with an optional terminal point (the
/// extrapolated resonance point, or the refined secondary-grazing point).
/// terminal_hints holds the crossing offsets of the last solved point, so a
/// follow-up trace (e.g. the secondary-grazing curve issuing from a
/// saddle-node terminus) can keep following the same chain.
struct Codim2Result {
  std::vector<BifPoint> points;
  Codim2Stop stop = Codim2Stop::step_limit;
  std::optional<BifPoint> terminal;
  ChainHints terminal_hints{};
};

// ============================== Seeding ==============================

/// Find an impacting periodic attractor by brute-force simulation: iterate
/// the full Poincare map from the forced-response maximum, discard
/// transient_steps, and verify that the remaining impacts recur every
/// p_loops steps with successive impact points within 1e-6.  Returns the
/// averaged impact point.  Throws NoPeriodicAttractor otherwise.
ImpactPoint seed_by_simulation(const ModelParams& params, int p_loops,
                               int sim_steps, int transient_steps,
                               const CrossingSolverConfig& cfg);

// ========================== One-parameter branch ==========================

/// Trace a branch from `seed` (impact point at amplitude base.amp): polish
/// the seed, then take n_steps steps of size dy in y_imp.  A failed step is
/// retried once at dy/2 (flagged on the accepted point); if that also fails
/// the branch is returned truncated.  Multipliers are attached outside the
/// grazing guard band.
BranchResult continue_branch(const ImpactPoint& seed, int n_steps, double dy,
                             const ModelParams& base, int p_loops,
                             const ContinuationConfig& cfg);

/// Locate all codimension-one points of the given kind (PD: lambda2 = -1,
/// SN: lambda1 = +1) along a traced branch by bisection in y_imp between
/// consecutive points with real multipliers.  Throws NoBracket if the test
/// function never changes sign.
std::vector<BifPoint> detect_codim1(const std::vector<BranchPoint>& branch,
                                    BifKind kind, const ModelParams& base,
                                    int p_loops,
                                    const ContinuationConfig& cfg);

// ========================== Two-parameter curves ==========================

/// Trace the codim-2 curve of the given kind (PD or SN) from a located
/// start point, stepping omega by domega inside [omega_min, omega_max].
/// seed_hints (optionally) pins the crossing chain of the start point.
Codim2Result continue_codim2(const BifPoint& start, BifKind kind,
                             double domega, double omega_min, double omega_max,
                             const ModelParams& base, int p_loops,
                             const ContinuationConfig& cfg,
                             const ChainHints& seed_hints = ChainHints{});

/// Signed distance to secondary grazing: the largest displacement over all
/// maxima the orbit through impact point p visits during one period of free
/// flight, i.e. on the open time interval between the outgoing impact and
/// the next impact (negative: the whole free arc clears the stop; zero: a
/// non-impacting maximum touches it).  Returns -infinity for p_loops = 1
/// (the free arc there is the impacting loop itself, which is monitored by
/// the primary grazing condition y = 0).
double detect_secondary_grazing(const ImpactPoint& p, int p_loops,
                                const HybridModel& model,
                                const CrossingSolverConfig& cfg);

/// Trace the secondary-grazing curve (orbits whose deepest non-impacting
/// maximum touches the stop) from a start point, stepping omega by domega.
/// seed_hints (optionally) pins the crossing chain of the start point.
Codim2Result continue_graze2(const BifPoint& start, double domega,
                             double omega_min, double omega_max,
                             const ModelParams& base, int p_loops,
                             const ContinuationConfig& cfg,
                             const ChainHints& seed_hints = ChainHints{});

// ============================ Grazing curve ============================

/// One sample of the analytic grazing curve.
struct GrazePoint {
  double omega = 0.0;
  double a_graz = 0.0;
  double z_graz = 0.0;
};

/// Sample the closed-form grazing boundary on n equally spaced frequencies
/// over [omega_min, omega_max] (inclusive; n = 1 samples omega_min only).
std::vector<GrazePoint> grazing_curve(double omega_min, double omega_max,
                                      int n, double zeta);

}  // namespace grazecont

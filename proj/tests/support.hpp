// Shared fixtures for the unit tests: canonical parameter sets, frozen
// reference values, and recorded regression anchors.
//
// "Independent references" were computed with 40-digit arithmetic from the
// closed-form expressions and rounded to double; tests compare against them
// at 1e-12 relative or tighter.  "Regression anchors" were recorded from the
// first verified run of this library and pin behaviour that has no separate
// closed form (bifurcation locations, Newton iteration counts, curve
// termini); their tolerances reflect the solver tolerances involved.

#pragma once

#include <cmath>

#include "grazecont/oscillator.hpp"

namespace testsup {

using grazecont::ModelParams;

// Canonical damping and restitution used throughout: zeta = 0.02, eps = 0.9.
inline ModelParams params(double omega, double amp) {
  ModelParams p;
  p.zeta = 0.02;
  p.eps = 0.9;
  p.omega = omega;
  p.amp = amp;
  return p;
}

/// Parameters pinned exactly on the grazing boundary at the given frequency.
inline ModelParams grazing_params(double omega) {
  ModelParams p = params(omega, 1.0);
  p.amp = grazecont::a_graz(p);
  return p;
}

// ===== Independent references (40-digit arithmetic, zeta = 0.02) =====

inline constexpr double kAGraz081 = 0.34542288575020619209;
inline constexpr double kZGraz081 = 0.093936157815160733864;
inline constexpr double kAGraz0799 = 0.36300864783225206245;
inline constexpr double kZGraz0799 = 0.088156119564454457471;
inline constexpr double kAGraz12 = 0.44261043819593771528;
inline constexpr double kZGraz12 = 3.0329314377492054104;
/// Damped natural frequency sqrt(1 - zeta^2).
inline constexpr double kOmegaNat = 0.99979997999599899972;
/// Forcing frequency of the 4:5 resonance, kOmegaNat / (5/4).
inline constexpr double kOmegaRes45 = 0.79983998399679919978;
/// Minimum of the grazing amplitude, 2 zeta sqrt(1 - zeta^2), attained at
/// omega = sqrt(1 - 2 zeta^2).
inline constexpr double kMinAGraz = 0.039991999199839959989;
/// One-forcing-period damping contraction exp(-4 pi zeta / omega) at 0.81.
inline constexpr double kLoopContraction081 = 0.73324106556044499179;
/// Maximum of the forced response at amp = 0.3, omega = 0.81:
/// 0.3 / a_graz - 1 (negative: the response clears the stop).
inline constexpr double kForcedMax03 = -0.13149935231290354064;

// ===== Recorded regression anchors (omega = 0.81, amp = 0.355, p = 2) =====

/// Simulated periodic-attractor seed (impact velocity and phase).
inline constexpr double kSeedY081 = 0.27840883129173177;
inline constexpr double kSeedZ081 = 0.028414594849707115;
/// Period-doubling point on the branch below the seed.
inline constexpr double kPdAmp081 = 0.34753339741422207;
inline constexpr double kPdY081 = 0.065303943329405645;
/// Saddle-node on the omega = 0.799 branch.
inline constexpr double kSnAmp0799 = 0.36283620198605193;
inline constexpr double kSnY0799 = 0.12408734130859625;
/// Low-frequency terminus of the saddle-node curve (secondary grazing).
inline constexpr double kSnTermOmega = 0.78812225604150576;
inline constexpr double kSnTermAmp = 0.35064902542373111;
inline constexpr double kSnTermY = 1.3741453822778955;
/// Parameter derivative of the defect function at the grazing zero.
inline constexpr double kDVdMu1 = 4.9683547532369037;
inline constexpr double kDVdMu2 = 0.51311325040388089;
/// Deepest free-flight maximum of the attractor orbit (clears the stop).
inline constexpr double kClearance081 = -0.23330938158140752;
/// Newton solve at y_imp = 0.01 from the grazing predictor.
inline constexpr double kNewtonAmpY001 = 0.34574052759363522;

}  // namespace testsup

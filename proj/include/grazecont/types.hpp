// Core value types shared across the library.
//
// Conventions:
//  * Time t is kept unwrapped inside all algorithms; the forcing phase
//    z = omega * t mod 2pi is produced only at interface boundaries.
//  * The impacting surface is {x = 0} and the Poincare section is the set of
//    local displacement maxima {y = 0, acceleration < 0}.

#pragma once

#include <cmath>
#include <numbers>

namespace grazecont {

/// Full flow state: displacement, velocity, unwrapped time, forcing phase.
/// The invariant z == omega * t (mod 2pi) holds whenever both are stored.
struct State {
  double x = 0.0;  ///< displacement
  double y = 0.0;  ///< velocity
  double t = 0.0;  ///< unwrapped time
  double z = 0.0;  ///< forcing phase in [0, 2pi)
};

/// Point on the impacting surface {x = 0}: velocity and forcing phase.
struct ImpactPoint {
  double y = 0.0;  ///< velocity at the surface (incoming > 0, outgoing < 0)
  double z = 0.0;  ///< forcing phase in [0, 2pi)
};

/// Point on the Poincare section {y = 0, acceleration < 0}:
/// displacement and forcing phase.
struct SectionPoint {
  double x = 0.0;  ///< displacement at the local maximum
  double z = 0.0;  ///< forcing phase in [0, 2pi)
};

/// Displacement, velocity and acceleration of the flow at one time; the
/// cheap evaluation used inside crossing solvers.
struct FlowPoint {
  double x = 0.0;  ///< displacement phi(t)
  double v = 0.0;  ///< velocity d phi / dt
  double a = 0.0;  ///< acceleration d^2 phi / dt^2
};

/// Closed-form flow value together with every first-order partial derivative
/// needed by the map Jacobians, plus the time derivatives of those partials.
///
/// The flow is phi(t; x0, y0, t0; A): displacement at time t of the
/// trajectory that starts at (x0, y0) at time t0 under forcing amplitude A.
struct FlowJet {
  double value = 0.0;   ///< phi
  double dt = 0.0;      ///< d phi / d t           (velocity)
  double dtt = 0.0;     ///< d^2 phi / d t^2       (acceleration)
  double dx0 = 0.0;     ///< d phi / d x0
  double dy0 = 0.0;     ///< d phi / d y0
  double dt0 = 0.0;     ///< d phi / d t0
  double dA = 0.0;      ///< d phi / d A
  double dx0_dt = 0.0;  ///< d^2 phi / d x0 d t
  double dy0_dt = 0.0;  ///< d^2 phi / d y0 d t
  double dt0_dt = 0.0;  ///< d^2 phi / d t0 d t
  double dA_dt = 0.0;   ///< d^2 phi / d A  d t
};

/// Wrap an angle to [0, 2pi).
inline double wrap_2pi(double angle) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double w = std::fmod(angle, two_pi);
  if (w < 0.0) w += two_pi;
  return w;
}

/// Wrap an angle difference to the representative nearest zero, in (-pi, pi].
inline double wrap_pi(double angle) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double r = std::remainder(angle, two_pi);
  // std::remainder returns values in [-pi, pi]; fold the lower endpoint.
  return (r <= -std::numbers::pi) ? r + two_pi : r;
}

}  // namespace grazecont

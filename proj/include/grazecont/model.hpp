// Abstract interface between a concrete impacting model and the map /
// continuation machinery.
//
// A model supplies the closed-form flow jet on the non-impacting side, the
// vector field, the impact reset with its derivatives, and the forcing
// frequency used for time <-> phase bookkeeping.  Everything above this
// interface (section maps, the smooth root function, continuation) is
// model-agnostic.

#pragma once

#include <array>

#include "grazecont/linalg.hpp"
#include "grazecont/types.hpp"

namespace grazecont {

/// Derivatives of the impact reset map (y, z) -> (R(y), z): the 2x2 state
/// Jacobian and the partial derivative with respect to the unfolding
/// parameter mu.
struct ResetDerivatives {
  Mat2 d_state;
  Vec2 d_mu;
};

class HybridModel {
 public:
  virtual ~HybridModel() = default;

  /// Closed-form flow jet phi(t; x0, y0, t0) with all partials.
  virtual FlowJet flow(double t, double x0, double y0, double t0) const = 0;

  /// Displacement / velocity / acceleration only; the cheap evaluation used
  /// by crossing solvers.
  virtual FlowPoint flow_point(double t, double x0, double y0,
                               double t0) const = 0;

  /// Right-hand side (dx/dt, dy/dt, dz/dt) of the autonomous-in-phase form.
  virtual std::array<double, 3> vector_field(const State& s) const = 0;

  /// Instantaneous impact reset applied on the impacting surface {x = 0}.
  virtual ImpactPoint reset(const ImpactPoint& p) const = 0;

  /// State Jacobian and mu-derivative of the reset map.
  virtual ResetDerivatives reset_jacobian() const = 0;

  /// Forcing frequency omega (phase advances as z = omega * t mod 2pi).
  virtual double omega() const = 0;
};

}  // namespace grazecont

// Harmonically forced linear oscillator with a rigid one-sided stop.
//
// Non-dimensional equation of motion away from the stop (x < 0):
//
//     x'' + 2 zeta x' + x = A cos(omega t) - 1,     0 < zeta < 1,
//
// i.e. the static equilibrium of the unforced system sits at x = -1, one
// unit away from the stop at x = 0.  Hitting the stop applies the
// restitution reset y -> -eps y.  Because the flow is linear it is known in
// closed form, and so are all partial derivatives of the general solution
// with respect to its initial data and the forcing amplitude; no numerical
// integration is used anywhere.
//
// The forced response phi_p(t) = -1 + A g(t) attains its maximum
// A / a_graz - 1 at forcing phase z_graz, so the non-impacting periodic
// solution grazes the stop exactly at amplitude A = a_graz.  The natural
// unfolding parameter is mu = A - a_graz.

#pragma once

#include "grazecont/model.hpp"
#include "grazecont/types.hpp"

namespace grazecont {

/// Parameters of the impact oscillator.
struct ModelParams {
  double zeta = 0.02;   ///< damping ratio, 0 < zeta < 1
  double eps = 0.9;     ///< restitution coefficient, 0 < eps <= 1
  double omega = 0.81;  ///< forcing frequency, > 0
  double amp = 0.0;     ///< forcing amplitude A, > 0
};

/// Throws std::invalid_argument unless 0 < zeta < 1, 0 < eps <= 1,
/// omega > 0 and amp > 0.
void validate(const ModelParams& p);

// ====================== Derived scalar quantities ======================

/// Grazing amplitude a_graz = sqrt((1 - omega^2)^2 + 4 zeta^2 omega^2):
/// the forcing amplitude at which the non-impacting periodic response
/// touches the stop with zero velocity.  Ignores p.amp.
double a_graz(const ModelParams& p);

/// Forcing phase z_graz = atan2(2 zeta omega, 1 - omega^2) in (0, pi) at
/// which the forced response attains its maximum.  Equals pi/2 at omega = 1.
/// Ignores p.amp.
double z_graz(const ModelParams& p);

/// Unfolding parameter mu = amp - a_graz(p).
double mu(const ModelParams& p);

/// Damped natural frequency omega_1 = sqrt(1 - zeta^2).
double natural_frequency(const ModelParams& p);

/// Forcing frequency omega = omega_1 / ratio at which the damped natural
/// frequency and the forcing frequency are in the rational ratio
/// omega_1 : omega = ratio : 1.  For example ratio = 5/4 gives the 4:5
/// resonance near omega = 0.7998 for zeta = 0.02.
double resonance_frequency(const ModelParams& p, double ratio);

// ============================ Concrete model ============================

/// The forced impact oscillator as a HybridModel.  Construction validates
/// the parameters and caches the derived quantities.
class ImpactOscillator final : public HybridModel {
 public:
  explicit ImpactOscillator(const ModelParams& p);

  FlowJet flow(double t, double x0, double y0, double t0) const override;
  FlowPoint flow_point(double t, double x0, double y0,
                       double t0) const override;
  std::array<double, 3> vector_field(const State& s) const override;
  ImpactPoint reset(const ImpactPoint& p) const override;
  ResetDerivatives reset_jacobian() const override;
  double omega() const override { return p_.omega; }

  const ModelParams& params() const { return p_; }
  double grazing_amplitude() const { return a_graz_; }
  double grazing_phase() const { return z_graz_; }
  double mu() const { return p_.amp - a_graz_; }

  /// Forced response phi_p(t) = -1 + A g(t) and its time derivatives, where
  /// g(t) = ((1 - omega^2) cos(omega t) + 2 zeta omega sin(omega t)) / D and
  /// D = a_graz^2.
  double forced_response(double t) const;
  double forced_response_dt(double t) const;

 private:
  // g(t), g'(t): the unit-amplitude forced response offset by the constant
  // load; g'' = -omega^2 g.
  double g(double t) const;
  double g_dt(double t) const;

  ModelParams p_;
  double omega1_;  // damped natural frequency
  double d_;       // D = (1 - omega^2)^2 + 4 zeta^2 omega^2
  double a_graz_;
  double z_graz_;
};

}  // namespace grazecont

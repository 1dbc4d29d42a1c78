#include "grazecont/oscillator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace grazecont {

void validate(const ModelParams& p) {
  if (!(p.zeta > 0.0 && p.zeta < 1.0)) {
    throw std::invalid_argument("zeta must satisfy 0 < zeta < 1, got " +
                                std::to_string(p.zeta));
  }
  if (!(p.eps > 0.0 && p.eps <= 1.0)) {
    throw std::invalid_argument("eps must satisfy 0 < eps <= 1, got " +
                                std::to_string(p.eps));
  }
  if (!(p.omega > 0.0)) {
    throw std::invalid_argument("omega must be positive, got " +
                                std::to_string(p.omega));
  }
  if (!(p.amp > 0.0)) {
    throw std::invalid_argument("amp must be positive, got " +
                                std::to_string(p.amp));
  }
}

double a_graz(const ModelParams& p) {
  const double w2 = p.omega * p.omega;
  const double s = 1.0 - w2;
  return std::sqrt(s * s + 4.0 * p.zeta * p.zeta * w2);
}

double z_graz(const ModelParams& p) {
  // 2 zeta omega > 0 puts the result in (0, pi); exactly pi/2 at omega = 1.
  return std::atan2(2.0 * p.zeta * p.omega, 1.0 - p.omega * p.omega);
}

double mu(const ModelParams& p) { return p.amp - a_graz(p); }

double natural_frequency(const ModelParams& p) {
  return std::sqrt(1.0 - p.zeta * p.zeta);
}

double resonance_frequency(const ModelParams& p, double ratio) {
  if (!(ratio > 0.0)) {
    throw std::invalid_argument("resonance ratio must be positive");
  }
  return natural_frequency(p) / ratio;
}

ImpactOscillator::ImpactOscillator(const ModelParams& p) : p_(p) {
  validate(p_);
  omega1_ = natural_frequency(p_);
  const double w2 = p_.omega * p_.omega;
  const double s = 1.0 - w2;
  d_ = s * s + 4.0 * p_.zeta * p_.zeta * w2;
  a_graz_ = std::sqrt(d_);
  z_graz_ = std::atan2(2.0 * p_.zeta * p_.omega, s);
}

double ImpactOscillator::g(double t) const {
  const double w = p_.omega;
  return ((1.0 - w * w) * std::cos(w * t) +
          2.0 * p_.zeta * w * std::sin(w * t)) /
         d_;
}

double ImpactOscillator::g_dt(double t) const {
  const double w = p_.omega;
  return w *
         (2.0 * p_.zeta * w * std::cos(w * t) -
          (1.0 - w * w) * std::sin(w * t)) /
         d_;
}

double ImpactOscillator::forced_response(double t) const {
  return -1.0 + p_.amp * g(t);
}

double ImpactOscillator::forced_response_dt(double t) const {
  return p_.amp * g_dt(t);
}

FlowJet ImpactOscillator::flow(double t, double x0, double y0,
                               double t0) const {
  const double zeta = p_.zeta;
  const double w = p_.omega;
  const double w2 = w * w;

  // Fundamental homogeneous solutions u, v of x'' + 2 zeta x' + x = 0 with
  // u(0) = 1, u'(0) = 0, v(0) = 0, v'(0) = 1, evaluated at tau = t - t0.
  // They satisfy u' = -v and v' = exp(-zeta tau)(cos - (zeta/omega1) sin).
  const double tau = t - t0;
  const double e = std::exp(-zeta * tau);
  const double c = std::cos(omega1_ * tau);
  const double s = std::sin(omega1_ * tau);
  const double u = e * (c + zeta / omega1_ * s);
  const double v = e * s / omega1_;
  const double up = -v;
  const double vp = e * (c - zeta / omega1_ * s);
  const double upp = -vp;
  const double vpp = -2.0 * zeta * vp - v;

  // Forced response and its derivatives at start and evaluation time.
  const double g0 = g(t0);
  const double g0p = g_dt(t0);
  const double gt = g(t);
  const double gtp = g_dt(t);
  const double A = p_.amp;
  const double pp0 = -1.0 + A * g0;    // phi_p(t0)
  const double pp0_t = A * g0p;        // phi_p'(t0)
  const double pp0_tt = -w2 * A * g0;  // phi_p''(t0)
  const double ppt = -1.0 + A * gt;
  const double ppt_t = A * gtp;
  const double ppt_tt = -w2 * A * gt;

  // Homogeneous coefficients matching the initial data.
  const double c0 = x0 - pp0;
  const double c1 = y0 - pp0_t;

  FlowJet jet;
  jet.value = u * c0 + v * c1 + ppt;
  jet.dt = up * c0 + vp * c1 + ppt_t;
  jet.dtt = upp * c0 + vpp * c1 + ppt_tt;
  jet.dx0 = u;
  jet.dy0 = v;
  jet.dt0 = -(up * c0 + vp * c1) - u * pp0_t - v * pp0_tt;
  jet.dA = -u * g0 - v * g0p + gt;
  jet.dx0_dt = up;
  jet.dy0_dt = vp;
  jet.dt0_dt = -(upp * c0 + vpp * c1) - up * pp0_t - vp * pp0_tt;
  jet.dA_dt = -up * g0 - vp * g0p + gtp;
  return jet;
}

FlowPoint ImpactOscillator::flow_point(double t, double x0, double y0,
                                       double t0) const {
  const double zeta = p_.zeta;
  const double tau = t - t0;
  const double e = std::exp(-zeta * tau);
  const double c = std::cos(omega1_ * tau);
  const double s = std::sin(omega1_ * tau);
  const double u = e * (c + zeta / omega1_ * s);
  const double v = e * s / omega1_;
  const double up = -v;
  const double vp = e * (c - zeta / omega1_ * s);

  const double A = p_.amp;
  const double g0 = g(t0);
  const double c0 = x0 - (-1.0 + A * g0);
  const double c1 = y0 - A * g_dt(t0);
  const double gt = g(t);

  FlowPoint fp;
  fp.x = u * c0 + v * c1 + (-1.0 + A * gt);
  fp.v = up * c0 + vp * c1 + A * g_dt(t);
  fp.a = -vp * c0 + (-2.0 * zeta * vp - v) * c1 - p_.omega * p_.omega * A * gt;
  return fp;
}

std::array<double, 3> ImpactOscillator::vector_field(const State& s) const {
  return {s.y, -s.x - 2.0 * p_.zeta * s.y - 1.0 + p_.amp * std::cos(s.z),
          p_.omega};
}

ImpactPoint ImpactOscillator::reset(const ImpactPoint& p) const {
  return {-p_.eps * p.y, p.z};
}

ResetDerivatives ImpactOscillator::reset_jacobian() const {
  ResetDerivatives rd;
  rd.d_state = {-p_.eps, 0.0, 0.0, 1.0};
  rd.d_mu = {0.0, 0.0};
  return rd;
}

}  // namespace grazecont

#include "grazecont/selftest.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "grazecont/continuation.hpp"
#include "grazecont/errors.hpp"
#include "grazecont/maps.hpp"
#include "grazecont/oscillator.hpp"
#include "grazecont/vivid.hpp"

namespace grazecont {

namespace {

CrossingSolverConfig crossing_config(const RunConfig& cfg) {
  CrossingSolverConfig c;
  c.time_tol = cfg.time_tol;
  return c;
}

// Deterministic tuple generator shared by the flow checks.
struct TupleGen {
  std::mt19937_64 rng{0x5eedu};
  std::uniform_real_distribution<double> zeta{0.01, 0.3};
  std::uniform_real_distribution<double> omega{0.3, 1.5};
  std::uniform_real_distribution<double> amp{0.05, 0.6};
  std::uniform_real_distribution<double> x0{-2.0, 1.0};
  std::uniform_real_distribution<double> y0{-2.0, 2.0};
  std::uniform_real_distribution<double> t0{-5.0, 5.0};
  std::uniform_real_distribution<double> tau{-10.0, 10.0};
};

SelftestCheck check_ode_residual() {
  SelftestCheck c{"flow-jet ODE residual", false, ""};
  TupleGen gen;
  double worst = 0.0;
  for (int i = 0; i < 300; ++i) {
    ModelParams p;
    p.zeta = gen.zeta(gen.rng);
    p.eps = 0.9;
    p.omega = gen.omega(gen.rng);
    p.amp = gen.amp(gen.rng);
    const ImpactOscillator osc(p);
    const double t0 = gen.t0(gen.rng);
    const double t = t0 + gen.tau(gen.rng);
    const FlowJet jet = osc.flow(t, gen.x0(gen.rng), gen.y0(gen.rng), t0);
    const double res = jet.dtt + 2.0 * p.zeta * jet.dt + jet.value + 1.0 -
                       p.amp * std::cos(p.omega * t);
    worst = std::max(worst, std::abs(res));
  }
  c.pass = worst < 1e-12;
  std::ostringstream d;
  d << "max |phi'' + 2 zeta phi' + phi + 1 - A cos(omega t)| = " << worst;
  c.detail = d.str();
  return c;
}

SelftestCheck check_flow_partials() {
  SelftestCheck c{"flow partials vs finite differences", false, ""};
  TupleGen gen;
  const double h = 1e-6;
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    ModelParams p;
    p.zeta = gen.zeta(gen.rng);
    p.eps = 0.9;
    p.omega = gen.omega(gen.rng);
    p.amp = gen.amp(gen.rng);
    const double x0 = gen.x0(gen.rng);
    const double y0 = gen.y0(gen.rng);
    const double t0 = gen.t0(gen.rng);
    const double t = t0 + gen.tau(gen.rng);
    const ImpactOscillator osc(p);
    const FlowJet jet = osc.flow(t, x0, y0, t0);

    ModelParams pa = p;
    pa.amp = p.amp + h;
    ModelParams pb = p;
    pb.amp = p.amp - h;
    const ImpactOscillator osc_a(pa);
    const ImpactOscillator osc_b(pb);

    const auto rel = [&](double analytic, double fd) {
      return std::abs(analytic - fd) /
             std::max({std::abs(analytic), std::abs(fd), 1.0});
    };
    const FlowJet jx1 = osc.flow(t, x0 + h, y0, t0);
    const FlowJet jx0 = osc.flow(t, x0 - h, y0, t0);
    const FlowJet jy1 = osc.flow(t, x0, y0 + h, t0);
    const FlowJet jy0 = osc.flow(t, x0, y0 - h, t0);
    const FlowJet jt1 = osc.flow(t, x0, y0, t0 + h);
    const FlowJet jt0 = osc.flow(t, x0, y0, t0 - h);
    const FlowJet ja1 = osc_a.flow(t, x0, y0, t0);
    const FlowJet ja0 = osc_b.flow(t, x0, y0, t0);
    const FlowJet jf = osc.flow(t + h, x0, y0, t0);
    const FlowJet jb = osc.flow(t - h, x0, y0, t0);

    const double inv2h = 1.0 / (2.0 * h);
    worst = std::max({worst,
                      rel(jet.dt, (jf.value - jb.value) * inv2h),
                      rel(jet.dtt, (jf.dt - jb.dt) * inv2h),
                      rel(jet.dx0, (jx1.value - jx0.value) * inv2h),
                      rel(jet.dy0, (jy1.value - jy0.value) * inv2h),
                      rel(jet.dt0, (jt1.value - jt0.value) * inv2h),
                      rel(jet.dA, (ja1.value - ja0.value) * inv2h),
                      rel(jet.dx0_dt, (jx1.dt - jx0.dt) * inv2h),
                      rel(jet.dy0_dt, (jy1.dt - jy0.dt) * inv2h),
                      rel(jet.dt0_dt, (jt1.dt - jt0.dt) * inv2h),
                      rel(jet.dA_dt, (ja1.dt - ja0.dt) * inv2h)});
  }
  c.pass = worst < 1e-6;
  std::ostringstream d;
  d << "max relative deviation = " << worst;
  c.detail = d.str();
  return c;
}

SelftestCheck check_smoothness_through_grazing(const RunConfig& cfg) {
  SelftestCheck c{"defect function smooth through grazing", false, ""};
  ModelParams p;
  p.zeta = cfg.zeta;
  p.eps = cfg.eps;
  p.omega = cfg.omega;
  p.amp = a_graz(p);
  const double zg = z_graz(p);
  const CrossingSolverConfig ccfg = crossing_config(cfg);
  const ImpactOscillator osc(p);

  constexpr int n = 21;
  constexpr double span = 1e-3;
  double ys[n], v1[n], v2[n];
  try {
    for (int i = 0; i < n; ++i) {
      ys[i] = -span + 2.0 * span * i / (n - 1.0);
      const VividValue v = vivid({ys[i], zg}, cfg.p_loops, osc, ccfg);
      v1[i] = v.v1;
      v2[i] = v.v2;
    }
  } catch (const NumericsError& e) {
    c.detail = std::string("evaluation failed: ") + e.what();
    return c;
  }

  // Least-squares cubic in the scaled variable u = y / span; the residual
  // of the fit measures any non-smooth (square-root) content.
  const auto cubic_residual = [&](const double* f) {
    double m[4][5] = {};
    for (int i = 0; i < n; ++i) {
      const double u = ys[i] / span;
      double pw[7] = {1, u, 0, 0, 0, 0, 0};
      for (int k = 2; k < 7; ++k) pw[k] = pw[k - 1] * u;
      for (int r = 0; r < 4; ++r) {
        for (int col = 0; col < 4; ++col) m[r][col] += pw[r + col];
        m[r][4] += pw[r] * f[i];
      }
    }
    // Gaussian elimination with partial pivoting on the 4x4 normal system.
    for (int piv = 0; piv < 4; ++piv) {
      int best = piv;
      for (int r = piv + 1; r < 4; ++r) {
        if (std::abs(m[r][piv]) > std::abs(m[best][piv])) best = r;
      }
      for (int col = 0; col < 5; ++col) std::swap(m[piv][col], m[best][col]);
      for (int r = 0; r < 4; ++r) {
        if (r == piv) continue;
        const double f2 = m[r][piv] / m[piv][piv];
        for (int col = piv; col < 5; ++col) m[r][col] -= f2 * m[piv][col];
      }
    }
    double coef[4];
    for (int r = 0; r < 4; ++r) coef[r] = m[r][4] / m[r][r];
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      const double u = ys[i] / span;
      const double fit = coef[0] + u * (coef[1] + u * (coef[2] + u * coef[3]));
      worst = std::max(worst, std::abs(fit - f[i]));
    }
    return worst;
  };

  const double r1 = cubic_residual(v1);
  const double r2 = cubic_residual(v2);
  c.pass = r1 < 1e-12 && r2 < 1e-12;
  std::ostringstream d;
  d << "cubic-fit residuals over y in [-1e-3, 1e-3]: " << r1 << ", " << r2;
  c.detail = d.str();
  return c;
}

SelftestCheck check_correction_asymptotics(const RunConfig& cfg) {
  SelftestCheck c{"discontinuity-correction asymptotics", false, ""};
  ModelParams p;
  p.zeta = cfg.zeta;
  p.eps = cfg.eps;
  p.omega = cfg.omega;
  p.amp = a_graz(p);
  const double zg = z_graz(p);
  const CrossingSolverConfig ccfg = crossing_config(cfg);
  const ImpactOscillator osc(p);

  const double xs[3] = {1e-4, 1e-6, 1e-8};
  double rel1[3], rel2[3];
  try {
    for (int i = 0; i < 3; ++i) {
      const auto [corrected, impact] = p_disc_r({xs[i], zg}, osc, ccfg);
      const double expected_x = p.eps * p.eps * xs[i];
      const double expected_dz =
          -std::sqrt(2.0 * xs[i]) * (1.0 + p.eps);
      const double dz = wrap_pi(corrected.z - zg);
      rel1[i] = std::abs(corrected.x - expected_x) / expected_x;
      rel2[i] = std::abs(dz - expected_dz) / std::abs(expected_dz);
    }
  } catch (const NumericsError& e) {
    c.detail = std::string("evaluation failed: ") + e.what();
    return c;
  }
  const bool monotone =
      rel1[0] > rel1[1] && rel1[1] > rel1[2] && rel2[0] > rel2[1] &&
      rel2[1] > rel2[2];
  c.pass = rel1[1] < 0.05 && rel2[1] < 0.05 && monotone;
  std::ostringstream d;
  d << "relative errors vs leading order at x = 1e-4, 1e-6, 1e-8: "
    << "displacement (" << rel1[0] << ", " << rel1[1] << ", " << rel1[2]
    << "), phase (" << rel2[0] << ", " << rel2[1] << ", " << rel2[2] << ")";
  c.detail = d.str();
  return c;
}

SelftestCheck check_section_membership(const RunConfig& cfg) {
  SelftestCheck c{"section membership of computed crossings", false, ""};
  ModelParams p;
  p.zeta = cfg.zeta;
  p.eps = cfg.eps;
  p.omega = cfg.omega;
  p.amp = cfg.amp;
  const CrossingSolverConfig ccfg = crossing_config(cfg);
  const ImpactOscillator osc(p);

  const State starts[4] = {
      {0.0, 0.2, 1.0 / p.omega, 1.0},    // impact-surface start, forward
      {0.0, -0.1, 2.0 / p.omega, 2.0},   // impact-surface start, backward
      {-0.5, 0.0, 0.5 / p.omega, 0.5},   // section start, one loop ahead
      {-1.2, 0.7, 3.0 / p.omega, 3.0},   // generic interior start
  };
  const Direction dirs[4] = {Direction::forward, Direction::backward,
                             Direction::forward, Direction::forward};
  double worst_v = 0.0;
  double worst_a = -std::numeric_limits<double>::infinity();
  try {
    for (int i = 0; i < 4; ++i) {
      const State cr = next_section_crossing(starts[i], dirs[i], osc, ccfg);
      worst_v = std::max(worst_v, std::abs(cr.y));
      const FlowPoint fp =
          osc.flow_point(cr.t, starts[i].x, starts[i].y, starts[i].t);
      worst_a = std::max(worst_a, fp.a);
    }
  } catch (const NumericsError& e) {
    c.detail = std::string("evaluation failed: ") + e.what();
    return c;
  }
  c.pass = worst_v < 1e-10 && worst_a < 0.0;
  std::ostringstream d;
  d << "max |velocity| at crossings = " << worst_v
    << ", accelerations all negative: " << (worst_a < 0.0 ? "yes" : "no");
  c.detail = d.str();
  return c;
}

}  // namespace

SelftestReport run_selftest(const RunConfig& cfg) {
  SelftestReport rep;
  rep.checks.push_back(check_ode_residual());
  rep.checks.push_back(check_flow_partials());
  rep.checks.push_back(check_smoothness_through_grazing(cfg));
  rep.checks.push_back(check_correction_asymptotics(cfg));
  rep.checks.push_back(check_section_membership(cfg));
  for (const SelftestCheck& c : rep.checks) rep.all_pass &= c.pass;
  return rep;
}

}  // namespace grazecont

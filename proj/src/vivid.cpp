#include "grazecont/vivid.hpp"

#include <cmath>
#include <string>

#include "grazecont/errors.hpp"

namespace grazecont {

namespace {

// Determinant threshold below which Dp_virt is not inverted.
constexpr double kSingularVirtDet = 1e-12;

// Determinant threshold for the 2x2 Newton system.
constexpr double kSingularNewtonDet = 1e-14;

// Everything the defect function and its derivatives need about one
// evaluation: the chain of unwrapped times and displacements.
struct Chain {
  double t1 = 0.0;            // impact time (start, from p.z)
  double y1 = 0.0, y2 = 0.0;  // incoming and outgoing velocities
  SectionArrival virt_in;     // p_virt of the incoming point   -> (x0, t0)
  SectionArrival virt_out;    // p_virt of the outgoing point   -> (x3, t3)
  SectionArrival global_end;  // after p_loops global loops     -> (x4, t4)
  std::vector<SectionArrival> loop_starts;  // global chain start points
};

Chain evaluate_chain(const ImpactPoint& p, int p_loops,
                     const HybridModel& model,
                     const CrossingSolverConfig& cfg,
                     ChainHints* hints = nullptr) {
  const bool guided = hints && hints->valid &&
                      hints->loops.size() == static_cast<std::size_t>(p_loops);
  Chain ch;
  ch.t1 = p.z / model.omega();
  ch.y1 = p.y;
  const ImpactPoint outgoing = model.reset(p);
  ch.y2 = outgoing.y;
  ch.virt_in =
      guided ? p_virt_arrival(p.y, ch.t1, ch.t1 + hints->virt_in, model, cfg)
             : p_virt_arrival(p.y, ch.t1, model, cfg);
  ch.virt_out = guided ? p_virt_arrival(outgoing.y, ch.t1,
                                        ch.t1 + hints->virt_out, model, cfg)
                       : p_virt_arrival(outgoing.y, ch.t1, model, cfg);
  SectionArrival cur = ch.virt_out;
  ch.loop_starts.reserve(static_cast<std::size_t>(p_loops));
  for (int k = 0; k < p_loops; ++k) {
    ch.loop_starts.push_back(cur);
    cur = guided ? p_global_arrival(cur.x, cur.t,
                                    cur.t + hints->loops[static_cast<
                                        std::size_t>(k)],
                                    model, cfg)
                 : p_global_arrival(cur.x, cur.t, model, cfg);
  }
  ch.global_end = cur;
  if (hints) {
    hints->valid = true;
    hints->virt_in = ch.virt_in.t - ch.t1;
    hints->virt_out = ch.virt_out.t - ch.t1;
    hints->loops.resize(static_cast<std::size_t>(p_loops));
    for (std::size_t k = 0; k < ch.loop_starts.size(); ++k) {
      const double t_to = (k + 1 < ch.loop_starts.size())
                              ? ch.loop_starts[k + 1].t
                              : ch.global_end.t;
      hints->loops[k] = t_to - ch.loop_starts[k].t;
    }
  }
  return ch;
}

VividValue value_from_chain(const Chain& ch, const HybridModel& model) {
  VividValue v;
  v.v1 = ch.global_end.x - ch.virt_in.x;
  v.v2 = wrap_pi(model.omega() * (ch.global_end.t - ch.virt_in.t));
  return v;
}

}  // namespace

VividValue vivid(const ImpactPoint& p, int p_loops, const HybridModel& model,
                 const CrossingSolverConfig& cfg, ChainHints* hints) {
  const Chain ch = evaluate_chain(p, p_loops, model, cfg, hints);
  return value_from_chain(ch, model);
}

MapDerivatives vivid_jacobian(const ImpactPoint& p, int p_loops,
                              const HybridModel& model,
                              const CrossingSolverConfig& cfg,
                              ChainHints* hints) {
  const Chain ch = evaluate_chain(p, p_loops, model, cfg, hints);

  const MapDerivatives virt_in =
      p_virt_jacobian_at(ch.y1, ch.t1, ch.virt_in.t, model);
  const MapDerivatives virt_out =
      p_virt_jacobian_at(ch.y2, ch.t1, ch.virt_out.t, model);
  const ResetDerivatives reset = model.reset_jacobian();

  // Accumulate the global loops by the chain rule.
  Mat2 global = Mat2::identity();
  Vec2 global_mu{0.0, 0.0};
  for (std::size_t k = 0; k + 1 <= ch.loop_starts.size(); ++k) {
    const SectionArrival& from = ch.loop_starts[k];
    const SectionArrival to = (k + 1 < ch.loop_starts.size())
                                  ? ch.loop_starts[k + 1]
                                  : ch.global_end;
    const MapDerivatives loop =
        p_global_jacobian_at(from.x, from.t, to.t, model);
    global_mu = loop.d_state * global_mu + loop.d_mu;
    global = loop.d_state * global;
  }

  MapDerivatives out;
  out.d_state = global * virt_out.d_state * reset.d_state - virt_in.d_state;
  out.d_mu = global * (virt_out.d_state * reset.d_mu + virt_out.d_mu) +
             global_mu - virt_in.d_mu;
  return out;
}

NewtonResult newton_solve(double y_imp, double z0, double amp0, int p_loops,
                          const ModelParams& base, const NewtonConfig& ncfg,
                          const CrossingSolverConfig& ccfg,
                          ChainHints* hints) {
  NewtonResult res;
  double z = z0;
  double amp = amp0;
  // Crossing offsets of the last accepted evaluation; every trial starts
  // from them so a rejected trial cannot derail the followed chain.
  ChainHints cur;
  if (hints) cur = *hints;

  // Evaluate the defect at (z, amp); empty on any numerical failure
  // (including invalid trial amplitudes).
  const auto try_eval = [&](double zz, double aa,
                            ChainHints* h) -> std::optional<VividValue> {
    ModelParams trial = base;
    trial.amp = aa;
    try {
      const ImpactOscillator osc(trial);
      return vivid({y_imp, wrap_2pi(zz)}, p_loops, osc, ccfg, h);
    } catch (const NumericsError&) {
      return std::nullopt;
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  };

  ChainHints first = cur;
  std::optional<VividValue> value = try_eval(z, amp, &first);
  if (!value) {
    res.status = NewtonStatus::evaluation_failed;
    return res;
  }
  cur = first;

  for (int iter = 0; iter <= ncfg.max_iter; ++iter) {
    res.z = wrap_2pi(z);
    res.amp = amp;
    res.residual = *value;
    res.iterations = iter;
    if (value->max_norm() < ncfg.tol) {
      res.status = NewtonStatus::converged;
      if (hints) *hints = cur;
      return res;
    }
    if (iter == ncfg.max_iter) break;

    ModelParams trial = base;
    trial.amp = amp;
    Mat2 jac;
    try {
      const ImpactOscillator osc(trial);
      ChainHints jh = cur;
      const MapDerivatives d =
          vivid_jacobian({y_imp, wrap_2pi(z)}, p_loops, osc, ccfg, &jh);
      // Unknowns are (z, A): phase column of d_state plus the mu column.
      jac = {d.d_state.m12, d.d_mu.v1, d.d_state.m22, d.d_mu.v2};
    } catch (const NumericsError&) {
      res.status = NewtonStatus::evaluation_failed;
      return res;
    }
    if (std::abs(jac.det()) < kSingularNewtonDet) {
      res.status = NewtonStatus::singular_jacobian;
      return res;
    }
    const Vec2 delta = jac.inverse() * Vec2{value->v1, value->v2};

    double scale = 1.0;
    ChainHints th = cur;
    std::optional<VividValue> next =
        try_eval(z - delta.v1, amp - delta.v2, &th);
    if (ncfg.damping) {
      // Shrink the step while the residual fails to decrease.
      int shrinks = 0;
      while ((!next || next->max_norm() > value->max_norm()) && shrinks < 8) {
        scale *= *ncfg.damping;
        th = cur;
        next = try_eval(z - scale * delta.v1, amp - scale * delta.v2, &th);
        ++shrinks;
      }
    }
    if (!next) {
      res.status = NewtonStatus::evaluation_failed;
      return res;
    }
    z -= scale * delta.v1;
    amp -= scale * delta.v2;
    value = next;
    cur = th;
  }

  res.status = NewtonStatus::max_iter_exceeded;
  return res;
}

Multipliers stability_multipliers(const ImpactPoint& p, int p_loops,
                                  const HybridModel& model,
                                  const CrossingSolverConfig& cfg,
                                  const ChainHints* hints) {
  ChainHints local;
  if (hints) local = *hints;
  const Chain ch =
      evaluate_chain(p, p_loops, model, cfg, hints ? &local : nullptr);

  const MapDerivatives virt_in =
      p_virt_jacobian_at(ch.y1, ch.t1, ch.virt_in.t, model);
  if (std::abs(virt_in.d_state.det()) < kSingularVirtDet) {
    throw NearGrazingSingularity(
        "orbit too close to grazing to assemble DQ: |det Dp_virt| = " +
        std::to_string(std::abs(virt_in.d_state.det())));
  }
  const MapDerivatives virt_out =
      p_virt_jacobian_at(ch.y2, ch.t1, ch.virt_out.t, model);
  const ResetDerivatives reset = model.reset_jacobian();

  Mat2 global = Mat2::identity();
  for (std::size_t k = 0; k + 1 <= ch.loop_starts.size(); ++k) {
    const SectionArrival& from = ch.loop_starts[k];
    const SectionArrival to = (k + 1 < ch.loop_starts.size())
                                  ? ch.loop_starts[k + 1]
                                  : ch.global_end;
    const MapDerivatives loop =
        p_global_jacobian_at(from.x, from.t, to.t, model);
    global = loop.d_state * global;
  }

  const Mat2 dq = global * virt_out.d_state * reset.d_state *
                  virt_in.d_state.inverse();
  const auto [l1, l2] = eigenvalues_2x2(dq);
  return {l1, l2};
}

}  // namespace grazecont

// The VIVID defect function and its Newton solver.
//
// A maximal periodic orbit with one low-velocity impact per period is a
// fixed point of  Q = p_global_p o p_disc_r.  Writing the discontinuity
// correction as p_virt o reset o p_virt^{-1} and conjugating by p_virt turns
// the fixed-point condition into a zero of
//
//     V(y, z; mu) = (p_global_p o p_virt o reset)(y, z) - p_virt(y, z),
//
// evaluated on the impacting surface.  Crucially, V contains no square-root
// singularity: both sides pass through p_virt, so V is as smooth as the flow
// even at the grazing limit y = 0 and for virtual continuations y < 0.  That
// makes plain Newton iteration and parameter continuation straight through
// grazing possible.
//
// The two components are the displacement defect and the phase defect (the
// latter wrapped to the representative nearest zero).

#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "grazecont/maps.hpp"
#include "grazecont/model.hpp"
#include "grazecont/oscillator.hpp"
#include "grazecont/types.hpp"

namespace grazecont {

/// Value of the defect function: displacement and phase components.
struct VividValue {
  double v1 = 0.0;  ///< displacement defect
  double v2 = 0.0;  ///< phase defect, wrapped to (-pi, pi]
  double max_norm() const { return std::max(std::abs(v1), std::abs(v2)); }
};

/// Crossing bookkeeping of one defect-function evaluation: the arrival-time
/// offset of every leg of the chain, each measured from the leg's start.
///
/// A fresh evaluation (valid == false) takes the first crossing of every
/// leg.  A hinted one instead polishes the crossing nearest the remembered
/// offset.  Carrying the hints along a continuation path keeps the chain a
/// continuous function of (y, z, A, omega) even where additional
/// displacement maxima are created or destroyed along a loop — there the
/// first-crossing choice jumps to the newborn maximum although the orbit
/// family itself continues smoothly.
struct ChainHints {
  bool valid = false;
  double virt_in = 0.0;   ///< incoming-maximum arrival minus impact time
  double virt_out = 0.0;  ///< outgoing-maximum arrival minus impact time
  std::vector<double> loops;  ///< duration of each global loop in turn
};

/// Newton iteration settings.  The residual is measured in the maximum norm.
struct NewtonConfig {
  double tol = 1e-10;
  int max_iter = 20;
  /// Optional step-shrink factor in (0, 1) applied repeatedly while the
  /// residual fails to decrease; disabled by default.
  std::optional<double> damping{};
};

enum class NewtonStatus {
  converged,
  max_iter_exceeded,
  singular_jacobian,
  evaluation_failed,
};

/// Outcome of a Newton solve for (z, A) at fixed impact velocity.
struct NewtonResult {
  NewtonStatus status = NewtonStatus::evaluation_failed;
  double z = 0.0;    ///< polished phase, wrapped to [0, 2pi)
  double amp = 0.0;  ///< polished forcing amplitude
  VividValue residual{};
  int iterations = 0;
  bool converged() const { return status == NewtonStatus::converged; }
};

/// Floquet multipliers of the full Poincare map at a periodic orbit,
/// eigenvalues of DQ.  A real pair is ordered descending (lambda1 tracks the
/// saddle-node multiplier near +1, lambda2 the period-doubling multiplier
/// heading to -1); a complex pair carries the positive imaginary part first.
struct Multipliers {
  std::complex<double> lambda1;
  std::complex<double> lambda2;
  bool real_pair() const {
    return lambda1.imag() == 0.0 && lambda2.imag() == 0.0;
  }
};

/// Evaluate the defect function at impact point p for a p_loops-loop orbit.
/// If hints is non-null, a valid *hints guides the crossing choice of every
/// leg, and the offsets actually found are written back on success.
VividValue vivid(const ImpactPoint& p, int p_loops, const HybridModel& model,
                 const CrossingSolverConfig& cfg, ChainHints* hints = nullptr);

/// Analytic derivatives of the defect function: d_state holds the columns
/// (dV/dy, dV/dz) and d_mu the column dV/dmu, assembled by the chain rule
/// from the section-map Jacobians.  Finite at y = 0.
MapDerivatives vivid_jacobian(const ImpactPoint& p, int p_loops,
                              const HybridModel& model,
                              const CrossingSolverConfig& cfg,
                              ChainHints* hints = nullptr);

/// Newton iteration on (z, A) at fixed impact velocity y_imp, starting from
/// (z0, amp0), with the remaining parameters taken from `base`.  Since the
/// grazing amplitude is fixed once omega and zeta are, dV/dA = dV/dmu.
/// A non-null hints seeds the crossing choice and, on return, holds the
/// offsets of the last accepted evaluation.
NewtonResult newton_solve(double y_imp, double z0, double amp0, int p_loops,
                          const ModelParams& base, const NewtonConfig& ncfg,
                          const CrossingSolverConfig& ccfg,
                          ChainHints* hints = nullptr);

/// Floquet multipliers at a (near-)zero of the defect function.  Throws
/// NearGrazingSingularity when |det Dp_virt| at the impact point is below
/// 1e-12, i.e. too close to grazing for DQ to be assembled.
Multipliers stability_multipliers(const ImpactPoint& p, int p_loops,
                                  const HybridModel& model,
                                  const CrossingSolverConfig& cfg,
                                  const ChainHints* hints = nullptr);

}  // namespace grazecont

// Exception types raised by the numerical kernels.
//
// All failures derive from NumericsError so callers that only care about
// "the evaluation failed" (e.g. a continuation step retrying with a shorter
// step) can catch one type, while tests can assert on the precise cause.

#pragma once

#include <stdexcept>
#include <string>

namespace grazecont {

/// Base class for all numerical failures in this library.
class NumericsError : public std::runtime_error {
 public:
  explicit NumericsError(const std::string& what) : std::runtime_error(what) {}
};

/// No section crossing was found within the bracketing horizon.
class NoCrossingFound : public NumericsError {
 public:
  explicit NoCrossingFound(const std::string& what) : NumericsError(what) {}
};

/// The trajectory arrives at the section almost tangentially
/// (|acceleration| below threshold), so the crossing-time derivative map
/// is ill-defined.
class SingularCrossing : public NumericsError {
 public:
  explicit SingularCrossing(const std::string& what) : NumericsError(what) {}
};

/// The backward solve for the incoming impact preimage did not converge;
/// the section point is too far from the impacting surface for the local
/// discontinuity construction.
class InverseBranchFailure : public NumericsError {
 public:
  explicit InverseBranchFailure(const std::string& what) : NumericsError(what) {}
};

/// The one-step correction map is numerically singular because the orbit is
/// too close to grazing for its Jacobian to be inverted.
class NearGrazingSingularity : public NumericsError {
 public:
  explicit NearGrazingSingularity(const std::string& what) : NumericsError(what) {}
};

/// Long-time simulation did not settle onto a periodic impacting attractor.
class NoPeriodicAttractor : public NumericsError {
 public:
  explicit NoPeriodicAttractor(const std::string& what) : NumericsError(what) {}
};

/// No sign change of the bifurcation test function over the scanned branch.
class NoBracket : public NumericsError {
 public:
  explicit NoBracket(const std::string& what) : NumericsError(what) {}
};

}  // namespace grazecont

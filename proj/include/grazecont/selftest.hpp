// Built-in consistency battery.
//
// Five independent checks of the numerical kernels, run with the tolerances
// of the active configuration so a corrupted configuration (e.g. a huge
// time_tol) fails loudly:
//   1. flow-jet ODE residual on random argument tuples,
//   2. analytic flow partials against central finite differences,
//   3. smoothness of the defect function through grazing (cubic fit),
//   4. leading-order asymptotics of the discontinuity correction,
//   5. section membership of computed crossings.

#pragma once

#include <string>
#include <vector>

#include "grazecont/config.hpp"

namespace grazecont {

struct SelftestCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SelftestReport {
  std::vector<SelftestCheck> checks;
  bool all_pass = true;
};

/// Run the full battery with the given configuration's model parameters and
/// solver tolerances.
SelftestReport run_selftest(const RunConfig& cfg);

}  // namespace grazecont

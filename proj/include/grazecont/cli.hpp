// Command-line front end: parses arguments, loads the configuration file,
// dispatches to one of the run commands, and maps failures to exit codes.
//
// Exit codes:
//   0  success
//   1  bad command line or bad configuration
//   2  numerical failure (partial output, if any, is preserved on disk)
#pragma once

#include <string>

#include "grazecont/config.hpp"

namespace grazecont::cli {

// ===== Commands =====

/// Tabulates the analytic grazing curve over [omega_min, omega_max].
int cmd_graze(const RunConfig& cfg);

/// Finds a single periodic orbit (by simulation or from an explicit initial
/// guess) and writes it as a one-row CSV seed.
int cmd_seed(const RunConfig& cfg);

/// Continues a branch of periodic orbits in the forcing amplitude at fixed
/// frequency, writing the branch CSV plus a `.bif.csv` sidecar with the
/// detected codimension-one points.
int cmd_branch(const RunConfig& cfg);

/// Traces the two-parameter bifurcation set: the grazing curve plus the
/// period-doubling, saddle-node, and secondary-grazing curves that emanate
/// from it.  Writes one CSV per curve.
int cmd_codim2(const RunConfig& cfg);

/// Runs the built-in diagnostics battery and prints one line per check.
int cmd_selftest(const RunConfig& cfg);

// ===== Entry point =====

/// Full argument parsing + dispatch.  Returns the process exit code.
int run(int argc, char** argv);

}  // namespace grazecont::cli

// Flat key = value run configuration.
//
// Files contain one `key = value` pair per line; `#` starts a comment and
// blank lines are ignored.  Unknown keys and malformed lines are rejected
// with the offending line number.  All keys have documented defaults, so an
// empty file is valid.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace grazecont {

/// Invalid command line, unreadable file, malformed or out-of-range
/// configuration.  Maps to process exit code 1.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Everything a CLI run needs.  Field defaults are the documented defaults.
struct RunConfig {
  // --- model keys ---
  double zeta = 0.02;
  double eps = 0.9;
  double omega = 0.81;
  double amp = 0.355;
  int p_loops = 2;

  // --- solver keys ---
  double newton_tol = 1e-10;
  int newton_max_iter = 20;
  double time_tol = 1e-12;
  double bif_tol = 1e-8;
  double dy_imp = -1e-4;

  // --- run keys ---
  std::string command;  ///< optional default command; the CLI argument wins
  std::string output_path = "out.csv";
  double omega_min = 0.78;
  double omega_max = 1.01;
  double domega = 5e-4;
  int n_steps = 2000;
  std::optional<double> seed_y_imp;  ///< explicit branch seed (skips simulation)
  std::optional<double> seed_z_imp;  ///< seed phase; defaults to the grazing phase

  // --- seeding keys ---
  int sim_steps = 500;
  int transient_steps = 400;

  // --- codim-2 seed keys (frequency of the SN seed branch) ---
  double omega_sn = 0.799;
};

/// Parse and validate a configuration file.  Throws ConfigError.
RunConfig parse_config_file(const std::string& path);

/// Parse and validate configuration text (used by tests).  Throws
/// ConfigError.
RunConfig parse_config_text(const std::string& text);

}  // namespace grazecont

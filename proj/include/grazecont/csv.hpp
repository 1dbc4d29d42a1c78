// Deterministic CSV output.
//
// All numbers are written with 17 significant digits (round-trippable
// doubles), files end with a trailing newline, and writes are atomic
// (temporary file + rename).  Identical inputs produce byte-identical files.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grazecont/continuation.hpp"

namespace grazecont {

/// Shortest round-trippable decimal form ("%.17g").
std::string format_g17(double v);

/// Curve kind names as written to CSV.
std::string bif_kind_name(BifKind kind);

/// Header "omega,a_graz,z_graz".
void write_graze_csv(const std::string& path,
                     const std::vector<GrazePoint>& rows);

/// Header "step,y_imp,z_imp,amp,omega,l1_re,l1_im,l2_re,l2_im,stable,virtual".
/// Multiplier fields are left empty for points inside the grazing guard
/// band; stable/virtual are 0/1.
void write_branch_csv(const std::string& path,
                      const std::vector<BranchPoint>& rows);

/// Header "kind,omega,amp,y_imp,z_imp".  Optional trailing annotation
/// comment lines (each written as "# <text>") record stop rules.
void write_bif_csv(const std::string& path, const std::vector<BifPoint>& rows,
                   const std::vector<std::string>& annotations = {});

/// Single-row seed output, header "y_imp,z_imp,amp,omega".
void write_seed_csv(const std::string& path, const ImpactPoint& seed,
                    double amp, double omega);

/// Human-readable stop-rule name for codim-2 curve annotations.
std::string codim2_stop_name(Codim2Stop stop);

}  // namespace grazecont

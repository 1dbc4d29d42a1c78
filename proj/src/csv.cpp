#include "grazecont/csv.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace grazecont {

namespace {

// Write the full text atomically: temporary file in the same directory,
// then rename over the target.
void write_atomic(const std::string& path, const std::string& text) {
  const std::filesystem::path target(path);
  const std::filesystem::path tmp(path + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open '" + tmp.string() +
                               "' for writing");
    }
    out << text;
    if (!out) {
      throw std::runtime_error("write failed for '" + tmp.string() + "'");
    }
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string bif_kind_name(BifKind kind) {
  switch (kind) {
    case BifKind::PD: return "PD";
    case BifKind::SN: return "SN";
    case BifKind::GRAZE: return "GRAZE";
    case BifKind::GRAZE2: return "GRAZE2";
    case BifKind::RESONANCE: return "RESONANCE";
  }
  return "UNKNOWN";
}

std::string codim2_stop_name(Codim2Stop stop) {
  switch (stop) {
    case Codim2Stop::resonance: return "resonance";
    case Codim2Stop::secondary_grazing: return "secondary_grazing";
    case Codim2Stop::bracket_collapse: return "bracket_collapse";
    case Codim2Stop::omega_window: return "omega_window";
    case Codim2Stop::step_limit: return "step_limit";
  }
  return "unknown";
}

void write_graze_csv(const std::string& path,
                     const std::vector<GrazePoint>& rows) {
  std::ostringstream out;
  out << "omega,a_graz,z_graz\n";
  for (const GrazePoint& r : rows) {
    out << format_g17(r.omega) << ',' << format_g17(r.a_graz) << ','
        << format_g17(r.z_graz) << '\n';
  }
  write_atomic(path, out.str());
}

void write_branch_csv(const std::string& path,
                      const std::vector<BranchPoint>& rows) {
  std::ostringstream out;
  out << "step,y_imp,z_imp,amp,omega,l1_re,l1_im,l2_re,l2_im,stable,virtual\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const BranchPoint& r = rows[i];
    out << i << ',' << format_g17(r.y_imp) << ',' << format_g17(r.z_imp)
        << ',' << format_g17(r.amp) << ',' << format_g17(r.omega) << ',';
    if (r.multipliers_valid) {
      out << format_g17(r.lambda1.real()) << ','
          << format_g17(r.lambda1.imag()) << ','
          << format_g17(r.lambda2.real()) << ','
          << format_g17(r.lambda2.imag());
    } else {
      out << ",,,";
    }
    out << ',' << (r.stable ? 1 : 0) << ',' << (r.is_virtual ? 1 : 0) << '\n';
  }
  write_atomic(path, out.str());
}

void write_bif_csv(const std::string& path, const std::vector<BifPoint>& rows,
                   const std::vector<std::string>& annotations) {
  std::ostringstream out;
  out << "kind,omega,amp,y_imp,z_imp\n";
  for (const BifPoint& r : rows) {
    out << bif_kind_name(r.kind) << ',' << format_g17(r.omega) << ','
        << format_g17(r.amp) << ',' << format_g17(r.y_imp) << ','
        << format_g17(r.z_imp) << '\n';
  }
  for (const std::string& a : annotations) {
    out << "# " << a << '\n';
  }
  write_atomic(path, out.str());
}

void write_seed_csv(const std::string& path, const ImpactPoint& seed,
                    double amp, double omega) {
  std::ostringstream out;
  out << "y_imp,z_imp,amp,omega\n";
  out << format_g17(seed.y) << ',' << format_g17(seed.z) << ','
      << format_g17(amp) << ',' << format_g17(omega) << '\n';
  write_atomic(path, out.str());
}

}  // namespace grazecont

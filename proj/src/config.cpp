#include "grazecont/config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace grazecont {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& value, int line_no) {
  const std::string v = trim(value);
  char* end = nullptr;
  const double d = std::strtod(v.c_str(), &end);
  if (v.empty() || end != v.c_str() + v.size()) {
    throw ConfigError("line " + std::to_string(line_no) +
                      ": expected a number, got '" + v + "'");
  }
  return d;
}

int parse_int(const std::string& value, int line_no) {
  const double d = parse_double(value, line_no);
  const int i = static_cast<int>(d);
  if (static_cast<double>(i) != d) {
    throw ConfigError("line " + std::to_string(line_no) +
                      ": expected an integer, got '" + trim(value) + "'");
  }
  return i;
}

void validate_run_config(const RunConfig& c) {
  const auto fail = [](const std::string& msg) { throw ConfigError(msg); };
  if (!(c.zeta > 0.0 && c.zeta < 1.0)) fail("zeta must satisfy 0 < zeta < 1");
  if (!(c.eps > 0.0 && c.eps <= 1.0)) fail("eps must satisfy 0 < eps <= 1");
  if (!(c.omega > 0.0)) fail("omega must be positive");
  if (!(c.amp > 0.0)) fail("amp must be positive");
  if (c.p_loops < 1) fail("p_loops must be >= 1");
  if (!(c.newton_tol > 0.0)) fail("newton_tol must be positive");
  if (c.newton_max_iter < 1) fail("newton_max_iter must be >= 1");
  if (!(c.time_tol > 0.0)) fail("time_tol must be positive");
  if (!(c.bif_tol > 0.0)) fail("bif_tol must be positive");
  if (c.dy_imp == 0.0) fail("dy_imp must be nonzero");
  if (c.n_steps < 0) fail("n_steps must be >= 0");
  if (!(c.omega_min <= c.omega_max)) fail("omega_min must be <= omega_max");
  if (!(c.domega != 0.0)) fail("domega must be nonzero");
  if (c.sim_steps < 1) fail("sim_steps must be >= 1");
  if (c.transient_steps < 0 || c.transient_steps >= c.sim_steps) {
    fail("need 0 <= transient_steps < sim_steps");
  }
  if (!(c.omega_sn > 0.0)) fail("omega_sn must be positive");
  if (!c.command.empty() && c.command != "graze" && c.command != "seed" &&
      c.command != "branch" && c.command != "codim2" &&
      c.command != "selftest") {
    fail("unknown command '" + c.command + "'");
  }
  if (c.output_path.empty()) fail("output_path must not be empty");
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
  RunConfig cfg;

  using Setter = std::function<void(RunConfig&, const std::string&, int)>;
  static const std::map<std::string, Setter> setters = {
      {"zeta", [](RunConfig& c, const std::string& v, int n) { c.zeta = parse_double(v, n); }},
      {"eps", [](RunConfig& c, const std::string& v, int n) { c.eps = parse_double(v, n); }},
      {"omega", [](RunConfig& c, const std::string& v, int n) { c.omega = parse_double(v, n); }},
      {"amp", [](RunConfig& c, const std::string& v, int n) { c.amp = parse_double(v, n); }},
      {"p_loops", [](RunConfig& c, const std::string& v, int n) { c.p_loops = parse_int(v, n); }},
      {"newton_tol", [](RunConfig& c, const std::string& v, int n) { c.newton_tol = parse_double(v, n); }},
      {"newton_max_iter", [](RunConfig& c, const std::string& v, int n) { c.newton_max_iter = parse_int(v, n); }},
      {"time_tol", [](RunConfig& c, const std::string& v, int n) { c.time_tol = parse_double(v, n); }},
      {"bif_tol", [](RunConfig& c, const std::string& v, int n) { c.bif_tol = parse_double(v, n); }},
      {"dy_imp", [](RunConfig& c, const std::string& v, int n) { c.dy_imp = parse_double(v, n); }},
      {"command", [](RunConfig& c, const std::string& v, int) { c.command = trim(v); }},
      {"output_path", [](RunConfig& c, const std::string& v, int) { c.output_path = trim(v); }},
      {"omega_min", [](RunConfig& c, const std::string& v, int n) { c.omega_min = parse_double(v, n); }},
      {"omega_max", [](RunConfig& c, const std::string& v, int n) { c.omega_max = parse_double(v, n); }},
      {"domega", [](RunConfig& c, const std::string& v, int n) { c.domega = parse_double(v, n); }},
      {"n_steps", [](RunConfig& c, const std::string& v, int n) { c.n_steps = parse_int(v, n); }},
      {"seed_y_imp", [](RunConfig& c, const std::string& v, int n) { c.seed_y_imp = parse_double(v, n); }},
      {"seed_z_imp", [](RunConfig& c, const std::string& v, int n) { c.seed_z_imp = parse_double(v, n); }},
      {"sim_steps", [](RunConfig& c, const std::string& v, int n) { c.sim_steps = parse_int(v, n); }},
      {"transient_steps", [](RunConfig& c, const std::string& v, int n) { c.transient_steps = parse_int(v, n); }},
      {"omega_sn", [](RunConfig& c, const std::string& v, int n) { c.omega_sn = parse_double(v, n); }},
  };

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected 'key = value', got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = line.substr(eq + 1);
    const auto it = setters.find(key);
    if (it == setters.end()) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": unknown key '" + key + "'");
    }
    it->second(cfg, value, line_no);
  }
  validate_run_config(cfg);
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

}  // namespace grazecont

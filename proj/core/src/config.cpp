#include "evb/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "evb/constants.hpp"
#include "evb/errors.hpp"
#include "evb/io.hpp"

namespace evb {

namespace {

std::string trim(std::string s) {
  const auto issp = [](unsigned char c) { return std::isspace(c); };
  while (!s.empty() && issp(s.front())) s.erase(s.begin());
  while (!s.empty() && issp(s.back())) s.pop_back();
  return s;
}

[[noreturn]] void fail(const std::filesystem::path& path, int line,
                       const std::string& what) {
  std::ostringstream msg;
  msg << path.string() << ":" << line << ": " << what;
  throw ConfigError(msg.str());
}

double parse_double(const std::filesystem::path& p, int line,
                    const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing junk");
    return v;
  } catch (const std::exception&) {
    fail(p, line, "key '" + key + "': cannot parse number '" + value + "'");
  }
}

int parse_int(const std::filesystem::path& p, int line, const std::string& key,
              const std::string& value) {
  int v = 0;
  const auto* b = value.data();
  const auto* e = b + value.size();
  const auto res = std::from_chars(b, e, v);
  if (res.ec != std::errc() || res.ptr != e)
    fail(p, line, "key '" + key + "': cannot parse integer '" + value + "'");
  return v;
}

bool parse_bool(const std::filesystem::path& p, int line,
                const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  fail(p, line, "key '" + key + "': expected boolean, got '" + value + "'");
}

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());

  RunConfig cfg;
  std::string section;
  std::string line;
  int lineno = 0;
  bool saw_field = false, saw_energy = false;

  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') fail(path, lineno, "malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "setup" && section != "mode" && section != "geometry" &&
          section != "numerics" && section != "output" && section != "run")
        fail(path, lineno, "unknown section [" + section + "]");
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos)
      fail(path, lineno, "expected 'key = value', got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      fail(path, lineno, "empty key or value");
    if (section.empty())
      fail(path, lineno, "key '" + key + "' before any [section] header");

    const auto num = [&] { return parse_double(path, lineno, key, value); };
    const auto integer = [&] { return parse_int(path, lineno, key, value); };
    const auto boolean = [&] { return parse_bool(path, lineno, key, value); };

    if (section == "setup") {
      if (key == "field_tesla") {
        cfg.field_tesla = num();
        saw_field = true;
      } else if (key == "energy_kev") {
        cfg.energy_kev = num();
        saw_energy = true;
      } else if (key == "waist_nm") {
        cfg.waist_nm = num();
      } else if (key == "rayleigh_um") {
        cfg.rayleigh_um = num();
      } else {
        fail(path, lineno, "unknown key '" + key + "' in [setup]");
      }
    } else if (section == "mode") {
      if (key == "n") cfg.n = integer();
      else if (key == "ell") cfg.ell = integer();
      else fail(path, lineno, "unknown key '" + key + "' in [mode]");
    } else if (section == "geometry") {
      if (key == "zk_um") {
        cfg.zk_um = num();
      } else if (key == "zk_list_um") {
        cfg.zk_list_um.clear();
        std::stringstream ss(value);
        std::string item;
        while (std::getline(ss, item, ',')) {
          item = trim(item);
          if (item.empty()) fail(path, lineno, "empty entry in zk_list_um");
          cfg.zk_list_um.push_back(
              parse_double(path, lineno, key, item));
        }
        if (cfg.zk_list_um.empty())
          fail(path, lineno, "zk_list_um must name at least one position");
      } else if (key == "zdf_um") {
        cfg.zdf_um = num();
      } else if (key == "zk_range_um") {
        const auto colon = value.find(':');
        if (colon == std::string::npos)
          fail(path, lineno, "zk_range_um expects 'lo:hi'");
        cfg.zk_range_lo_um =
            parse_double(path, lineno, key, trim(value.substr(0, colon)));
        cfg.zk_range_hi_um =
            parse_double(path, lineno, key, trim(value.substr(colon + 1)));
      } else if (key == "steps") {
        cfg.steps = integer();
      } else {
        fail(path, lineno, "unknown key '" + key + "' in [geometry]");
      }
    } else if (section == "numerics") {
      if (key == "grid") cfg.grid = integer();
      else if (key == "extent_factor") cfg.extent_factor = num();
      else if (key == "extent_um") cfg.extent_um = num();
      else if (key == "dz_frac") cfg.dz_frac = num();
      else if (key == "cheb_tol") cfg.cheb_tol = num();
      else if (key == "cheb_max_terms") cfg.cheb_max_terms = integer();
      else if (key == "bandwidth_tol") cfg.bandwidth_tol = num();
      else if (key == "truncate") cfg.truncate = boolean();
      else if (key == "planes") cfg.planes = integer();
      else if (key == "traj_tol") cfg.traj_tol = num();
      else if (key == "traj_count") cfg.traj_count = integer();
      else fail(path, lineno, "unknown key '" + key + "' in [numerics]");
    } else if (section == "output") {
      if (key == "dir") {
        cfg.out_dir = value;
      } else if (key == "formats") {
        cfg.format_csv = cfg.format_pgm = false;
        std::stringstream ss(value);
        std::string item;
        while (std::getline(ss, item, ',')) {
          item = trim(item);
          if (item == "csv") cfg.format_csv = true;
          else if (item == "pgm") cfg.format_pgm = true;
          else fail(path, lineno, "unknown format '" + item + "'");
        }
      } else if (key == "pgm_gamma") {
        cfg.pgm_gamma = num();
      } else {
        fail(path, lineno, "unknown key '" + key + "' in [output]");
      }
    } else {  // run
      if (key == "command") cfg.command = value;
      else if (key == "model") cfg.model = value;
      else if (key == "observable") cfg.observable = value;
      else fail(path, lineno, "unknown key '" + key + "' in [run]");
    }
  }

  if (!saw_field) throw ConfigError(path.string() + ": missing field_tesla");
  if (!saw_energy) throw ConfigError(path.string() + ": missing energy_kev");
  validate(cfg);
  return cfg;
}

void validate(const RunConfig& c) {
  const auto check = [](bool ok, const std::string& what) {
    if (!ok) throw ConfigError("config validation: " + what);
  };
  check(std::isfinite(c.field_tesla) && c.field_tesla >= 0.0,
        "field_tesla must be >= 0 (0 selects the free-space branch)");
  check(std::isfinite(c.energy_kev) && c.energy_kev > 0.0,
        "energy_kev must be > 0");
  check(c.waist_nm.has_value() != c.rayleigh_um.has_value(),
        "exactly one of waist_nm / rayleigh_um is required");
  if (c.waist_nm) check(*c.waist_nm > 0.0, "waist_nm must be > 0");
  if (c.rayleigh_um) check(*c.rayleigh_um > 0.0, "rayleigh_um must be > 0");
  check(c.n >= 0, "mode n must be >= 0");
  check(c.steps >= 2, "steps must be >= 2");
  check(c.zk_range_lo_um < c.zk_range_hi_um, "zk_range_um must be lo < hi");
  check(power_of_two(c.grid) && c.grid >= 64,
        "grid must be a power of two >= 64");
  check(c.extent_factor > 0.0, "extent_factor must be > 0");
  if (c.extent_um) check(*c.extent_um > 0.0, "extent_um must be > 0");
  check(c.dz_frac > 0.0, "dz_frac must be > 0");
  check(c.cheb_tol > 0.0, "cheb_tol must be > 0");
  check(c.cheb_max_terms > 0, "cheb_max_terms must be > 0");
  check(c.bandwidth_tol > 0.0, "bandwidth_tol must be > 0");
  check(c.planes >= 2, "planes must be >= 2");
  check(c.traj_tol > 0.0, "traj_tol must be > 0");
  check(c.traj_count >= 1, "traj_count must be >= 1");
  check(c.pgm_gamma > 0.0, "pgm_gamma must be > 0");
  check(c.format_csv || c.format_pgm, "at least one output format required");
  check(c.model == "gouy" || c.model == "free-lg" || c.model == "landau",
        "model must be gouy | free-lg | landau");
  check(c.observable == "angle" || c.observable == "omega",
        "observable must be angle | omega");
}

void write_config(const RunConfig& c, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open for writing: " + path.string());
  out << "[setup]\n";
  out << "field_tesla = " << format_double(c.field_tesla) << "\n";
  out << "energy_kev = " << format_double(c.energy_kev) << "\n";
  if (c.waist_nm) out << "waist_nm = " << format_double(*c.waist_nm) << "\n";
  if (c.rayleigh_um)
    out << "rayleigh_um = " << format_double(*c.rayleigh_um) << "\n";
  out << "\n[mode]\n";
  out << "n = " << c.n << "\n";
  out << "ell = " << c.ell << "\n";
  out << "\n[geometry]\n";
  if (c.zk_um) out << "zk_um = " << format_double(*c.zk_um) << "\n";
  if (!c.zk_list_um.empty()) {
    out << "zk_list_um = ";
    for (std::size_t i = 0; i < c.zk_list_um.size(); ++i)
      out << format_double(c.zk_list_um[i])
          << (i + 1 < c.zk_list_um.size() ? "," : "");
    out << "\n";
  }
  out << "zdf_um = " << format_double(c.zdf_um) << "\n";
  out << "zk_range_um = " << format_double(c.zk_range_lo_um) << ":"
      << format_double(c.zk_range_hi_um) << "\n";
  out << "steps = " << c.steps << "\n";
  out << "\n[numerics]\n";
  out << "grid = " << c.grid << "\n";
  out << "extent_factor = " << format_double(c.extent_factor) << "\n";
  if (c.extent_um) out << "extent_um = " << format_double(*c.extent_um) << "\n";
  out << "dz_frac = " << format_double(c.dz_frac) << "\n";
  out << "cheb_tol = " << format_double(c.cheb_tol) << "\n";
  out << "cheb_max_terms = " << c.cheb_max_terms << "\n";
  out << "bandwidth_tol = " << format_double(c.bandwidth_tol) << "\n";
  out << "truncate = " << (c.truncate ? "true" : "false") << "\n";
  out << "planes = " << c.planes << "\n";
  out << "traj_tol = " << format_double(c.traj_tol) << "\n";
  out << "traj_count = " << c.traj_count << "\n";
  out << "\n[output]\n";
  out << "dir = " << c.out_dir << "\n";
  out << "formats = ";
  if (c.format_csv) out << "csv";
  if (c.format_csv && c.format_pgm) out << ",";
  if (c.format_pgm) out << "pgm";
  out << "\n";
  out << "pgm_gamma = " << format_double(c.pgm_gamma) << "\n";
  out << "\n[run]\n";
  if (!c.command.empty()) out << "command = " << c.command << "\n";
  out << "model = " << c.model << "\n";
  out << "observable = " << c.observable << "\n";
  if (!out) throw ConfigError("write failure: " + path.string());
}

PhysicalSetup setup_from_config(const RunConfig& c) {
  const double t_joule = constants::kev_to_joule(c.energy_kev);
  double w0 = 0.0;
  if (c.waist_nm) {
    w0 = *c.waist_nm * 1e-9;
  } else {
    w0 = waist_for_rayleigh(t_joule, *c.rayleigh_um * 1e-6);
  }
  if (c.field_tesla > 0.0) return derive_setup(c.field_tesla, t_joule, w0);
  return derive_setup_free(t_joule, w0);
}

ModeIndex mode_from_config(const RunConfig& c) { return ModeIndex{c.n, c.ell}; }

}  // namespace evb

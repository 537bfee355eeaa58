#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "evb/modes.hpp"
#include "evb/params.hpp"

namespace evb {

// Validated run configuration. File format: `key = value` lines grouped
// under [section] headers; '#' starts a comment; unknown keys are rejected
// with their line number.
struct RunConfig {
  // [setup]
  double field_tesla = -1.0;  // required; 0 selects the free-space branch
  double energy_kev = -1.0;   // required
  std::optional<double> waist_nm;    // exactly one of waist_nm / rayleigh_um
  std::optional<double> rayleigh_um;

  // [mode]
  int n = 0;
  int ell = 1;

  // [geometry]
  std::optional<double> zk_um;         // knife-edge plane (simulate)
  std::vector<double> zk_list_um;      // multiple cuts, one run each
  double zdf_um = 0.0;                 // observation plane
  double zk_range_lo_um = -350.0;      // rotation-curve sweep
  double zk_range_hi_um = -20.0;
  int steps = 200;

  // [numerics]
  int grid = 512;
  double extent_factor = 12.0;
  std::optional<double> extent_um;  // explicit grid side, overrides factor
  double dz_frac = 512.0;           // dz = pi z_m / dz_frac
  double cheb_tol = 1e-15;
  int cheb_max_terms = 100000;
  double bandwidth_tol = 1e-8;
  bool truncate = true;
  int planes = 17;  // recorded planes per simulate run (incl. both ends)
  double traj_tol = 1e-10;
  int traj_count = 64;

  // [output]
  std::string out_dir = "out";
  bool format_csv = true;
  bool format_pgm = true;
  double pgm_gamma = 1.0;

  // [run]
  std::string command;            // informational: intended subcommand
  std::string model = "gouy";     // rotation-curve: gouy | free-lg | landau
  std::string observable = "angle";  // rotation-curve: angle | omega
};

RunConfig load_config(const std::filesystem::path& path);

// Echo a validated config in load_config's own format (round-trip identity).
void write_config(const RunConfig& config, const std::filesystem::path& path);

// Validate cross-field constraints; throws ConfigError. load_config calls
// this; CLI overrides re-validate afterwards.
void validate(const RunConfig& config);

// Physical setup from the [setup] section (free-space branch for B = 0).
PhysicalSetup setup_from_config(const RunConfig& config);
ModeIndex mode_from_config(const RunConfig& config);

}  // namespace evb

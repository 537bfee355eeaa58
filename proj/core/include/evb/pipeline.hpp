#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "evb/analysis.hpp"
#include "evb/config.hpp"
#include "evb/io.hpp"
#include "evb/propagator.hpp"
#include "evb/theory.hpp"

namespace evb {

struct RunContext {
  int threads = 1;
  std::uint64_t seed = 12345;
  std::function<void(const std::string&)> log;  // progress lines; may be null
};

// `params`: every derived quantity as labeled CSV rows (name,value,unit).
void run_params(const RunConfig& config, std::ostream& out);

// `rotation-curve`: angle observable emits z_k_um,angle_deg,model; omega
// observable emits the normalized frequency curve together with the three
// quantized Landau levels. Returns the written CSV path.
std::filesystem::path run_rotation_curve(const RunConfig& config,
                                         const RunContext& ctx);

// `mode-profile`: |Psi|^2 and phase on a grid, CSV and/or PGM.
std::filesystem::path run_mode_profile(const RunConfig& config,
                                       const RunContext& ctx);

// One recorded plane of a simulate run.
struct PlaneRecord {
  double z = 0.0;
  double norm = 0.0;
  double oam_hbar = 0.0;
  double angle = 0.0;      // orientation angle, rad
  double resultant = 0.0;
  double angle_rel = 0.0;  // unwrapped rotation since the first plane, rad
};

struct SimulationResult {
  std::filesystem::path run_dir;
  double z_k = 0.0;
  double z_df = 0.0;
  std::vector<PlaneRecord> planes;
  ComplexField final_field;
};

// `simulate`: truncated (or whole) mode from z_k to z_df with per-plane
// records, PGM images, CSV metadata and a checksummed manifest. With
// zk_list_um configured, one subdirectory per cut.
std::vector<SimulationResult> run_simulation(const RunConfig& config,
                                             const RunContext& ctx);

struct TrajectoryRunResult {
  std::filesystem::path run_dir;
  int complete = 0;
  int truncated = 0;
  double weighted_azimuth_gain = 0.0;  // density-weighted mean, rad
};

// `trajectories`: density-weighted deterministic streamline ensemble of the
// analytic mode flow, one CSV per trajectory plus a manifest.
TrajectoryRunResult run_trajectories(const RunConfig& config,
                                     const RunContext& ctx);

// `analyze`: reads a simulate manifest, emits theory-vs-simulation CSV and
// returns the RMS residual (radians) between measured and predicted
// rotation.
double run_analyze(const std::filesystem::path& manifest_path,
                   const std::filesystem::path& out_csv, std::ostream& report);

// `recipes`: figure-reproduction preset configs written into out_dir.
std::vector<std::filesystem::path> emit_figure_recipes(
    const std::filesystem::path& out_dir);

}  // namespace evb

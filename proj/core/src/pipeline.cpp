#include "evb/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "evb/bohmian.hpp"
#include "evb/constants.hpp"
#include "evb/errors.hpp"
#include "evb/version.hpp"

namespace evb {

namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDeg = 180.0 / kPi;

void log_line(const RunContext& ctx, const std::string& line) {
  if (ctx.log) ctx.log(line);
}

RotationModel model_from_string(const std::string& name) {
  if (name == "gouy") return RotationModel::GeneralizedGouy;
  if (name == "free-lg") return RotationModel::FreeLG;
  if (name == "landau") return RotationModel::LandauQuantized;
  throw ConfigError("unknown rotation model '" + name + "'");
}

double max_width_over(const PhysicalSetup& setup, double z_lo, double z_hi) {
  double w = 0.0;
  constexpr int kSamples = 512;
  for (int i = 0; i <= kSamples; ++i) {
    const double z = z_lo + (z_hi - z_lo) * i / kSamples;
    w = std::max(w, beam_width(setup, z));
  }
  return w;
}

// Grid side for a simulate run. Knife-edge truncation spreads energy across
// the whole transverse band, and in a magnetic field a component with
// wavenumber kperp swings out to radius ~ z_m kperp / k; size the grid so
// even Nyquist components turn around before the boundary.
double auto_extent(const PhysicalSetup& setup, const RunConfig& cfg,
                   double w_max) {
  double extent = cfg.extent_factor * w_max;
  if (cfg.truncate && setup.magnetic()) {
    const double c = kPi * cfg.grid * setup.z_m / setup.k;
    const double confinement = 4.0 * w_max +
                               std::sqrt(16.0 * w_max * w_max + 2.0 * c);
    extent = std::max(extent, confinement);
  }
  return extent;
}

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> v(count);
  for (int i = 0; i < count; ++i)
    v[i] = lo + (hi - lo) * i / double(count - 1);
  return v;
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create directory " + dir.string());
}

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  int col(const std::string& name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end())
      throw ConfigError("CSV column missing: " + name);
    return static_cast<int>(it - columns.begin());
  }
};

CsvTable read_csv(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open CSV: " + path.string());
  CsvTable table;
  std::string line;
  if (!std::getline(in, line))
    throw ConfigError("empty CSV: " + path.string());
  std::stringstream hs(line);
  std::string cell;
  while (std::getline(hs, cell, ',')) table.columns.push_back(cell);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ls(line);
    while (std::getline(ls, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        row.push_back(std::numeric_limits<double>::quiet_NaN());
      }
    }
    if (row.size() != table.columns.size())
      throw ConfigError("ragged CSV row in " + path.string());
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace

void run_params(const RunConfig& config, std::ostream& out) {
  const PhysicalSetup s = setup_from_config(config);
  out << "name,value,unit\n";
  const auto row = [&](const char* name, double v, const char* unit) {
    out << name << "," << format_double(v) << "," << unit << "\n";
  };
  row("field", s.B, "T");
  row("kinetic_energy", s.kinetic_energy, "J");
  row("kinetic_energy_kev", constants::joule_to_kev(s.kinetic_energy), "keV");
  row("waist", s.w0, "m");
  row("gamma", s.gamma, "1");
  row("speed", s.v, "m/s");
  row("beta", s.v / constants::speed_of_light, "1");
  row("wavenumber", s.k, "1/m");
  row("w_m", s.w_m, "m");
  row("z_m", s.z_m, "m");
  row("z_R", s.z_R, "m");
  row("z_L", s.z_L, "m");
  row("omega_L", s.omega_L, "rad/s");
  row("omega_c", s.omega_c, "rad/s");
}

std::filesystem::path run_rotation_curve(const RunConfig& config,
                                         const RunContext& ctx) {
  const PhysicalSetup s = setup_from_config(config);
  const ModeIndex mode = mode_from_config(config);
  const fs::path dir = config.out_dir;
  ensure_dir(dir);

  RunManifest manifest;
  manifest.version = kVersion;
  manifest.command = "rotation-curve";
  manifest.threads = ctx.threads;
  manifest.seed = ctx.seed;
  manifest.setup = s;
  manifest.mode = mode;

  fs::path csv_path;
  if (config.observable == "angle") {
    const RotationCurve curve = make_rotation_curve(
        s, mode, model_from_string(config.model), config.zdf_um * 1e-6,
        config.zk_range_lo_um * 1e-6, config.zk_range_hi_um * 1e-6,
        config.steps);
    csv_path = dir / "rotation_curve.csv";
    CsvWriter csv(csv_path, {"z_k_um", "angle_deg", "model"});
    for (const auto& sample : curve.samples)
      csv.row({format_double(sample.z_k * 1e6),
               format_double(sample.angle * kDeg),
               std::string(to_string(sample.model))});
  } else {
    // Normalized angular frequency with the quantized Landau levels as
    // constant reference columns.
    if (mode.ell == 0)
      throw DomainError("omega observable requires ell != 0");
    const ModeIndex plus{mode.n, mode.abs_ell()};
    const ModeIndex minus{mode.n, -mode.abs_ell()};
    csv_path = dir / "omega_curve.csv";
    CsvWriter csv(csv_path,
                  {"z_um", "z_over_zm", "omega_pos_over_omegaL",
                   "omega_neg_over_omegaL", "landau_cyclotron_over_omegaL",
                   "landau_larmor_over_omegaL", "landau_zero_over_omegaL"});
    const double scale = s.magnetic() ? s.omega_L : 1.0;
    for (const double z_um :
         linspace(config.zk_range_lo_um, config.zk_range_hi_um, config.steps)) {
      const double z = z_um * 1e-6;
      csv.row_values({z_um, s.magnetic() ? z / s.z_m : 0.0,
                      mean_angular_frequency(s, plus, z) / scale,
                      mean_angular_frequency(s, minus, z) / scale, 2.0, 1.0,
                      0.0});
    }
  }

  RunConfig echo = config;
  echo.command = "rotation-curve";
  write_config(echo, dir / "config_echo.cfg");
  manifest.config_echo = "config_echo.cfg";
  manifest.add_file(dir, csv_path.filename().string(), "curve-csv");
  manifest.add_file(dir, "config_echo.cfg", "config");
  manifest.write(dir / "manifest.json");
  log_line(ctx, "rotation-curve: wrote " + csv_path.string());
  return csv_path;
}

std::filesystem::path run_mode_profile(const RunConfig& config,
                                       const RunContext& ctx) {
  const PhysicalSetup s = setup_from_config(config);
  const ModeIndex mode = mode_from_config(config);
  const fs::path dir = config.out_dir;
  ensure_dir(dir);

  const double z = config.zk_um.value_or(0.0) * 1e-6;
  const double extent = config.extent_um
                            ? *config.extent_um * 1e-6
                            : config.extent_factor * beam_width(s, z);
  const ComplexField field = sample_mode(s, mode, config.grid, extent, z);

  RunManifest manifest;
  manifest.version = kVersion;
  manifest.command = "mode-profile";
  manifest.threads = ctx.threads;
  manifest.seed = ctx.seed;
  manifest.setup = s;
  manifest.mode = mode;

  fs::path primary;
  if (config.format_csv) {
    primary = dir / "profile.csv";
    CsvWriter csv(primary, {"x_um", "y_um", "intensity", "phase_rad"});
    for (int iy = 0; iy < field.ny(); ++iy)
      for (int ix = 0; ix < field.nx(); ++ix) {
        const auto v = field.at(ix, iy);
        csv.row_values({field.x(ix) * 1e6, field.y(iy) * 1e6, std::norm(v),
                        std::arg(v)});
      }
    manifest.add_file(dir, "profile.csv", "profile-csv");
  }
  if (config.format_pgm) {
    const fs::path img = dir / "intensity.pgm";
    write_field_pgm(field, img, config.pgm_gamma);
    manifest.add_file(dir, "intensity.pgm", "plane-image");
    if (primary.empty()) primary = img;
  }

  RunConfig echo = config;
  echo.command = "mode-profile";
  write_config(echo, dir / "config_echo.cfg");
  manifest.config_echo = "config_echo.cfg";
  manifest.add_file(dir, "config_echo.cfg", "config");
  manifest.write(dir / "manifest.json");
  log_line(ctx, "mode-profile: wrote " + primary.string());
  return primary;
}

namespace {

SimulationResult simulate_single(const RunConfig& config, const RunContext& ctx,
                                 const PhysicalSetup& s, const ModeIndex& mode,
                                 double z_k, const fs::path& dir) {
  ensure_dir(dir);
  const double z_df = config.zdf_um * 1e-6;
  if (!(z_df > z_k))
    throw ConfigError("simulate: zdf_um must lie downstream of zk_um");

  const double w_max = max_width_over(s, z_k, z_df);
  const double extent = config.extent_um ? *config.extent_um * 1e-6
                                         : auto_extent(s, config, w_max);

  PropagationPlan plan;
  plan.setup = s;
  plan.z_start = z_k;
  plan.z_end = z_df;
  plan.dz = s.magnetic() ? kPi * s.z_m / config.dz_frac
                         : (z_df - z_k) / config.dz_frac;
  plan.cheb_tol = config.cheb_tol;
  plan.max_terms = config.cheb_max_terms;
  plan.bandwidth_tol = config.bandwidth_tol;
  // The smooth mode is bandwidth-checked here, before the knife edge; the
  // truncated state is not band-limited by construction.
  plan.check_bandwidth = false;

  ComplexField field = sample_mode(s, mode, config.grid, extent, z_k);
  field.normalize();
  {
    const double tail = spectral_tail_fraction(field);
    if (tail > config.bandwidth_tol) {
      std::ostringstream msg;
      msg << "simulate: mode spectral tail " << tail
          << " exceeds bandwidth_tol " << config.bandwidth_tol
          << "; refine the grid or reduce the extent";
      throw BandwidthError(msg.str());
    }
  }
  if (config.truncate) field = truncate_half_plane(field);

  ChebyshevPropagator prop(plan, field.nx(), field.ny(), field.dx(),
                           field.dy());
  SpectralWorkspace oam_ws(field.nx(), field.ny(), field.dx(), field.dy());

  SimulationResult result{dir, z_k, z_df, {}, field};
  std::vector<PatternOrientation> orientations;
  const std::vector<double> planes = linspace(z_k, z_df, config.planes);
  int plane_index = 0;

  RunManifest manifest;
  manifest.version = kVersion;
  manifest.command = "simulate";
  manifest.threads = ctx.threads;
  manifest.seed = ctx.seed;
  manifest.setup = s;
  manifest.mode = mode;

  prop.propagate_observed(field, planes, [&](const ComplexField& f) {
    PlaneRecord rec;
    rec.z = f.z();
    rec.norm = f.norm();
    rec.oam_hbar = oam_expectation_hbar(f, oam_ws);
    const PatternOrientation o = orientation_angle(f);
    rec.angle = o.angle;
    rec.resultant = o.resultant;
    orientations.push_back(o);
    result.planes.push_back(rec);
    if (config.format_pgm) {
      char name[32];
      std::snprintf(name, sizeof(name), "plane_%03d.pgm", plane_index);
      const double z_um = f.z() * 1e6;
      write_field_pgm(f, dir / name, config.pgm_gamma);
      manifest.add_file(dir, name, "plane-image", &z_um);
    }
    if (plane_index + 1 == config.planes) result.final_field = f;
    ++plane_index;
    log_line(ctx, "simulate: plane " + std::to_string(plane_index) + "/" +
                      std::to_string(config.planes) + " done (z = " +
                      std::to_string(f.z() * 1e6) + " um)");
  });

  // Unwrapped rotation relative to the cut plane; meaningless for whole
  // (cylindrically symmetric) beams.
  if (config.truncate) {
    const RotationCurve measured = rotation_from_orientations(orientations);
    for (std::size_t i = 0; i < result.planes.size(); ++i)
      result.planes[i].angle_rel = measured.samples[i].angle;
  } else {
    for (auto& rec : result.planes)
      rec.angle_rel = std::numeric_limits<double>::quiet_NaN();
  }

  if (config.format_csv || true) {  // planes.csv is the run record; always on
    CsvWriter csv(dir / "planes.csv",
                  {"z_um", "norm", "oam_mean_hbar", "angle_deg", "resultant",
                   "angle_rel_first_deg"});
    for (const auto& rec : result.planes)
      csv.row_values({rec.z * 1e6, rec.norm, rec.oam_hbar, rec.angle * kDeg,
                      rec.resultant, rec.angle_rel * kDeg});
    manifest.add_file(dir, "planes.csv", "planes-csv");
  }

  RunConfig echo = config;
  echo.command = "simulate";
  echo.zk_um = z_k * 1e6;
  echo.zk_list_um.clear();
  echo.extent_um = extent * 1e6;  // pin the derived extent for re-runs
  write_config(echo, dir / "config_echo.cfg");
  manifest.config_echo = "config_echo.cfg";
  manifest.add_file(dir, "config_echo.cfg", "config");
  manifest.write(dir / "manifest.json");
  return result;
}

}  // namespace

std::vector<SimulationResult> run_simulation(const RunConfig& config,
                                             const RunContext& ctx) {
  const PhysicalSetup s = setup_from_config(config);
  const ModeIndex mode = mode_from_config(config);
  validate(mode);

  std::vector<double> cuts_um = config.zk_list_um;
  if (cuts_um.empty()) {
    if (!config.zk_um)
      throw ConfigError("simulate: zk_um (or zk_list_um) is required");
    cuts_um.push_back(*config.zk_um);
  }

  std::vector<SimulationResult> results;
  const fs::path base = config.out_dir;
  for (std::size_t i = 0; i < cuts_um.size(); ++i) {
    fs::path dir = base;
    if (cuts_um.size() > 1) {
      char sub[16];
      std::snprintf(sub, sizeof(sub), "cut_%02zu", i);
      dir = base / sub;
    }
    log_line(ctx, "simulate: cut " + std::to_string(i + 1) + "/" +
                      std::to_string(cuts_um.size()) + " at z_k = " +
                      std::to_string(cuts_um[i]) + " um");
    results.push_back(
        simulate_single(config, ctx, s, mode, cuts_um[i] * 1e-6, dir));
  }
  return results;
}

TrajectoryRunResult run_trajectories(const RunConfig& config,
                                     const RunContext& ctx) {
  const PhysicalSetup s = setup_from_config(config);
  const ModeIndex mode = mode_from_config(config);
  validate(mode);
  const fs::path dir = config.out_dir;
  ensure_dir(dir);

  if (!config.zk_um)
    throw ConfigError("trajectories: zk_um (start plane) is required");
  const double z0 = *config.zk_um * 1e-6;
  const double z1 = config.zdf_um * 1e-6;
  if (!(z1 > z0)) throw ConfigError("trajectories: need zdf_um > zk_um");

  const int n_angles = std::min(4, config.traj_count);
  const int n_radii = std::max(1, (config.traj_count + n_angles - 1) / n_angles);
  const auto starts = density_weighted_starts(s, mode, z0, n_radii, n_angles);

  const AnalyticModeFlow flow(s, mode);
  RunManifest manifest;
  manifest.version = kVersion;
  manifest.command = "trajectories";
  manifest.threads = ctx.threads;
  manifest.seed = ctx.seed;
  manifest.setup = s;
  manifest.mode = mode;

  TrajectoryRunResult result;
  result.run_dir = dir;
  CsvWriter summary(dir / "trajectories.csv",
                    {"index", "x0_um", "y0_um", "weight", "status",
                     "azimuth_gain_rad"});
  double weight_total = 0.0;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    const auto& start = starts[i];
    const Trajectory traj =
        integrate_trajectory(flow, s, start.x, start.y, z0, z1,
                             config.traj_tol);
    char name[32];
    std::snprintf(name, sizeof(name), "traj_%03zu.csv", i);
    {
      CsvWriter csv(dir / name, {"x_um", "y_um", "z_um", "azimuth_rad"});
      for (const auto& p : traj.points)
        csv.row_values({p.x * 1e6, p.y * 1e6, p.z * 1e6, p.azimuth});
    }
    manifest.add_file(dir, name, "trajectory-csv");
    const bool complete = traj.status == TrajectoryStatus::Complete;
    const double gain =
        traj.points.back().azimuth - traj.points.front().azimuth;
    if (complete) {
      result.complete += 1;
      result.weighted_azimuth_gain += start.weight * gain;
      weight_total += start.weight;
    } else {
      result.truncated += 1;
    }
    summary.row({std::to_string(i), format_double(start.x * 1e6),
                 format_double(start.y * 1e6), format_double(start.weight),
                 complete ? "complete" : "truncated-near-node",
                 format_double(gain)});
  }
  if (weight_total > 0.0) result.weighted_azimuth_gain /= weight_total;
  manifest.add_file(dir, "trajectories.csv", "trajectory-summary");

  RunConfig echo = config;
  echo.command = "trajectories";
  write_config(echo, dir / "config_echo.cfg");
  manifest.config_echo = "config_echo.cfg";
  manifest.add_file(dir, "config_echo.cfg", "config");
  manifest.write(dir / "manifest.json");
  log_line(ctx, "trajectories: " + std::to_string(result.complete) +
                    " complete, " + std::to_string(result.truncated) +
                    " truncated");
  return result;
}

double run_analyze(const std::filesystem::path& manifest_path,
                   const std::filesystem::path& out_csv, std::ostream& report) {
  const RunManifest manifest = RunManifest::load(manifest_path);
  const fs::path run_dir = manifest_path.parent_path();

  // Integrity first: every listed file must match its checksum.
  for (const auto& e : manifest.entries) {
    const fs::path p = run_dir / e.path;
    if (!fs::exists(p))
      throw ConfigError("analyze: missing run file " + p.string());
    if (crc32_of_file(p) != e.crc32)
      throw ConfigError("analyze: checksum mismatch for " + p.string());
  }

  const auto planes_entry =
      std::find_if(manifest.entries.begin(), manifest.entries.end(),
                   [](const ManifestEntry& e) { return e.role == "planes-csv"; });
  if (planes_entry == manifest.entries.end())
    throw ConfigError("analyze: manifest lists no planes-csv (not a simulate run?)");
  const CsvTable table = read_csv(run_dir / planes_entry->path);

  const int col_z = table.col("z_um");
  const int col_angle = table.col("angle_rel_first_deg");
  const int col_res = table.col("resultant");
  const int col_oam = table.col("oam_mean_hbar");
  if (table.rows.empty()) throw ConfigError("analyze: planes.csv has no rows");

  if (manifest.mode.ell == 0)
    throw DomainError("analyze: rotation comparison requires ell != 0");

  const double z_k = table.rows.front()[col_z] * 1e-6;
  CsvWriter csv(out_csv, {"z_um", "angle_deg", "resultant", "oam_mean",
                          "theory_deg", "residual_deg"});
  double sq_sum = 0.0;
  int count = 0;
  report << "z_um        measured_deg   theory_deg    residual_deg\n";
  for (const auto& row : table.rows) {
    const double z = row[col_z] * 1e-6;
    const double measured = row[col_angle];
    // Pattern rotation from the cut plane to z is the negative knife-edge
    // angle difference evaluated with the observation plane at z.
    const double theory =
        -knife_edge_rotation(manifest.setup, manifest.mode, z_k, z) * kDeg;
    const double residual = measured - theory;
    csv.row_values(
        {row[col_z], measured, row[col_res], row[col_oam], theory, residual});
    if (std::isfinite(residual)) {
      sq_sum += residual * residual;
      ++count;
    }
    char line[96];
    std::snprintf(line, sizeof(line), "%-12.4f %-14.6f %-13.6f %-12.6f",
                  row[col_z], measured, theory, residual);
    report << line << "\n";
  }
  const double rms_deg = count > 0 ? std::sqrt(sq_sum / count) : 0.0;
  report << "RMS residual: " << rms_deg << " deg over " << count
         << " planes\n";
  return rms_deg / kDeg;
}

std::vector<std::filesystem::path> emit_figure_recipes(
    const std::filesystem::path& out_dir) {
  ensure_dir(out_dir);
  namespace c = constants;
  const PhysicalSetup ref =
      derive_setup(1.9, c::kev_to_joule(200.0), 30e-9);  // z_m only
  const double zm_um = ref.z_m * 1e6;

  std::vector<fs::path> written;
  const auto emit = [&](const std::string& name, const RunConfig& cfg) {
    const fs::path p = out_dir / (name + ".cfg");
    write_config(cfg, p);
    written.push_back(p);
  };

  const auto base = [&](int n, int ell) {
    RunConfig cfg;
    cfg.field_tesla = 1.9;
    cfg.energy_kev = 200.0;
    cfg.n = n;
    cfg.ell = ell;
    return cfg;
  };

  {
    // Normalized <omega>/omega_L over one width period with z_m = 4 z_R,
    // plus the three quantized Landau levels.
    RunConfig cfg = base(0, 1);
    cfg.rayleigh_um = zm_um / 4.0;
    cfg.command = "rotation-curve";
    cfg.observable = "omega";
    cfg.zk_range_lo_um = -kPi * zm_um;
    cfg.zk_range_hi_um = 0.0;
    cfg.steps = 1024;
    cfg.out_dir = "fig2";
    emit("fig2", cfg);
  }

  for (const int ell : {1, -1, 3, -3}) {
    // Experimental window: z_R = 1.46 um for |ell| = 1, 2.84 um for
    // |ell| = 3, observation plane 9 um upstream of focus.
    RunConfig cfg = base(0, ell);
    cfg.rayleigh_um = std::abs(ell) == 1 ? 1.46 : 2.84;
    cfg.command = "rotation-curve";
    cfg.observable = "angle";
    cfg.model = "gouy";
    cfg.zdf_um = -9.0;
    cfg.zk_range_lo_um = -350.0;
    cfg.zk_range_hi_um = -20.0;
    cfg.steps = 331;
    cfg.out_dir = std::string("fig3_ell_") + (ell > 0 ? "p" : "m") +
                  std::to_string(std::abs(ell));
    emit(cfg.out_dir, cfg);
  }

  for (const int ell : {-3, -1, 1, 3}) {
    // Experimental-regime cuts; heavy on memory, not an acceptance gate.
    RunConfig cfg = base(0, ell);
    cfg.rayleigh_um = std::abs(ell) == 1 ? 1.46 : 2.84;
    cfg.command = "simulate";
    cfg.zdf_um = -9.0;
    cfg.zk_list_um = {-20.0, -50.0, -80.0, -100.0, -350.0};
    cfg.grid = 2048;
    cfg.planes = 33;
    cfg.dz_frac = 64.0;
    cfg.out_dir = std::string("fig4_ell_") + (ell > 0 ? "p" : "m") +
                  std::to_string(std::abs(ell));
    emit(cfg.out_dir, cfg);
  }

  for (const int ell : {3, -3}) {
    // Wide sweep down to -2 pi z_m where the generalized curve separates
    // from the free-LG effective model.
    RunConfig cfg = base(0, ell);
    cfg.rayleigh_um = 2.84;
    cfg.command = "rotation-curve";
    cfg.observable = "angle";
    cfg.model = "gouy";
    cfg.zdf_um = -9.0;
    cfg.zk_range_lo_um = -2.0 * kPi * zm_um;
    cfg.zk_range_hi_um = 0.0;
    cfg.steps = 2048;
    cfg.out_dir = std::string("fig5_ell_") + (ell > 0 ? "p" : "m") +
                  std::to_string(std::abs(ell));
    emit(cfg.out_dir, cfg);
  }

  for (const int ell : {3, -3}) {
    // Desk-scale regime: z_R = 1000 um, quarter-period cuts, observation at
    // the focus.
    RunConfig cfg = base(0, ell);
    cfg.rayleigh_um = 1000.0;
    cfg.command = "simulate";
    cfg.zdf_um = 0.0;
    cfg.zk_list_um = {-kPi * zm_um / 4.0, -kPi * zm_um / 2.0,
                      -3.0 * kPi * zm_um / 4.0, -kPi * zm_um};
    cfg.grid = 512;
    cfg.planes = 65;
    cfg.dz_frac = 64.0;
    cfg.out_dir = std::string("fig6_ell_") + (ell > 0 ? "p" : "m") +
                  std::to_string(std::abs(ell));
    emit(cfg.out_dir, cfg);
  }

  return written;
}

}  // namespace evb

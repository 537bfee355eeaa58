#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "evb/field.hpp"

namespace evb {

// Doubles serialized with 17 significant digits so CSV round-trips are
// lossless.
std::string format_double(double v);

// Minimal CSV emitter; all floats go through format_double.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path,
            const std::vector<std::string>& columns);
  void row(const std::vector<std::string>& cells);
  void row_values(const std::vector<double>& values);
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  std::ofstream out_;
  std::size_t n_cols_;
};

// 16-bit binary NetPBM (P5, big-endian, maxval 65535) of |Phi|^2,
// max-normalized; display gamma applied as (rho/rho_max)^gamma.
void write_field_pgm(const ComplexField& field,
                     const std::filesystem::path& path, double gamma = 1.0);

uint32_t crc32_of_file(const std::filesystem::path& path);

struct ManifestEntry {
  std::string path;  // relative to the run directory
  std::string role;  // "plane-image", "planes-csv", ...
  double z_um = 0.0;
  bool has_z = false;
  std::uint64_t bytes = 0;
  std::uint32_t crc32 = 0;
};

// Everything needed to re-run and verify a run bit-for-bit: echoed config,
// derived setup, software version, thread count, seed, per-file checksums.
struct RunManifest {
  std::string version;
  std::string command;
  int threads = 1;
  std::uint64_t seed = 0;
  std::string config_echo;  // relative path of the echoed config file
  PhysicalSetup setup;
  ModeIndex mode;
  std::vector<ManifestEntry> entries;

  void add_file(const std::filesystem::path& run_dir, const std::string& rel,
                const std::string& role, const double* z_um = nullptr);
  void write(const std::filesystem::path& path) const;
  static RunManifest load(const std::filesystem::path& path);
};

}  // namespace evb

#include "evb/io.hpp"

#include <zlib.h>

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "evb/errors.hpp"
#include "evb/version.hpp"

namespace evb {

namespace fs = std::filesystem;
using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

CsvWriter::CsvWriter(const fs::path& path,
                     const std::vector<std::string>& columns)
    : path_(path), out_(path, std::ios::binary), n_cols_(columns.size()) {
  if (!out_) throw ConfigError("cannot open for writing: " + path.string());
  for (std::size_t i = 0; i < columns.size(); ++i)
    out_ << columns[i] << (i + 1 < columns.size() ? "," : "\n");
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != n_cols_)
    throw ConfigError("CsvWriter: column count mismatch in " + path_.string());
  for (std::size_t i = 0; i < cells.size(); ++i)
    out_ << cells[i] << (i + 1 < cells.size() ? "," : "\n");
  if (!out_) throw ConfigError("write failure: " + path_.string());
}

void CsvWriter::row_values(const std::vector<double>& values) {
  std::vector<std::string> cells;
  cells.reserve(values.size());
  for (double v : values) cells.push_back(format_double(v));
  row(cells);
}

void write_field_pgm(const ComplexField& field, const fs::path& path,
                     double gamma) {
  if (!(gamma > 0.0)) throw DomainError("write_field_pgm: gamma must be > 0");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open for writing: " + path.string());
  out << "P5\n" << field.nx() << " " << field.ny() << "\n65535\n";
  const double peak = field.max_intensity();
  const double inv_peak = peak > 0.0 ? 1.0 / peak : 0.0;
  std::vector<unsigned char> row(static_cast<std::size_t>(field.nx()) * 2);
  // Image rows top-to-bottom correspond to decreasing y.
  for (int iy = field.ny() - 1; iy >= 0; --iy) {
    for (int ix = 0; ix < field.nx(); ++ix) {
      double v = std::norm(field.at(ix, iy)) * inv_peak;
      if (gamma != 1.0) v = std::pow(v, gamma);
      const auto q = static_cast<unsigned>(std::lround(v * 65535.0));
      row[2 * ix] = static_cast<unsigned char>(q >> 8);  // big-endian
      row[2 * ix + 1] = static_cast<unsigned char>(q & 0xff);
    }
    out.write(reinterpret_cast<const char*>(row.data()),
              static_cast<std::streamsize>(row.size()));
  }
  if (!out) throw ConfigError("write failure: " + path.string());
}

uint32_t crc32_of_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open for reading: " + path.string());
  uLong crc = crc32(0L, Z_NULL, 0);
  char buf[1 << 16];
  while (in) {
    in.read(buf, sizeof(buf));
    const std::streamsize got = in.gcount();
    if (got > 0)
      crc = crc32(crc, reinterpret_cast<const Bytef*>(buf),
                  static_cast<uInt>(got));
  }
  return static_cast<uint32_t>(crc);
}

void RunManifest::add_file(const fs::path& run_dir, const std::string& rel,
                           const std::string& role, const double* z_um) {
  ManifestEntry e;
  e.path = rel;
  e.role = role;
  if (z_um) {
    e.z_um = *z_um;
    e.has_z = true;
  }
  const fs::path full = run_dir / rel;
  e.bytes = fs::file_size(full);
  e.crc32 = crc32_of_file(full);
  entries.push_back(std::move(e));
}

namespace {

json setup_to_json(const PhysicalSetup& s) {
  return json{{"field_tesla", s.B},
              {"kinetic_energy_joule", s.kinetic_energy},
              {"waist_m", s.w0},
              {"gamma", s.gamma},
              {"speed_m_per_s", s.v},
              {"wavenumber_per_m", s.k},
              {"w_m_m", s.w_m},
              {"z_m_m", s.z_m},
              {"z_R_m", s.z_R},
              {"z_L_m", s.z_L},
              {"omega_L_rad_per_s", s.omega_L},
              {"omega_c_rad_per_s", s.omega_c}};
}

PhysicalSetup setup_from_json(const json& j) {
  PhysicalSetup s;
  s.B = j.at("field_tesla").get<double>();
  s.kinetic_energy = j.at("kinetic_energy_joule").get<double>();
  s.w0 = j.at("waist_m").get<double>();
  s.gamma = j.at("gamma").get<double>();
  s.v = j.at("speed_m_per_s").get<double>();
  s.k = j.at("wavenumber_per_m").get<double>();
  s.w_m = j.at("w_m_m").get<double>();
  s.z_m = j.at("z_m_m").get<double>();
  s.z_R = j.at("z_R_m").get<double>();
  s.z_L = j.at("z_L_m").get<double>();
  s.omega_L = j.at("omega_L_rad_per_s").get<double>();
  s.omega_c = j.at("omega_c_rad_per_s").get<double>();
  return s;
}

}  // namespace

void RunManifest::write(const fs::path& path) const {
  json j;
  j["version"] = version;
  j["command"] = command;
  j["threads"] = threads;
  j["seed"] = seed;
  j["config_echo"] = config_echo;
  j["setup"] = setup_to_json(setup);
  j["mode"] = json{{"n", mode.n}, {"ell", mode.ell}};
  json files = json::array();
  for (const auto& e : entries) {
    json fe{{"path", e.path},
            {"role", e.role},
            {"bytes", e.bytes},
            {"crc32", e.crc32}};
    if (e.has_z) fe["z_um"] = e.z_um;
    files.push_back(std::move(fe));
  }
  j["files"] = std::move(files);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open for writing: " + path.string());
  out << j.dump(2) << "\n";
  if (!out) throw ConfigError("write failure: " + path.string());
}

RunManifest RunManifest::load(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open manifest: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("manifest parse error in " + path.string() + ": " +
                      e.what());
  }
  RunManifest m;
  try {
    m.version = j.at("version").get<std::string>();
    m.command = j.at("command").get<std::string>();
    m.threads = j.at("threads").get<int>();
    m.seed = j.at("seed").get<std::uint64_t>();
    m.config_echo = j.at("config_echo").get<std::string>();
    m.setup = setup_from_json(j.at("setup"));
    m.mode.n = j.at("mode").at("n").get<int>();
    m.mode.ell = j.at("mode").at("ell").get<int>();
    for (const auto& fe : j.at("files")) {
      ManifestEntry e;
      e.path = fe.at("path").get<std::string>();
      e.role = fe.at("role").get<std::string>();
      e.bytes = fe.at("bytes").get<std::uint64_t>();
      e.crc32 = fe.at("crc32").get<std::uint32_t>();
      if (fe.contains("z_um")) {
        e.z_um = fe.at("z_um").get<double>();
        e.has_z = true;
      }
      m.entries.push_back(std::move(e));
    }
  } catch (const json::exception& e) {
    throw ConfigError("manifest field error in " + path.string() + ": " +
                      e.what());
  }
  return m;
}

}  // namespace evb

#include "evb/theory.hpp"

#include <cmath>

#include "evb/constants.hpp"
#include "evb/errors.hpp"
#include "evb/special.hpp"

namespace evb {

namespace {

void require_vortex(const ModeIndex& mode, const char* op) {
  validate(mode);
  if (mode.ell == 0)
    throw DomainError(std::string(op) + ": defined for ell != 0 only");
}

}  // namespace

std::string_view to_string(RotationModel model) {
  switch (model) {
    case RotationModel::GeneralizedGouy: return "gouy";
    case RotationModel::FreeLG: return "free-lg";
    case RotationModel::LandauQuantized: return "landau";
    case RotationModel::Simulated: return "simulated";
  }
  return "unknown";
}

double mean_angular_frequency(const PhysicalSetup& s, const ModeIndex& mode,
                              double z) {
  require_vortex(mode, "mean_angular_frequency");
  const double w = beam_width(s, z);
  if (!s.magnetic())
    return mode.sign_ell() * 2.0 * constants::hbar / (s.mass() * w * w);
  return s.omega_L * (mode.sign_ell() * (s.w_m * s.w_m) / (w * w) + 1.0);
}

double bohmian_rotation_angle(const PhysicalSetup& s, const ModeIndex& mode,
                              double z) {
  require_vortex(mode, "bohmian_rotation_angle");
  if (!s.magnetic()) return mode.sign_ell() * std::atan(z / s.z_R);
  return mode.sign_ell() * wrapped_arctan(s.z_m / s.z_R, z / s.z_m) + z / s.z_m;
}

double knife_edge_rotation(const PhysicalSetup& s, const ModeIndex& mode,
                           double z_k, double z_df) {
  return bohmian_rotation_angle(s, mode, z_k) -
         bohmian_rotation_angle(s, mode, z_df);
}

double free_lg_rotation(const PhysicalSetup& s, const ModeIndex& mode,
                        double z_k, double z_df) {
  require_vortex(mode, "free_lg_rotation");
  const double gouy_part =
      mode.sign_ell() * (std::atan(z_k / s.z_R) - std::atan(z_df / s.z_R));
  if (!s.magnetic()) return gouy_part;
  return gouy_part + (z_k - z_df) / s.z_m;
}

double landau_frequency(const PhysicalSetup& s, const ModeIndex& mode) {
  validate(mode);
  return (mode.sign_ell() + 1.0) * s.omega_L;
}

RotationCurve make_rotation_curve(const PhysicalSetup& s, const ModeIndex& mode,
                                  RotationModel model, double z_df,
                                  double zk_lo, double zk_hi, int steps) {
  if (steps < 2) throw DomainError("make_rotation_curve: steps must be >= 2");
  if (!(zk_hi > zk_lo))
    throw DomainError("make_rotation_curve: need zk_hi > zk_lo");
  RotationCurve curve;
  curve.setup = s;
  curve.mode = mode;
  curve.z_df = z_df;
  curve.model = model;
  curve.samples.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    const double z_k = zk_lo + (zk_hi - zk_lo) * i / (steps - 1.0);
    double angle = 0.0;
    switch (model) {
      case RotationModel::GeneralizedGouy:
        angle = knife_edge_rotation(s, mode, z_k, z_df);
        break;
      case RotationModel::FreeLG:
        angle = free_lg_rotation(s, mode, z_k, z_df);
        break;
      case RotationModel::LandauQuantized:
        angle = landau_frequency(s, mode) * (z_k - z_df) / s.v;
        break;
      case RotationModel::Simulated:
        throw DomainError("make_rotation_curve: Simulated is a measured tag");
    }
    curve.samples.push_back({z_k, angle, model});
  }
  return curve;
}

}  // namespace evb

#pragma once

#include <string_view>
#include <vector>

#include "evb/modes.hpp"
#include "evb/params.hpp"

namespace evb {

enum class RotationModel {
  GeneralizedGouy,  // paraxial-Landau-mode Gouy rotation
  FreeLG,           // free Laguerre-Gauss width substituted into the same rate
  LandauQuantized,  // fixed (sgn(ell)+1) omega_L drift
  Simulated,        // measured from propagated snapshots
};

std::string_view to_string(RotationModel model);

struct RotationSample {
  double z_k;    // knife-edge position, m
  double angle;  // rotation angle, rad
  RotationModel model;
};

struct RotationCurve {
  PhysicalSetup setup;
  ModeIndex mode;
  double z_df = 0.0;  // observation-plane defocus, m
  RotationModel model = RotationModel::GeneralizedGouy;
  std::vector<RotationSample> samples;  // sorted by z_k
};

// Expectation angular frequency <omega>(z) = omega_L (sgn(l) w_m^2/w^2 + 1);
// free-space branch sgn(l) 2 hbar / (m w^2). Requires ell != 0.
double mean_angular_frequency(const PhysicalSetup& setup, const ModeIndex& mode,
                              double z);

// Bohmian rotation angle <phi>(z), zero at the focus, continuous branch.
double bohmian_rotation_angle(const PhysicalSetup& setup, const ModeIndex& mode,
                              double z);

// Knife-edge rotation Delta<phi> = <phi>(z_k) - <phi>(z_df).
double knife_edge_rotation(const PhysicalSetup& setup, const ModeIndex& mode,
                           double z_k, double z_df);

// Effective model with the free-LG width: sgn(l)[arctan(z_k/z_R) -
// arctan(z_df/z_R)] + (z_k - z_df)/z_m.
double free_lg_rotation(const PhysicalSetup& setup, const ModeIndex& mode,
                        double z_k, double z_df);

// Quantized Landau-state frequency (sgn(ell)+1) omega_L: cyclotron for
// ell > 0, Larmor for ell = 0, zero for ell < 0.
double landau_frequency(const PhysicalSetup& setup, const ModeIndex& mode);

// Sampled curve of the chosen model over z_k in [zk_lo, zk_hi].
RotationCurve make_rotation_curve(const PhysicalSetup& setup,
                                  const ModeIndex& mode, RotationModel model,
                                  double z_df, double zk_lo, double zk_hi,
                                  int steps);

}  // namespace evb

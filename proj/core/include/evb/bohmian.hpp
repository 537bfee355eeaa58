#pragma once

#include <array>
#include <memory>
#include <vector>

#include "evb/field.hpp"
#include "evb/modes.hpp"
#include "evb/params.hpp"

namespace evb {

// Local Bohmian angular frequency omega(r) = hbar ell / (m r^2) + omega_L.
// r > 0; the probability current is singular on the vortex core.
double local_angular_frequency(const PhysicalSetup& setup,
                               const ModeIndex& mode, double r);

// Velocity sampler v = j / rho. Throws NodeProximityError when the local
// density falls below the node floor (1e-12 of the in-plane maximum).
class FlowField {
 public:
  virtual ~FlowField() = default;
  // (v_x, v_y, v_z) in m/s.
  virtual std::array<double, 3> velocity(double x, double y,
                                         double z) const = 0;
};

// Closed-form flow of a pure paraxial Landau mode:
//   v_r = v r / R(z),  v_phi = hbar ell / (m r) + omega_L r,  v_z = hbar k/m.
class AnalyticModeFlow : public FlowField {
 public:
  AnalyticModeFlow(const PhysicalSetup& setup, const ModeIndex& mode);

  std::array<double, 3> velocity(double x, double y, double z) const override;

  // Density relative to the in-plane maximum (z-independent profile).
  double relative_density(double x, double y, double z) const;

  // Radius of the n = 0 intensity ridge at z: w(z) sqrt(|ell|/2).
  double ridge_radius(double z) const;

  // Same flow with the magnetic field direction reversed, which maps
  // trajectories to their (x, y) -> (x, -y) mirror images together with
  // ell -> -ell. Exists for symmetry checks.
  AnalyticModeFlow reversed_field() const;

  const PhysicalSetup& setup() const { return setup_; }
  const ModeIndex& mode() const { return mode_; }

 private:
  PhysicalSetup setup_;
  ModeIndex mode_;
  double omega_L_signed_;
  int ell_signed_;
  double density_floor_rel_ = 1e-12;
  double peak_profile_;  // max over t of the scale-invariant radial profile
};

// Single-plane sampler for a gridded wavefunction: spectral gradients of the
// field are taken once at construction, then interpolated bilinearly. Valid
// only at the field's own z plane.
class GriddedPlaneFlow : public FlowField {
 public:
  GriddedPlaneFlow(const PhysicalSetup& setup, const ComplexField& field);

  std::array<double, 3> velocity(double x, double y, double z) const override;

 private:
  PhysicalSetup setup_;
  ComplexField rho_;   // |psi|^2 stored in the real part
  ComplexField jx_;    // hbar Im(psi* dpsi/dx) / m, before the gauge term
  ComplexField jy_;
  double z0_;
  double rho_floor_;
};

enum class TrajectoryStatus { Complete, TruncatedNearNode };

struct TrajectoryPoint {
  double x, y, z;
  double azimuth;  // continuously accumulated (unwrapped) azimuth, rad
};

struct Trajectory {
  std::vector<TrajectoryPoint> points;
  TrajectoryStatus status = TrajectoryStatus::Complete;
};

// Integrate dx/dz = v_x/v_z, dy/dz = v_y/v_z with adaptive Dormand-Prince
// 4(5) stepping, local error <= tol (relative, with a w0-scaled absolute
// floor). The azimuth is accumulated as a third state variable, so it is
// unwrapped by construction. Node encounters truncate the trajectory and
// set the status flag.
Trajectory integrate_trajectory(const FlowField& flow,
                                const PhysicalSetup& setup, double x0,
                                double y0, double z0, double z1, double tol);

// Deterministic density-weighted start ensemble for a pure mode at z0:
// radii at Gauss-Legendre nodes weighted by the radial density, a uniform
// fan of start angles at each radius. weight sums to 1.
struct WeightedStart {
  double x, y;
  double weight;
};
std::vector<WeightedStart> density_weighted_starts(const PhysicalSetup& setup,
                                                   const ModeIndex& mode,
                                                   double z0, int n_radii,
                                                   int n_angles);

}  // namespace evb

#pragma once

#include <complex>

#include "evb/params.hpp"

namespace evb {

// Radial quantum number n >= 0 and topological charge ell (signed).
struct ModeIndex {
  int n = 0;
  int ell = 0;

  // Principal number N = 2n + |ell| + 1 >= 1.
  int principal() const;
  int abs_ell() const;
  // sgn(ell): -1, 0, +1.
  int sign_ell() const;
};

void validate(const ModeIndex& mode);

// Beam parameter functions at axial position z (z = 0 is the focus, where
// w'(0) = 0).
struct ModeFrame {
  double w;     // beam width, m
  double R;     // wavefront curvature radius, m; +-infinity where flat
  double gouy;  // Gouy phase, rad (continuous branch)
  double z;     // m
};

// w(z) = w0 sqrt(cos^2(z/z_m) + (z_m/z_R)^2 sin^2(z/z_m)); free-space branch
// w0 sqrt(1 + z^2/z_R^2) when B = 0. Periodic with period pi z_m.
double beam_width(const PhysicalSetup& setup, double z);

// Curvature radius; returns signed infinity where the wavefront is flat
// (z = j pi z_m / 2, or everywhere when w0 = w_m). Not an error.
double curvature_radius(const PhysicalSetup& setup, double z);

// 1/R(z); finite everywhere, preferred inside evaluators.
double inverse_curvature(const PhysicalSetup& setup, double z);

// Gouy phase N [arctan((z_m/z_R) tan(z/z_m)) + pi floor(z/(pi z_m) + 1/2)]
// + ell z / z_m, continuous over (-inf, inf); N arctan(z/z_R) when B = 0.
double gouy_phase(const PhysicalSetup& setup, const ModeIndex& mode, double z);

// d(gouy_phase)/dz, analytic.
double gouy_phase_derivative(const PhysicalSetup& setup, const ModeIndex& mode,
                             double z);

ModeFrame mode_frame(const PhysicalSetup& setup, const ModeIndex& mode,
                     double z);

// Normalization constant C_nl = sqrt(2 n! / (pi (n+|l|)!)), evaluated in
// log space so large |ell| cannot overflow the factorial ratio.
double mode_norm_constant(const ModeIndex& mode);

// Paraxial Landau mode Psi_nl(x, y, z): unit L2 norm over the transverse
// plane, phase exp(i(ell phi + k r^2 / 2R - Phi_G)).
std::complex<double> evaluate_mode(const PhysicalSetup& setup,
                                   const ModeIndex& mode, double x, double y,
                                   double z);

}  // namespace evb

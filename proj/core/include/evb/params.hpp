#pragma once

#include <string>

namespace evb {

// Laboratory inputs plus every derived physical scale, SI units throughout.
// Immutable after derivation and safe to share across threads.
//
// For the free-space branch (B == 0) the magnetic scales w_m, z_m, z_L are
// +infinity and omega_L = omega_c = 0; all formulas downstream branch on
// magnetic().
struct PhysicalSetup {
  double B = 0.0;               // magnetic flux density, T (field along +z)
  double kinetic_energy = 0.0;  // J
  double w0 = 0.0;              // beam waist at focus, m

  double gamma = 1.0;    // Lorentz factor
  double v = 0.0;        // electron speed, m/s
  double k = 0.0;        // wave number = gamma m0 v / hbar, 1/m
  double w_m = 0.0;      // magnetic length parameter 2 sqrt(hbar/|e|B), m
  double z_m = 0.0;      // k w_m^2 / 2, m
  double z_R = 0.0;      // Rayleigh distance k w0^2 / 2, m
  double z_L = 0.0;      // Larmor distance 2 pi z_m, m
  double omega_L = 0.0;  // Larmor frequency |e|B/2m (m relativistic), rad/s
  double omega_c = 0.0;  // cyclotron frequency 2 omega_L, rad/s

  bool magnetic() const { return B > 0.0; }
  // Relativistic mass gamma * m0, kg.
  double mass() const;
};

// Derive all scales from (B, T, w0). Requires B > 0, T > 0, w0 > 0; throws
// DomainError naming the offending field otherwise.
PhysicalSetup derive_setup(double field_tesla, double kinetic_energy_joule,
                           double waist_m);

// Free-space (B = 0) branch, used for the B->0 limits. The magnetic scales
// are set to +infinity / zero explicitly instead of a numerically huge z_m.
PhysicalSetup derive_setup_free(double kinetic_energy_joule, double waist_m);

// Waist that produces the requested Rayleigh distance at this kinetic energy:
// w0 = sqrt(2 z_R / k). Convenient because experiments quote z_R.
double waist_for_rayleigh(double kinetic_energy_joule, double rayleigh_m);

}  // namespace evb

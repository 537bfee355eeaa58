#include "evb/params.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "evb/constants.hpp"
#include "evb/errors.hpp"

namespace evb {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void derive_kinematics(PhysicalSetup& s) {
  namespace k = constants;
  s.gamma = 1.0 + s.kinetic_energy / k::electron_rest_energy;
  s.v = k::speed_of_light * std::sqrt(1.0 - 1.0 / (s.gamma * s.gamma));
  s.k = s.gamma * k::electron_mass * s.v / k::hbar;
  s.z_R = 0.5 * s.k * s.w0 * s.w0;
}

}  // namespace

double PhysicalSetup::mass() const { return gamma * constants::electron_mass; }

PhysicalSetup derive_setup(double field_tesla, double kinetic_energy_joule,
                           double waist_m) {
  namespace k = constants;
  if (!(field_tesla > 0.0))
    throw DomainError("derive_setup: B must be > 0 tesla");
  if (!(kinetic_energy_joule > 0.0))
    throw DomainError("derive_setup: kinetic_energy must be > 0");
  if (!(waist_m > 0.0)) throw DomainError("derive_setup: w0 must be > 0");

  PhysicalSetup s;
  s.B = field_tesla;
  s.kinetic_energy = kinetic_energy_joule;
  s.w0 = waist_m;
  derive_kinematics(s);
  s.w_m = 2.0 * std::sqrt(k::hbar / (k::elementary_charge * s.B));
  s.z_m = 0.5 * s.k * s.w_m * s.w_m;
  s.z_L = 2.0 * std::numbers::pi * s.z_m;
  s.omega_L = k::elementary_charge * s.B / (2.0 * s.mass());
  s.omega_c = 2.0 * s.omega_L;
  return s;
}

PhysicalSetup derive_setup_free(double kinetic_energy_joule, double waist_m) {
  if (!(kinetic_energy_joule > 0.0))
    throw DomainError("derive_setup_free: kinetic_energy must be > 0");
  if (!(waist_m > 0.0)) throw DomainError("derive_setup_free: w0 must be > 0");

  PhysicalSetup s;
  s.B = 0.0;
  s.kinetic_energy = kinetic_energy_joule;
  s.w0 = waist_m;
  derive_kinematics(s);
  s.w_m = kInf;
  s.z_m = kInf;
  s.z_L = kInf;
  s.omega_L = 0.0;
  s.omega_c = 0.0;
  return s;
}

double waist_for_rayleigh(double kinetic_energy_joule, double rayleigh_m) {
  if (!(kinetic_energy_joule > 0.0))
    throw DomainError("waist_for_rayleigh: kinetic_energy must be > 0");
  if (!(rayleigh_m > 0.0))
    throw DomainError("waist_for_rayleigh: z_R must be > 0");
  PhysicalSetup s;
  s.kinetic_energy = kinetic_energy_joule;
  s.w0 = 1.0;  // placeholder, only k is needed
  derive_kinematics(s);
  return std::sqrt(2.0 * rayleigh_m / s.k);
}

}  // namespace evb

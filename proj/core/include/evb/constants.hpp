#pragma once

#include <numbers>

namespace evb::constants {

// CODATA-2018 values, SI. c, h and e are exact by the 2019 SI redefinition;
// the electron mass is the 2018 adjustment. All derived quantities in the
// library trace back to this table.
inline constexpr double speed_of_light = 299792458.0;            // m / s
inline constexpr double planck = 6.62607015e-34;                 // J s
inline constexpr double hbar = planck / (2.0 * std::numbers::pi);
inline constexpr double elementary_charge = 1.602176634e-19;     // C, |e|
inline constexpr double electron_mass = 9.1093837015e-31;        // kg

inline constexpr double electron_rest_energy =
    electron_mass * speed_of_light * speed_of_light;             // J

// The electron charge is negative; formulas use |e| with signs written out.
inline constexpr double joule_per_kev = 1.0e3 * elementary_charge;

inline constexpr double kev_to_joule(double kev) { return kev * joule_per_kev; }
inline constexpr double joule_to_kev(double joule) { return joule / joule_per_kev; }

}  // namespace evb::constants

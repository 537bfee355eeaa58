#include "evb/modes.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "evb/constants.hpp"
#include "evb/errors.hpp"
#include "evb/special.hpp"

namespace evb {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// cos^2(z/z_m) + (z_m/z_R)^2 sin^2(z/z_m); the shared oscillation factor
// w(z)^2 / w0^2.
double width_factor_sq(const PhysicalSetup& s, double z) {
  const double u = z / s.z_m;
  const double c = std::cos(u);
  const double sn = std::sin(u);
  const double q = (s.z_m / s.z_R) * (s.z_m / s.z_R);
  return c * c + q * sn * sn;
}

}  // namespace

int ModeIndex::principal() const { return 2 * n + std::abs(ell) + 1; }
int ModeIndex::abs_ell() const { return std::abs(ell); }
int ModeIndex::sign_ell() const { return (ell > 0) - (ell < 0); }

void validate(const ModeIndex& mode) {
  if (mode.n < 0) throw DomainError("ModeIndex: n must be >= 0");
}

double beam_width(const PhysicalSetup& s, double z) {
  if (!s.magnetic()) {
    const double t = z / s.z_R;
    return s.w0 * std::sqrt(1.0 + t * t);
  }
  return s.w0 * std::sqrt(width_factor_sq(s, z));
}

double inverse_curvature(const PhysicalSetup& s, double z) {
  if (!s.magnetic()) return z / (z * z + s.z_R * s.z_R);
  const double u = z / s.z_m;
  const double q = (s.z_m / s.z_R) * (s.z_m / s.z_R);
  const double num = (q - 1.0) * std::sin(2.0 * u);
  const double den = s.k * s.w_m * s.w_m * width_factor_sq(s, z);
  return num / den;
}

double curvature_radius(const PhysicalSetup& s, double z) {
  const double ic = inverse_curvature(s, z);
  if (ic == 0.0) return std::copysign(kInf, ic);
  return 1.0 / ic;
}

double gouy_phase(const PhysicalSetup& s, const ModeIndex& mode, double z) {
  validate(mode);
  const double big_n = mode.principal();
  if (!s.magnetic()) return big_n * std::atan(z / s.z_R);
  return big_n * wrapped_arctan(s.z_m / s.z_R, z / s.z_m) +
         mode.ell * z / s.z_m;
}

double gouy_phase_derivative(const PhysicalSetup& s, const ModeIndex& mode,
                             double z) {
  validate(mode);
  const double big_n = mode.principal();
  if (!s.magnetic()) return big_n / (s.z_R * (1.0 + (z / s.z_R) * (z / s.z_R)));
  // d/dz of the wrapped arctan is w0^2 / (z_R w(z)^2).
  return big_n / (s.z_R * width_factor_sq(s, z)) + mode.ell / s.z_m;
}

ModeFrame mode_frame(const PhysicalSetup& s, const ModeIndex& mode, double z) {
  return ModeFrame{beam_width(s, z), curvature_radius(s, z),
                   gouy_phase(s, mode, z), z};
}

double mode_norm_constant(const ModeIndex& mode) {
  validate(mode);
  const int a = mode.abs_ell();
  const double log_c2 = std::log(2.0) + std::lgamma(mode.n + 1.0) -
                        std::log(std::numbers::pi) -
                        std::lgamma(mode.n + a + 1.0);
  return std::exp(0.5 * log_c2);
}

std::complex<double> evaluate_mode(const PhysicalSetup& s,
                                   const ModeIndex& mode, double x, double y,
                                   double z) {
  validate(mode);
  const int a = mode.abs_ell();
  const double r2 = x * x + y * y;
  const double w = beam_width(s, z);
  const double t = 2.0 * r2 / (w * w);

  double amplitude = (mode_norm_constant(mode) / w) * laguerre(mode.n, a, t) *
                     std::exp(-0.5 * t);
  if (a > 0) {
    if (r2 == 0.0) return {0.0, 0.0};  // vortex core
    amplitude *= std::pow(std::sqrt(t), a);
  }

  const double phase = mode.ell * std::atan2(y, x) +
                       0.5 * s.k * r2 * inverse_curvature(s, z) -
                       gouy_phase(s, mode, z);
  return std::polar(amplitude, phase);
}

}  // namespace evb

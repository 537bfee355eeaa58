#include "evb/bohmian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "evb/constants.hpp"
#include "evb/errors.hpp"
#include "evb/fft.hpp"
#include "evb/special.hpp"

namespace evb {

namespace {

// Scale-invariant radial intensity profile of a mode at t = r / w(z):
// [(sqrt(2) t)^|l| L_n^|l|(2 t^2) exp(-t^2)]^2, constant factors dropped.
double radial_profile_sq(const ModeIndex& mode, double t) {
  const int a = mode.abs_ell();
  const double t2 = t * t;
  double amp = laguerre(mode.n, a, 2.0 * t2) * std::exp(-t2);
  if (a > 0) amp *= std::pow(std::numbers::sqrt2 * t, a);
  return amp * amp;
}

double peak_radial_profile_sq(const ModeIndex& mode) {
  double peak = radial_profile_sq(mode, 0.0);
  constexpr int kSamples = 8192;
  for (int i = 1; i <= kSamples; ++i) {
    const double t = 6.0 * i / kSamples;
    peak = std::max(peak, radial_profile_sq(mode, t));
  }
  return peak;
}

}  // namespace

double local_angular_frequency(const PhysicalSetup& setup,
                               const ModeIndex& mode, double r) {
  validate(mode);
  if (!(r > 0.0))
    throw DomainError(
        "local_angular_frequency: r must be > 0 (current singular at core)");
  return constants::hbar * mode.ell / (setup.mass() * r * r) + setup.omega_L;
}

AnalyticModeFlow::AnalyticModeFlow(const PhysicalSetup& setup,
                                   const ModeIndex& mode)
    : setup_(setup),
      mode_(mode),
      omega_L_signed_(setup.omega_L),
      ell_signed_(mode.ell),
      peak_profile_(peak_radial_profile_sq(mode)) {
  validate(mode);
}

double AnalyticModeFlow::relative_density(double x, double y, double z) const {
  const double w = beam_width(setup_, z);
  const double t = std::sqrt(x * x + y * y) / w;
  return radial_profile_sq(mode_, t) / peak_profile_;
}

double AnalyticModeFlow::ridge_radius(double z) const {
  return beam_width(setup_, z) * std::sqrt(0.5 * mode_.abs_ell());
}

AnalyticModeFlow AnalyticModeFlow::reversed_field() const {
  AnalyticModeFlow flipped(*this);
  flipped.omega_L_signed_ = -omega_L_signed_;
  flipped.ell_signed_ = -ell_signed_;
  return flipped;
}

std::array<double, 3> AnalyticModeFlow::velocity(double x, double y,
                                                 double z) const {
  if (relative_density(x, y, z) < density_floor_rel_)
    throw NodeProximityError("AnalyticModeFlow: density below node floor");
  const double r2 = x * x + y * y;
  const double vz = setup_.v;
  if (r2 == 0.0) return {0.0, 0.0, vz};  // only reachable for ell = 0
  const double r = std::sqrt(r2);
  const double v_r = setup_.v * r * inverse_curvature(setup_, z);
  const double v_phi =
      constants::hbar * ell_signed_ / (setup_.mass() * r) + omega_L_signed_ * r;
  return {(v_r * x - v_phi * y) / r, (v_r * y + v_phi * x) / r, vz};
}

GriddedPlaneFlow::GriddedPlaneFlow(const PhysicalSetup& setup,
                                   const ComplexField& field)
    : setup_(setup),
      rho_(field.nx(), field.ny(), field.dx(), field.dy(), field.z()),
      jx_(field.nx(), field.ny(), field.dx(), field.dy(), field.z()),
      jy_(field.nx(), field.ny(), field.dx(), field.dy(), field.z()),
      z0_(field.z()) {
  SpectralWorkspace ws(field.nx(), field.ny(), field.dx(), field.dy());
  ComplexField gx(field.nx(), field.ny(), field.dx(), field.dy(), field.z());
  ComplexField gy = gx;
  ws.forward(field);
  ws.inverse_derivative_x(gx);
  ws.inverse_derivative_y(gy);
  const double hbar_over_m = constants::hbar / setup.mass();
  double rho_max = 0.0;
  for (std::size_t i = 0; i < field.size(); ++i) {
    const std::complex<double> psi = field.data()[i];
    const double rho = std::norm(psi);
    rho_max = std::max(rho_max, rho);
    rho_.data()[i] = rho;
    jx_.data()[i] = hbar_over_m * std::imag(std::conj(psi) * gx.data()[i]);
    jy_.data()[i] = hbar_over_m * std::imag(std::conj(psi) * gy.data()[i]);
  }
  rho_floor_ = 1e-12 * rho_max;
}

std::array<double, 3> GriddedPlaneFlow::velocity(double x, double y,
                                                 double z) const {
  if (std::abs(z - z0_) > 1e-12)
    throw DomainError("GriddedPlaneFlow: sampler is valid at its own plane");
  const double rho = sample_bilinear(rho_, x, y).real();
  if (rho < rho_floor_)
    throw NodeProximityError("GriddedPlaneFlow: density below node floor");
  const double jx = sample_bilinear(jx_, x, y).real();
  const double jy = sample_bilinear(jy_, x, y).real();
  // Gauge term -eA/m contributes the rigid omega_L rotation.
  return {jx / rho - setup_.omega_L * y, jy / rho + setup_.omega_L * x,
          setup_.v};
}

namespace {

struct State {
  double x, y, az;
};

State axpy(const State& s, double h, const State& d) {
  return {s.x + h * d.x, s.y + h * d.y, s.az + h * d.az};
}

State derivative(const FlowField& flow, double z, const State& u) {
  const auto v = flow.velocity(u.x, u.y, z);
  const double r2 = u.x * u.x + u.y * u.y;
  const double daz =
      r2 > 0.0 ? (u.x * v[1] - u.y * v[0]) / (r2 * v[2]) : 0.0;
  return {v[0] / v[2], v[1] / v[2], daz};
}

}  // namespace

Trajectory integrate_trajectory(const FlowField& flow,
                                const PhysicalSetup& setup, double x0,
                                double y0, double z0, double z1, double tol) {
  if (!(z1 > z0))
    throw DomainError("integrate_trajectory: need z1 > z0");
  if (!(tol > 0.0)) throw DomainError("integrate_trajectory: tol must be > 0");

  // Dormand-Prince 4(5) coefficients.
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                   a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                   a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                   a65 = -5103.0 / 18656;
  constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                   b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  constexpr double e1 = 35.0 / 384 - 5179.0 / 57600,
                   e3 = 500.0 / 1113 - 7571.0 / 16695,
                   e4 = 125.0 / 192 - 393.0 / 640,
                   e5 = -2187.0 / 6784 + 92097.0 / 339200,
                   e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;
  constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;

  Trajectory traj;
  State u{x0, y0, std::atan2(y0, x0)};
  double z = z0;
  traj.points.push_back({u.x, u.y, z, u.az});

  const double span = z1 - z0;
  double h = span / 256.0;
  const double h_min = span * 1e-14;
  const double atol_pos = tol * setup.w0;

  long guard = 0;
  while (z < z1) {
    if (++guard > 20000000)
      throw ConvergenceError("integrate_trajectory: step budget exhausted");
    h = std::min(h, z1 - z);
    State k1, k2, k3, k4, k5, k6, k7, u5;
    try {
      k1 = derivative(flow, z, u);
      k2 = derivative(flow, z + c2 * h, axpy(u, h * a21, k1));
      k3 = derivative(flow, z + c3 * h,
                      axpy(axpy(u, h * a31, k1), h * a32, k2));
      k4 = derivative(
          flow, z + c4 * h,
          axpy(axpy(axpy(u, h * a41, k1), h * a42, k2), h * a43, k3));
      k5 = derivative(flow, z + c5 * h,
                      axpy(axpy(axpy(axpy(u, h * a51, k1), h * a52, k2),
                                h * a53, k3),
                           h * a54, k4));
      k6 = derivative(
          flow, z + h,
          axpy(axpy(axpy(axpy(axpy(u, h * a61, k1), h * a62, k2), h * a63, k3),
                    h * a64, k4),
               h * a65, k5));
      u5 = axpy(axpy(axpy(axpy(axpy(u, h * b1, k1), h * b3, k3), h * b4, k4),
                     h * b5, k5),
                h * b6, k6);
      k7 = derivative(flow, z + h, u5);
    } catch (const NodeProximityError&) {
      h *= 0.5;
      if (h < h_min) {
        traj.status = TrajectoryStatus::TruncatedNearNode;
        return traj;
      }
      continue;
    }

    const State err{
        h * (e1 * k1.x + e3 * k3.x + e4 * k4.x + e5 * k5.x + e6 * k6.x +
             e7 * k7.x),
        h * (e1 * k1.y + e3 * k3.y + e4 * k4.y + e5 * k5.y + e6 * k6.y +
             e7 * k7.y),
        h * (e1 * k1.az + e3 * k3.az + e4 * k4.az + e5 * k5.az + e6 * k6.az +
             e7 * k7.az)};
    const double sx = atol_pos + tol * std::abs(u5.x);
    const double sy = atol_pos + tol * std::abs(u5.y);
    const double sa = tol * (1.0 + std::abs(u5.az));
    const double err_norm =
        std::sqrt(((err.x / sx) * (err.x / sx) + (err.y / sy) * (err.y / sy) +
                   (err.az / sa) * (err.az / sa)) /
                  3.0);
    if (err_norm <= 1.0) {
      z += h;
      u = u5;
      traj.points.push_back({u.x, u.y, z, u.az});
    }
    const double grow =
        err_norm > 0.0 ? 0.9 * std::pow(err_norm, -0.2) : 5.0;
    h *= std::clamp(grow, 0.2, 5.0);
    if (h < h_min && z < z1) {
      traj.status = TrajectoryStatus::TruncatedNearNode;
      return traj;
    }
  }
  return traj;
}

std::vector<WeightedStart> density_weighted_starts(const PhysicalSetup& setup,
                                                   const ModeIndex& mode,
                                                   double z0, int n_radii,
                                                   int n_angles) {
  validate(mode);
  if (n_radii < 1 || n_angles < 1)
    throw DomainError("density_weighted_starts: counts must be >= 1");
  const double w = beam_width(setup, z0);
  // Radial quadrature of rho(r) r dr on t = r/w in [0, 5]; the density is
  // negligible beyond.
  const auto nodes = gauss_legendre(n_radii);
  std::vector<WeightedStart> starts;
  starts.reserve(static_cast<std::size_t>(n_radii) * n_angles);
  double total = 0.0;
  for (const auto& node : nodes) {
    const double t = 2.5 * (node.x + 1.0);  // map [-1,1] -> [0,5]
    const double weight = node.weight * radial_profile_sq(mode, t) * t;
    total += weight;
    const double r = t * w;
    for (int j = 0; j < n_angles; ++j) {
      const double phi = 2.0 * std::numbers::pi * (j + 0.5) / n_angles;
      starts.push_back({r * std::cos(phi), r * std::sin(phi), weight});
    }
  }
  for (auto& s : starts) s.weight /= total * n_angles;
  return starts;
}

}  // namespace evb

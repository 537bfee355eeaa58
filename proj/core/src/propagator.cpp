#include "evb/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "evb/constants.hpp"
#include "evb/errors.hpp"
#include "evb/special.hpp"

namespace evb {

namespace {

constexpr double kPi = std::numbers::pi;

// Chebyshev order for tolerance: first index at (or beyond) the Bessel
// turning point k ~ alpha whose next few coefficients all sit below tol.
// The look-ahead guards against landing on an incidental Bessel zero.
int chebyshev_order(const std::vector<double>& j, double tol, double alpha) {
  const int hi = static_cast<int>(j.size()) - 1;
  for (int m = 0; m + 3 <= hi; ++m) {
    if (m < alpha) continue;
    if (std::abs(j[m + 1]) < tol && std::abs(j[m + 2]) < tol &&
        std::abs(j[m + 3]) < tol)
      return m;
  }
  return -1;
}

}  // namespace

SpectralBounds estimate_spectral_bounds(const PhysicalSetup& s, int nx, int ny,
                                        double dx, double dy) {
  namespace c = constants;
  const double kx_max = kPi / dx;
  const double ky_max = kPi / dy;
  const double kperp2_max = kx_max * kx_max + ky_max * ky_max;
  const double kinetic = c::hbar * kperp2_max / (2.0 * s.k);

  double potential = 0.0;
  double angular = 0.0;
  if (s.magnetic()) {
    const double eb = c::elementary_charge * s.B;
    const double x_max = 0.5 * nx * dx;
    const double y_max = 0.5 * ny * dy;
    const double r2_max = x_max * x_max + y_max * y_max;
    potential = eb * eb * r2_max / (8.0 * c::hbar * s.k);
    angular = (eb / (2.0 * s.k)) * std::sqrt(kperp2_max) * std::sqrt(r2_max);
  }
  SpectralBounds b;
  b.e_max = 1.1 * (kinetic + potential + angular);
  b.e_min = -1.1 * angular;
  return b;
}

ChebyshevPropagator::ChebyshevPropagator(const PropagationPlan& plan, int nx,
                                         int ny, double dx, double dy)
    : plan_(plan),
      bounds_(estimate_spectral_bounds(plan.setup, nx, ny, dx, dy)),
      ws_(nx, ny, dx, dy),
      lap_(nx, ny, dx, dy, 0.0),
      gx_(nx, ny, dx, dy, 0.0),
      gy_(nx, ny, dx, dy, 0.0),
      t_prev_(nx, ny, dx, dy, 0.0),
      t_cur_(nx, ny, dx, dy, 0.0),
      t_next_(nx, ny, dx, dy, 0.0),
      acc_(nx, ny, dx, dy, 0.0) {
  xs_.resize(nx);
  ys_.resize(ny);
  for (int i = 0; i < nx; ++i) xs_[i] = (i - nx / 2) * dx;
  for (int j = 0; j < ny; ++j) ys_[j] = (j - ny / 2) * dy;
}

void ChebyshevPropagator::apply_hamiltonian(const ComplexField& in,
                                            ComplexField& out) {
  namespace c = constants;
  const PhysicalSetup& s = plan_.setup;
  ws_.forward(in);
  ws_.inverse_laplacian(lap_);
  const bool magnetic = s.magnetic();
  if (magnetic) {
    ws_.inverse_derivative_x(gx_);
    ws_.inverse_derivative_y(gy_);
  }
  const double ckin = -c::hbar / (2.0 * s.k);
  const double eb = c::elementary_charge * s.B;
  const double coam = eb / (2.0 * s.k);  // term: -i coam (x d/dy - y d/dx)
  const double cpot = eb * eb / (8.0 * c::hbar * s.k);
  const int nx = in.nx(), ny = in.ny();
  for (int iy = 0; iy < ny; ++iy) {
    const double y = ys_[iy];
    const std::size_t row = in.idx(0, iy);
    for (int ix = 0; ix < nx; ++ix) {
      const std::size_t id = row + ix;
      std::complex<double> h = ckin * lap_.data()[id];
      if (magnetic) {
        const double x = xs_[ix];
        const std::complex<double> dphi =
            x * gy_.data()[id] - y * gx_.data()[id];
        h += std::complex<double>(0.0, -coam) * dphi;
        h += cpot * (x * x + y * y) * in.data()[id];
      }
      out.data()[id] = h;
    }
  }
}

void ChebyshevPropagator::apply_normalized(const ComplexField& in,
                                           ComplexField& out) {
  apply_hamiltonian(in, out);
  const double center = bounds_.center();
  const double inv_half = 1.0 / bounds_.half_span();
  for (std::size_t i = 0; i < in.size(); ++i)
    out.data()[i] = (out.data()[i] - center * in.data()[i]) * inv_half;
}

void ChebyshevPropagator::step(ComplexField& field, double dz) {
  namespace c = constants;
  if (dz == 0.0) return;
  const double alpha = bounds_.half_span() * dz / c::hbar;
  const double a = std::abs(alpha);

  const int hi = static_cast<int>(
      std::ceil(a + 12.0 * std::cbrt(a + 16.0) + 40.0));
  if (hi > plan_.max_terms) {
    std::ostringstream msg;
    msg << "chebyshev_step: series order " << hi << " exceeds budget "
        << plan_.max_terms << " (alpha = " << a << ")";
    throw ConvergenceError(msg.str());
  }
  const std::vector<double> bessel = bessel_j_sequence(hi, a);
  const int order = chebyshev_order(bessel, plan_.cheb_tol, a);
  if (order < 0) {
    std::ostringstream msg;
    msg << "chebyshev_step: no converged order <= " << hi
        << " at tol = " << plan_.cheb_tol << " (alpha = " << a << ")";
    throw ConvergenceError(msg.str());
  }
  last_order_ = order;

  // exp(-i x sin t) expansion gives phases (-i)^k; a negative step flips
  // J_k(-a) = (-1)^k J_k(a), i.e. (+i)^k.
  const std::complex<double> unit(0.0, alpha >= 0.0 ? -1.0 : 1.0);

  // k = 0 and k = 1 terms.
  t_prev_ = field;
  apply_normalized(t_prev_, t_cur_);
  std::complex<double> ck = 2.0 * unit * bessel[1];
  for (std::size_t i = 0; i < field.size(); ++i)
    acc_.data()[i] =
        bessel[0] * t_prev_.data()[i] + ck * t_cur_.data()[i];

  std::complex<double> phase_k = unit;
  for (int k = 2; k <= order; ++k) {
    apply_normalized(t_cur_, t_next_);
    phase_k *= unit;
    ck = 2.0 * phase_k * bessel[k];
    for (std::size_t i = 0; i < field.size(); ++i) {
      t_next_.data()[i] = 2.0 * t_next_.data()[i] - t_prev_.data()[i];
      acc_.data()[i] += ck * t_next_.data()[i];
    }
    std::swap(t_prev_, t_cur_);
    std::swap(t_cur_, t_next_);
  }

  const double phi0 = -bounds_.center() * dz / c::hbar;
  const std::complex<double> global = std::polar(1.0, phi0);
  for (std::size_t i = 0; i < field.size(); ++i)
    field.data()[i] = global * acc_.data()[i];
  field.set_z(field.z() + dz);
}

void ChebyshevPropagator::check_guards(const ComplexField& field) const {
  if (plan_.spill_tol > 0.0) {
    const double peak = field.max_intensity();
    if (peak > 0.0 && field.edge_intensity() > plan_.spill_tol * peak) {
      std::ostringstream msg;
      msg << "propagate: field energy reached the grid boundary at z = "
          << field.z() << " (edge/peak > " << plan_.spill_tol << ")";
      throw BoundarySpillError(msg.str());
    }
  }
  if (plan_.width_guard_factor > 0.0) {
    const double w = beam_width(plan_.setup, field.z());
    const double extent = std::min(field.extent_x(), field.extent_y());
    if (extent < plan_.width_guard_factor * w) {
      std::ostringstream msg;
      msg << "propagate: grid extent " << extent << " below "
          << plan_.width_guard_factor << " * w(z) = "
          << plan_.width_guard_factor * w << " at z = " << field.z();
      throw BoundarySpillError(msg.str());
    }
  }
}

void ChebyshevPropagator::propagate_observed(
    const ComplexField& initial, const std::vector<double>& record_planes,
    const std::function<void(const ComplexField&)>& observer) {
  if (record_planes.empty())
    throw DomainError("propagate: no record planes requested");
  if (!std::is_sorted(record_planes.begin(), record_planes.end()))
    throw DomainError("propagate: record planes must be monotone increasing");
  if (record_planes.front() < plan_.z_start - 1e-15 * std::abs(plan_.z_start) ||
      record_planes.back() > plan_.z_end + 1e-15 * std::abs(plan_.z_end))
    throw DomainError("propagate: record planes outside [z_start, z_end]");
  if (!(plan_.dz > 0.0)) throw DomainError("propagate: plan.dz must be > 0");

  if (plan_.check_bandwidth) {
    ws_.forward(initial);
    const double tail = ws_.tail_energy_fraction(0.75);
    if (tail > plan_.bandwidth_tol) {
      std::ostringstream msg;
      msg << "propagate: spectral tail energy " << tail
          << " exceeds bandwidth tolerance " << plan_.bandwidth_tol
          << "; grid too coarse for the field bandwidth";
      throw BandwidthError(msg.str());
    }
  }

  const double z_scale = std::max({std::abs(plan_.z_start),
                                   std::abs(plan_.z_end), plan_.dz});
  if (std::abs(initial.z() - plan_.z_start) > 1e-9 * z_scale)
    throw DomainError("propagate: initial field is not at plan.z_start");

  ComplexField cur = initial;
  cur.set_z(plan_.z_start);
  check_guards(cur);
  for (double target : record_planes) {
    while (cur.z() < target - 1e-9 * plan_.dz) {
      const double dz = std::min(plan_.dz, target - cur.z());
      step(cur, dz);
      check_guards(cur);
    }
    cur.set_z(target);  // absorb roundoff accumulated by repeated adds
    observer(cur);
  }
}

std::vector<ComplexField> ChebyshevPropagator::propagate(
    const ComplexField& initial, const std::vector<double>& record_planes) {
  std::vector<ComplexField> snapshots;
  snapshots.reserve(record_planes.size());
  propagate_observed(initial, record_planes,
                     [&](const ComplexField& f) { snapshots.push_back(f); });
  return snapshots;
}

ComplexField apply_hamiltonian(const PhysicalSetup& setup,
                               const ComplexField& field) {
  PropagationPlan plan;
  plan.setup = setup;
  ChebyshevPropagator prop(plan, field.nx(), field.ny(), field.dx(),
                           field.dy());
  ComplexField out = field;
  prop.apply_hamiltonian(field, out);
  out.set_z(field.z());
  return out;
}

ComplexField truncate_half_plane(const ComplexField& field) {
  ComplexField out = field;
  const int half_row = out.ny() / 2;  // y = 0
  for (int iy = 0; iy < out.ny(); ++iy) {
    if (out.y(iy) > 0.0) continue;
    if (iy == half_row) {
      for (int ix = 0; ix < out.nx(); ++ix)
        if (!(out.x(ix) > 0.0)) out.at(ix, iy) = 0.0;
    } else {
      for (int ix = 0; ix < out.nx(); ++ix) out.at(ix, iy) = 0.0;
    }
  }
  out.normalize();
  return out;
}

double oam_expectation_hbar(const ComplexField& field) {
  SpectralWorkspace ws(field.nx(), field.ny(), field.dx(), field.dy());
  return oam_expectation_hbar(field, ws);
}

double oam_expectation_hbar(const ComplexField& field, SpectralWorkspace& ws) {
  ComplexField gx(field.nx(), field.ny(), field.dx(), field.dy(), field.z());
  ComplexField gy = gx;
  ws.forward(field);
  ws.inverse_derivative_x(gx);
  ws.inverse_derivative_y(gy);
  // <Phi| -i (x d/dy - y d/dx) |Phi>, real part (Hermitian on the grid).
  double acc = 0.0;
  double norm = 0.0;
  for (int iy = 0; iy < field.ny(); ++iy) {
    const double y = field.y(iy);
    for (int ix = 0; ix < field.nx(); ++ix) {
      const double x = field.x(ix);
      const std::size_t id = field.idx(ix, iy);
      const std::complex<double> psi = field.data()[id];
      const std::complex<double> dphi =
          x * gy.data()[id] - y * gx.data()[id];
      acc += std::imag(std::conj(psi) * dphi);  // Re(-i conj(psi) dphi)
      norm += std::norm(psi);
    }
  }
  if (norm == 0.0) throw DomainError("oam_expectation_hbar: zero field");
  return acc / norm;
}

double spectral_tail_fraction(const ComplexField& field, double band) {
  SpectralWorkspace ws(field.nx(), field.ny(), field.dx(), field.dy());
  ws.forward(field);
  return ws.tail_energy_fraction(band);
}

}  // namespace evb

#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "evb/field.hpp"
#include "evb/fft.hpp"
#include "evb/params.hpp"

namespace evb {

// Enclosure of the numerical range of the grid Hamiltonian, with margin.
struct SpectralBounds {
  double e_min = 0.0;
  double e_max = 0.0;
  double center() const { return 0.5 * (e_max + e_min); }
  double half_span() const { return 0.5 * (e_max - e_min); }
};

// Rigorous operator-norm bounds for H on the given grid: kinetic Nyquist
// eigenvalue + potential at the grid corner + angular-term norm bound,
// widened by 10 percent.
SpectralBounds estimate_spectral_bounds(const PhysicalSetup& setup, int nx,
                                        int ny, double dx, double dy);

struct PropagationPlan {
  PhysicalSetup setup;
  double z_start = 0.0;
  double z_end = 0.0;
  double dz = 0.0;            // nominal step (record planes shorten it)
  double cheb_tol = 1e-15;    // first neglected Bessel coefficient
  int max_terms = 100000;     // series budget per step
  double bandwidth_tol = 1e-8;  // spectral tail guard on the initial field
  bool check_bandwidth = true;  // disable for inherently non-bandlimited
                                // (knife-edge truncated) initial states
  double spill_tol = 1e-6;      // boundary intensity guard, relative to peak
  double width_guard_factor = 8.0;  // grid extent >= factor * w(z); 0 = off
};

// Evolves transverse wavefunctions through the TDSE-like paraxial equation
//   i hbar d/dz Phi = [-(hbar/2k) Lap_perp - i(|e|B/2k) d/dphi
//                      + e^2 B^2 r^2 / (8 hbar k)] Phi
// by a Bessel-weighted Chebyshev expansion of exp(-i H dz / hbar). The
// Laplacian and the angular derivative d/dphi = x d/dy - y d/dx are applied
// spectrally; the quadratic potential pointwise.
class ChebyshevPropagator {
 public:
  ChebyshevPropagator(const PropagationPlan& plan, int nx, int ny, double dx,
                      double dy);

  const SpectralBounds& bounds() const { return bounds_; }
  const PropagationPlan& plan() const { return plan_; }

  // out = H in. Grid shapes must match the construction shape.
  void apply_hamiltonian(const ComplexField& in, ComplexField& out);

  // In-place field <- exp(-i H dz / hbar) field; advances field.z().
  void step(ComplexField& field, double dz);

  // Run from plan.z_start across the record planes (monotone increasing,
  // inside [z_start, z_end]); returns one snapshot per requested plane.
  std::vector<ComplexField> propagate(const ComplexField& initial,
                                      const std::vector<double>& record_planes);

  // Same, but hands each snapshot to `observer` instead of storing it.
  void propagate_observed(
      const ComplexField& initial, const std::vector<double>& record_planes,
      const std::function<void(const ComplexField&)>& observer);

  // Chebyshev order used for the last step (diagnostic).
  int last_order() const { return last_order_; }

 private:
  void apply_normalized(const ComplexField& in, ComplexField& out);
  void check_guards(const ComplexField& field) const;

  PropagationPlan plan_;
  SpectralBounds bounds_;
  SpectralWorkspace ws_;
  ComplexField lap_, gx_, gy_;      // H-application scratch
  ComplexField t_prev_, t_cur_, t_next_, acc_;  // Chebyshev recurrence
  std::vector<double> xs_, ys_;     // grid coordinates
  int last_order_ = 0;
};

// One-off H application (tests, diagnostics).
ComplexField apply_hamiltonian(const PhysicalSetup& setup,
                               const ComplexField& field);

// Knife-edge truncation: keeps phi in (0, pi) -- rows y > 0 plus the
// y = 0, x > 0 half-line -- zeroes the rest and renormalizes to unit norm.
ComplexField truncate_half_plane(const ComplexField& field);

// <L_z>/hbar by spectral quadrature of <Phi| -i(x d/dy - y d/dx) |Phi>.
double oam_expectation_hbar(const ComplexField& field);
// Same, reusing a caller-owned workspace of matching shape (hot paths).
double oam_expectation_hbar(const ComplexField& field, SpectralWorkspace& ws);

// Energy fraction beyond band * k_nyquist (see SpectralWorkspace).
double spectral_tail_fraction(const ComplexField& field, double band = 0.75);

}  // namespace evb

#pragma once

#include <span>
#include <vector>

#include "evb/field.hpp"
#include "evb/theory.hpp"

namespace evb {

// Intensity-weighted circular mean of the azimuth:
//   angle = arg sum |Phi|^2 e^{i phi},  resultant = |sum| / sum |Phi|^2.
// Patterns with resultant below ~0.05 (symmetric rings) carry no usable
// orientation.
struct PatternOrientation {
  double angle = 0.0;      // rad, in (-pi, pi]
  double resultant = 0.0;  // in [0, 1]
  double z = 0.0;          // m
};

inline constexpr double kMinMeaningfulResultant = 0.05;

PatternOrientation orientation_angle(const ComplexField& field);

// Unwrapped orientation differences relative to the first snapshot. Plane
// spacing must keep each step below pi/2 or the unwrap is ambiguous and an
// error demands finer spacing. Returns a curve tagged Simulated with
// z_k = plane position.
RotationCurve rotation_from_snapshots(std::span<const ComplexField> snapshots);
RotationCurve rotation_from_orientations(
    const std::vector<PatternOrientation>& orientations);

// Azimuthal Fourier weights |c_s|^2 of the wavefunction, ring-sampled and
// intensity weighted; indexed by offset s - ell_ref. Weights over the full
// computed range sum to one.
struct OamSpectrum {
  int ell_ref = 0;
  int max_offset = 0;
  std::vector<double> weights;  // size 2*max_offset+1, index offset+max_offset
  double mean = 0.0;            // <L_z>/hbar over the full spectrum
  double captured = 0.0;        // weight mass inside [-max_offset, max_offset]

  double weight_at_offset(int offset) const {
    return weights.at(static_cast<std::size_t>(offset + max_offset));
  }
};

OamSpectrum oam_spectrum(const ComplexField& field, int ell_ref,
                         int max_offset = 32);

// Grid quadrature of <r^-2> excluding a core disc (default radius 2 dx).
// Diverges logarithmically with the exclusion radius for ell = 0 fields;
// reported, not compared, in that case.
double radial_inverse_square_moment(const ComplexField& field,
                                    double core_exclusion_radius = -1.0);

}  // namespace evb

#include "evb/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "evb/errors.hpp"

namespace evb {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_pi(double a) {
  a = std::fmod(a, 2.0 * kPi);
  if (a > kPi) a -= 2.0 * kPi;
  if (a <= -kPi) a += 2.0 * kPi;
  return a;
}

}  // namespace

PatternOrientation orientation_angle(const ComplexField& field) {
  std::complex<double> acc{0.0, 0.0};
  double total = 0.0;
  for (int iy = 0; iy < field.ny(); ++iy) {
    const double y = field.y(iy);
    for (int ix = 0; ix < field.nx(); ++ix) {
      const double rho = std::norm(field.at(ix, iy));
      if (rho == 0.0) continue;
      const double x = field.x(ix);
      const double r = std::hypot(x, y);
      if (r == 0.0) continue;  // phase undefined on the axis
      acc += rho * std::complex<double>(x / r, y / r);
      total += rho;
    }
  }
  PatternOrientation out;
  out.z = field.z();
  if (total > 0.0) {
    out.angle = std::arg(acc);
    out.resultant = std::abs(acc) / total;
  }
  return out;
}

RotationCurve rotation_from_orientations(
    const std::vector<PatternOrientation>& orientations) {
  if (orientations.size() < 2)
    throw DomainError("rotation_from_snapshots: need >= 2 snapshots");
  for (const auto& o : orientations) {
    if (o.resultant < kMinMeaningfulResultant) {
      std::ostringstream msg;
      msg << "rotation_from_snapshots: symmetric pattern at z = " << o.z
          << " (resultant " << o.resultant << " < "
          << kMinMeaningfulResultant << "), orientation unreliable";
      throw DomainError(msg.str());
    }
  }
  RotationCurve curve;
  curve.model = RotationModel::Simulated;
  curve.z_df = orientations.front().z;
  curve.samples.reserve(orientations.size());
  double unwrapped = 0.0;
  curve.samples.push_back({orientations.front().z, 0.0,
                           RotationModel::Simulated});
  for (std::size_t i = 1; i < orientations.size(); ++i) {
    const double jump =
        wrap_pi(orientations[i].angle - orientations[i - 1].angle);
    if (std::abs(jump) >= 0.5 * kPi) {
      std::ostringstream msg;
      msg << "rotation_from_snapshots: per-step rotation " << jump
          << " rad at z = " << orientations[i].z
          << " is ambiguous to unwrap; record planes must be spaced so "
             "steps stay below pi/2";
      throw DomainError(msg.str());
    }
    unwrapped += jump;
    curve.samples.push_back(
        {orientations[i].z, unwrapped, RotationModel::Simulated});
  }
  return curve;
}

RotationCurve rotation_from_snapshots(
    std::span<const ComplexField> snapshots) {
  std::vector<PatternOrientation> orientations;
  orientations.reserve(snapshots.size());
  for (const auto& f : snapshots) orientations.push_back(orientation_angle(f));
  return rotation_from_orientations(orientations);
}

OamSpectrum oam_spectrum(const ComplexField& field, int ell_ref,
                         int max_offset) {
  if (max_offset < 1) throw DomainError("oam_spectrum: max_offset must be >= 1");
  const int n_phi = 512;  // azimuthal samples per ring (power of two)
  const double dr = std::min(field.dx(), field.dy());
  const double r_hi =
      0.45 * std::min(field.extent_x(), field.extent_y());
  const int n_rings = static_cast<int>(r_hi / dr);

  // Direct projection a_s(r_j) = (1/P) sum_p Phi(r_j, phi_p) e^{-i s phi_p}
  // for all s in (-P/2, P/2]; the ring count dominates the cost.
  std::vector<double> weight_by_index(n_phi, 0.0);
  std::vector<std::complex<double>> ring(n_phi);
  std::vector<std::complex<double>> phases(n_phi);
  for (int p = 0; p < n_phi; ++p) {
    const double phi = 2.0 * kPi * p / n_phi;
    phases[p] = std::polar(1.0, phi);
  }
  // Radix-2 FFT over the azimuth.
  const auto fft_ring = [&](std::vector<std::complex<double>>& a) {
    const int n = static_cast<int>(a.size());
    for (int i = 1, j = 0; i < n; ++i) {
      int bit = n >> 1;
      for (; j & bit; bit >>= 1) j ^= bit;
      j ^= bit;
      if (i < j) std::swap(a[i], a[j]);
    }
    for (int len = 2; len <= n; len <<= 1) {
      const double ang = -2.0 * kPi / len;
      const std::complex<double> wl = std::polar(1.0, ang);
      for (int i = 0; i < n; i += len) {
        std::complex<double> w{1.0, 0.0};
        for (int k = 0; k < len / 2; ++k) {
          const std::complex<double> u = a[i + k];
          const std::complex<double> v = a[i + k + len / 2] * w;
          a[i + k] = u + v;
          a[i + k + len / 2] = u - v;
          w *= wl;
        }
      }
    }
  };

  for (int j = 0; j < n_rings; ++j) {
    const double r = (j + 0.5) * dr;
    for (int p = 0; p < n_phi; ++p)
      ring[p] = sample_bilinear(field, r * phases[p].real(),
                                r * phases[p].imag());
    fft_ring(ring);
    for (int p = 0; p < n_phi; ++p) {
      const double a2 = std::norm(ring[p]) / (n_phi * double(n_phi));
      weight_by_index[p] += a2 * r;  // intensity weight, r dr measure
    }
  }

  double total = 0.0;
  double mean = 0.0;
  for (int p = 0; p < n_phi; ++p) {
    const int s = (p <= n_phi / 2) ? p : p - n_phi;  // wrapped azimuthal order
    total += weight_by_index[p];
    mean += s * weight_by_index[p];
  }
  if (total <= 0.0) throw DomainError("oam_spectrum: zero field");

  OamSpectrum spec;
  spec.ell_ref = ell_ref;
  spec.max_offset = max_offset;
  spec.mean = mean / total;
  spec.weights.assign(2 * max_offset + 1, 0.0);
  for (int off = -max_offset; off <= max_offset; ++off) {
    const int s = ell_ref + off;
    if (s <= -n_phi / 2 || s > n_phi / 2) continue;
    const int p = s >= 0 ? s : s + n_phi;
    spec.weights[off + max_offset] = weight_by_index[p] / total;
  }
  for (double w : spec.weights) spec.captured += w;
  return spec;
}

double radial_inverse_square_moment(const ComplexField& field,
                                    double core_exclusion_radius) {
  const double excl = core_exclusion_radius > 0.0 ? core_exclusion_radius
                                                  : 2.0 * field.dx();
  const double excl2 = excl * excl;
  double num = 0.0, den = 0.0;
  for (int iy = 0; iy < field.ny(); ++iy) {
    const double y = field.y(iy);
    for (int ix = 0; ix < field.nx(); ++ix) {
      const double rho = std::norm(field.at(ix, iy));
      if (rho == 0.0) continue;
      const double x = field.x(ix);
      const double r2 = x * x + y * y;
      den += rho;
      if (r2 > excl2) num += rho / r2;
    }
  }
  if (den == 0.0)
    throw DomainError("radial_inverse_square_moment: zero field");
  return num / den;
}

}  // namespace evb

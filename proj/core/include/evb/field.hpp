#pragma once

#include <complex>
#include <vector>

#include "evb/modes.hpp"
#include "evb/params.hpp"

namespace evb {

// Square-sampled complex transverse wavefunction at one axial position.
// Grid coordinates are FFT-native: x_i = (i - n/2) dx, so x = 0 and y = 0
// lie on grid lines. Norm convention: sum |psi|^2 dx dy.
class ComplexField {
 public:
  // nx, ny must be powers of two, >= 64.
  ComplexField(int nx, int ny, double dx, double dy, double z);

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double dx() const { return dx_; }
  double dy() const { return dy_; }
  double z() const { return z_; }
  void set_z(double z) { z_ = z; }

  double x(int ix) const { return (ix - nx_ / 2) * dx_; }
  double y(int iy) const { return (iy - ny_ / 2) * dy_; }
  double extent_x() const { return nx_ * dx_; }
  double extent_y() const { return ny_ * dy_; }

  std::complex<double>& at(int ix, int iy) { return data_[idx(ix, iy)]; }
  const std::complex<double>& at(int ix, int iy) const {
    return data_[idx(ix, iy)];
  }
  std::complex<double>* data() { return data_.data(); }
  const std::complex<double>* data() const { return data_.data(); }
  std::size_t size() const { return data_.size(); }
  std::size_t idx(int ix, int iy) const {
    return static_cast<std::size_t>(iy) * nx_ + ix;
  }

  double norm() const;  // sum |psi|^2 dx dy
  void scale(std::complex<double> factor);
  void normalize();  // rescale to unit norm

  double max_intensity() const;
  // Largest |psi|^2 on the outermost ring of pixels.
  double edge_intensity() const;

 private:
  int nx_, ny_;
  double dx_, dy_;
  double z_;
  std::vector<std::complex<double>> data_;
};

// Analytic mode sampled on an n x n grid of physical side `extent` at z.
ComplexField sample_mode(const PhysicalSetup& setup, const ModeIndex& mode,
                         int n, double extent, double z);

// Bilinear resample onto a grid with the same point count and a new spacing
// (used for piecewise re-gridding when the width changes a lot). Norm is
// preserved by explicit renormalization to the input norm.
ComplexField resample_bilinear(const ComplexField& field, double new_dx,
                               double new_dy);

// Bilinearly interpolated value; zero outside the grid hull.
std::complex<double> sample_bilinear(const ComplexField& field, double x,
                                     double y);

}  // namespace evb

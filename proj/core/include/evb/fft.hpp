#pragma once

#include <complex>
#include <vector>

#include "evb/field.hpp"

namespace evb {

// FFTW-backed 2-D spectral workspace for one grid shape. Owns aligned
// buffers and plans; one instance is used by at most one thread at a time
// (distinct instances run concurrently without locking; plan creation is
// serialized internally).
class SpectralWorkspace {
 public:
  SpectralWorkspace(int nx, int ny, double dx, double dy);
  ~SpectralWorkspace();
  SpectralWorkspace(const SpectralWorkspace&) = delete;
  SpectralWorkspace& operator=(const SpectralWorkspace&) = delete;

  int nx() const { return nx_; }
  int ny() const { return ny_; }

  // Number of threads FFTW uses for subsequently created workspaces.
  static void set_fft_threads(int threads);

  // Unnormalized forward transform of `field` into the internal spectrum
  // buffer. Subsequent inverse_* calls consume that spectrum.
  void forward(const ComplexField& field);

  // out = ifft(multiplier(kx, ky) * spectrum), normalized by 1/(nx ny).
  // The multiplier tables below follow FFT index wrapping.
  void inverse_laplacian(ComplexField& out);   // multiplier -(kx^2 + ky^2)
  void inverse_derivative_x(ComplexField& out);  // multiplier i kx (Nyquist 0)
  void inverse_derivative_y(ComplexField& out);  // multiplier i ky (Nyquist 0)

  // Energy fraction of the current spectrum with |k| > band * k_max where
  // k_max = min over axes of the Nyquist wavenumber.
  double tail_energy_fraction(double band) const;

  // First-derivative wavenumbers (Nyquist zeroed for antisymmetry).
  const std::vector<double>& kx() const { return kx_; }
  const std::vector<double>& ky() const { return ky_; }

 private:
  void inverse_with_multiplier(ComplexField& out, int kind);

  int nx_, ny_;
  double dx_, dy_;
  std::vector<double> kx_, ky_;    // derivative convention
  std::vector<double> kx2_, ky2_;  // squared, Laplacian convention
  std::complex<double>* in_ = nullptr;
  std::complex<double>* spec_ = nullptr;
  std::complex<double>* work_ = nullptr;
  void* plan_fwd_ = nullptr;
  void* plan_inv_ = nullptr;
};

}  // namespace evb

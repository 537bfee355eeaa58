#include "evb/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <mutex>
#include <numbers>

#include "evb/errors.hpp"

namespace evb {

namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

int g_fft_threads = 1;

#ifdef EVB_FFTW_THREADS
std::once_flag g_threads_init;
#endif

enum MultiplierKind { kLaplacian, kDerivX, kDerivY };

}  // namespace

void SpectralWorkspace::set_fft_threads(int threads) {
#ifdef EVB_FFTW_THREADS
  std::call_once(g_threads_init, [] { fftw_init_threads(); });
  g_fft_threads = threads > 0 ? threads : 1;
#else
  (void)threads;
  g_fft_threads = 1;
#endif
}

SpectralWorkspace::SpectralWorkspace(int nx, int ny, double dx, double dy)
    : nx_(nx), ny_(ny), dx_(dx), dy_(dy) {
  const std::size_t n = static_cast<std::size_t>(nx) * ny;
  in_ = reinterpret_cast<std::complex<double>*>(
      fftw_malloc(sizeof(fftw_complex) * n));
  spec_ = reinterpret_cast<std::complex<double>*>(
      fftw_malloc(sizeof(fftw_complex) * n));
  work_ = reinterpret_cast<std::complex<double>*>(
      fftw_malloc(sizeof(fftw_complex) * n));
  if (!in_ || !spec_ || !work_) throw std::bad_alloc();

  {
    // FFTW planning is not thread safe; execution is.
    std::lock_guard<std::mutex> lock(planner_mutex());
#ifdef EVB_FFTW_THREADS
    std::call_once(g_threads_init, [] { fftw_init_threads(); });
    fftw_plan_with_nthreads(g_fft_threads);
#endif
    // FFTW_ESTIMATE keeps plan selection deterministic across runs.
    plan_fwd_ = fftw_plan_dft_2d(ny, nx, reinterpret_cast<fftw_complex*>(in_),
                                 reinterpret_cast<fftw_complex*>(spec_),
                                 FFTW_FORWARD, FFTW_ESTIMATE);
    plan_inv_ = fftw_plan_dft_2d(ny, nx, reinterpret_cast<fftw_complex*>(work_),
                                 reinterpret_cast<fftw_complex*>(in_),
                                 FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  if (!plan_fwd_ || !plan_inv_)
    throw ConvergenceError("SpectralWorkspace: FFTW planning failed");

  const auto fill = [](int n, double d, std::vector<double>& k1,
                       std::vector<double>& k2) {
    k1.resize(n);
    k2.resize(n);
    const double dk = 2.0 * std::numbers::pi / (n * d);
    for (int i = 0; i < n; ++i) {
      const int f = (i <= n / 2) ? i : i - n;  // wrapped frequency index
      const double k = f * dk;
      k2[i] = k * k;
      // Nyquist column carries no sign information; zero it in first
      // derivatives so the operator stays anti-Hermitian on the grid.
      k1[i] = (i == n / 2) ? 0.0 : k;
    }
  };
  fill(nx_, dx_, kx_, kx2_);
  fill(ny_, dy_, ky_, ky2_);
}

SpectralWorkspace::~SpectralWorkspace() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  if (plan_fwd_) fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  if (plan_inv_) fftw_destroy_plan(static_cast<fftw_plan>(plan_inv_));
  fftw_free(in_);
  fftw_free(spec_);
  fftw_free(work_);
}

void SpectralWorkspace::forward(const ComplexField& field) {
  if (field.nx() != nx_ || field.ny() != ny_)
    throw DomainError("SpectralWorkspace::forward: grid shape mismatch");
  std::memcpy(in_, field.data(), sizeof(fftw_complex) * field.size());
  fftw_execute(static_cast<fftw_plan>(plan_fwd_));
}

void SpectralWorkspace::inverse_with_multiplier(ComplexField& out, int kind) {
  if (out.nx() != nx_ || out.ny() != ny_)
    throw DomainError("SpectralWorkspace: output grid shape mismatch");
  const std::size_t n = static_cast<std::size_t>(nx_) * ny_;
  for (int iy = 0; iy < ny_; ++iy) {
    const std::size_t row = static_cast<std::size_t>(iy) * nx_;
    for (int ix = 0; ix < nx_; ++ix) {
      const std::complex<double> s = spec_[row + ix];
      switch (kind) {
        case kLaplacian:
          work_[row + ix] = -(kx2_[ix] + ky2_[iy]) * s;
          break;
        case kDerivX:
          work_[row + ix] = std::complex<double>(-kx_[ix] * s.imag(),
                                                 kx_[ix] * s.real());
          break;
        case kDerivY:
          work_[row + ix] = std::complex<double>(-ky_[iy] * s.imag(),
                                                 ky_[iy] * s.real());
          break;
      }
    }
  }
  fftw_execute(static_cast<fftw_plan>(plan_inv_));
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) out.data()[i] = in_[i] * scale;
}

void SpectralWorkspace::inverse_laplacian(ComplexField& out) {
  inverse_with_multiplier(out, kLaplacian);
}
void SpectralWorkspace::inverse_derivative_x(ComplexField& out) {
  inverse_with_multiplier(out, kDerivX);
}
void SpectralWorkspace::inverse_derivative_y(ComplexField& out) {
  inverse_with_multiplier(out, kDerivY);
}

double SpectralWorkspace::tail_energy_fraction(double band) const {
  const double kx_nyq = std::numbers::pi / dx_;
  const double ky_nyq = std::numbers::pi / dy_;
  const double k_cut = band * std::min(kx_nyq, ky_nyq);
  const double k_cut2 = k_cut * k_cut;
  double total = 0.0, tail = 0.0;
  for (int iy = 0; iy < ny_; ++iy) {
    const std::size_t row = static_cast<std::size_t>(iy) * nx_;
    for (int ix = 0; ix < nx_; ++ix) {
      const double e = std::norm(spec_[row + ix]);
      total += e;
      if (kx2_[ix] + ky2_[iy] > k_cut2) tail += e;
    }
  }
  return total > 0.0 ? tail / total : 0.0;
}

}  // namespace evb

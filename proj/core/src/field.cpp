#include "evb/field.hpp"

#include <algorithm>
#include <cmath>

#include "evb/errors.hpp"

namespace evb {

namespace {

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

ComplexField::ComplexField(int nx, int ny, double dx, double dy, double z)
    : nx_(nx), ny_(ny), dx_(dx), dy_(dy), z_(z) {
  if (!power_of_two(nx) || !power_of_two(ny) || nx < 64 || ny < 64)
    throw DomainError("ComplexField: grid sizes must be powers of two >= 64");
  if (!(dx > 0.0) || !(dy > 0.0))
    throw DomainError("ComplexField: spacings must be positive");
  data_.assign(static_cast<std::size_t>(nx) * ny, {0.0, 0.0});
}

double ComplexField::norm() const {
  double acc = 0.0;
  for (const auto& v : data_) acc += std::norm(v);
  return acc * dx_ * dy_;
}

void ComplexField::scale(std::complex<double> factor) {
  for (auto& v : data_) v *= factor;
}

void ComplexField::normalize() {
  const double n = norm();
  if (n <= 0.0) throw DomainError("ComplexField::normalize: zero field");
  scale(1.0 / std::sqrt(n));
}

double ComplexField::max_intensity() const {
  double m = 0.0;
  for (const auto& v : data_) m = std::max(m, std::norm(v));
  return m;
}

double ComplexField::edge_intensity() const {
  double m = 0.0;
  for (int ix = 0; ix < nx_; ++ix) {
    m = std::max(m, std::norm(at(ix, 0)));
    m = std::max(m, std::norm(at(ix, ny_ - 1)));
  }
  for (int iy = 0; iy < ny_; ++iy) {
    m = std::max(m, std::norm(at(0, iy)));
    m = std::max(m, std::norm(at(nx_ - 1, iy)));
  }
  return m;
}

ComplexField sample_mode(const PhysicalSetup& setup, const ModeIndex& mode,
                         int n, double extent, double z) {
  if (!(extent > 0.0)) throw DomainError("sample_mode: extent must be > 0");
  const double d = extent / n;
  ComplexField field(n, n, d, d, z);
  for (int iy = 0; iy < n; ++iy) {
    const double y = field.y(iy);
    for (int ix = 0; ix < n; ++ix)
      field.at(ix, iy) = evaluate_mode(setup, mode, field.x(ix), y, z);
  }
  return field;
}

std::complex<double> sample_bilinear(const ComplexField& f, double x,
                                     double y) {
  const double fx = x / f.dx() + f.nx() / 2;
  const double fy = y / f.dy() + f.ny() / 2;
  const int ix = static_cast<int>(std::floor(fx));
  const int iy = static_cast<int>(std::floor(fy));
  if (ix < 0 || iy < 0 || ix + 1 >= f.nx() || iy + 1 >= f.ny()) return {0, 0};
  const double tx = fx - ix;
  const double ty = fy - iy;
  return (1 - tx) * (1 - ty) * f.at(ix, iy) + tx * (1 - ty) * f.at(ix + 1, iy) +
         (1 - tx) * ty * f.at(ix, iy + 1) + tx * ty * f.at(ix + 1, iy + 1);
}

ComplexField resample_bilinear(const ComplexField& field, double new_dx,
                               double new_dy) {
  ComplexField out(field.nx(), field.ny(), new_dx, new_dy, field.z());
  for (int iy = 0; iy < out.ny(); ++iy)
    for (int ix = 0; ix < out.nx(); ++ix)
      out.at(ix, iy) = sample_bilinear(field, out.x(ix), out.y(iy));
  const double n_in = field.norm();
  const double n_out = out.norm();
  if (n_out > 0.0) out.scale(std::sqrt(n_in / n_out));
  return out;
}

}  // namespace evb

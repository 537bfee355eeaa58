#include "evb/special.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

#include "evb/errors.hpp"

namespace evb {

double laguerre(int n, int alpha, double x) {
  if (n < 0) throw DomainError("laguerre: n must be >= 0");
  if (alpha < 0) throw DomainError("laguerre: alpha must be >= 0");
  if (n == 0) return 1.0;
  double lkm1 = 1.0;
  double lk = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double lkp1 =
        ((2.0 * k + 1.0 + alpha - x) * lk - (k + alpha) * lkm1) / (k + 1.0);
    lkm1 = lk;
    lk = lkp1;
  }
  return lk;
}

double wrapped_arctan(double a, double u) {
  // Reduce to the principal half-period before taking tan; this keeps full
  // precision near the branch points instead of feeding atan a huge argument
  // computed from a poorly conditioned tan(u).
  const double m = std::floor(u / std::numbers::pi + 0.5);
  const double ul = u - m * std::numbers::pi;  // in [-pi/2, pi/2)
  return std::atan(a * std::tan(ul)) + m * std::numbers::pi;
}

std::vector<double> bessel_j_sequence(int nmax, double x) {
  if (nmax < 0) throw DomainError("bessel_j_sequence: nmax must be >= 0");
  if (x < 0.0) throw DomainError("bessel_j_sequence: x must be >= 0");
  std::vector<double> j(nmax + 1, 0.0);
  if (x == 0.0) {
    j[0] = 1.0;
    return j;
  }
  // Start the downward recurrence well above both nmax and the turning point
  // k ~ x, where J_k(x) begins its super-exponential decay.
  const int start = nmax + 32 +
                    static_cast<int>(std::ceil(std::sqrt(50.0 * (nmax + 1)))) +
                    static_cast<int>(std::ceil(0.1 * x));
  double jkp1 = 0.0;
  double jk = 1e-300;
  double even_sum = 0.0;  // J_0 + 2 sum_{k even>0} J_k = 1
  for (int k = start; k >= 0; --k) {
    const double jkm1 = (2.0 * (k + 1) / x) * jk - jkp1;
    jkp1 = jk;
    jk = jkm1;
    if (k <= nmax) j[k] = jk;
    if (k % 2 == 0) even_sum += (k == 0) ? jk : 2.0 * jk;
    // Rescale to avoid overflow during the unnormalized recurrence.
    if (std::abs(jk) > 1e250) {
      jk *= 1e-250;
      jkp1 *= 1e-250;
      even_sum *= 1e-250;
      for (double& v : j) v *= 1e-250;
    }
  }
  for (double& v : j) v /= even_sum;
  return j;
}

std::vector<QuadratureNode> gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: n must be >= 1");
  std::vector<QuadratureNode> nodes(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev-based initial guess for the i-th positive root.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[i] = {-x, w};
    nodes[n - 1 - i] = {x, w};
  }
  return nodes;
}

}  // namespace evb

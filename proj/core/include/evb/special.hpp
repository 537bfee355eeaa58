#pragma once

#include <vector>

namespace evb {

// Generalized Laguerre polynomial L_n^alpha(x) by the stable three-term
// recurrence (not factorial expansion), alpha >= 0 integer.
double laguerre(int n, int alpha, double x);

// arctan(a * tan(u)) continued across tan branch points:
//   arctan(a tan u) + pi * floor(u / pi + 1/2).
// Continuous and monotone in u for a > 0; shared by the Gouy phase and the
// rotation-angle formulas so both use one branch rule.
double wrapped_arctan(double a, double u);

// Bessel functions of the first kind J_0..J_nmax(x) by downward (Miller)
// recurrence with even-order sum normalization. x >= 0.
std::vector<double> bessel_j_sequence(int nmax, double x);

// Gauss-Legendre nodes and weights on [-1, 1], Newton iteration on the
// Legendre recurrence.
struct QuadratureNode {
  double x;
  double weight;
};
std::vector<QuadratureNode> gauss_legendre(int n);

}  // namespace evb

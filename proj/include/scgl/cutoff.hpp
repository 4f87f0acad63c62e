#pragma once

#include <cmath>

// The smooth cutoff psi0: even, C^inf, psi0 = 1 on [-1/2,1/2], supp in [-1,1].
// Built from the standard smooth step s(t) = exp(-1/t) (t>0):
//   psi0(x) = s(2-2|x|) / (s(2-2|x|) + s(2|x|-1)).

namespace scgl {

inline double smooth_step_s(double t) {
  return t > 0.0 ? std::exp(-1.0 / t) : 0.0;
}

inline double psi0(double x) {
  const double u = std::abs(x);
  if (u <= 0.5) return 1.0;
  if (u >= 1.0) return 0.0;
  const double a = smooth_step_s(2.0 - 2.0 * u);
  const double b = smooth_step_s(2.0 * u - 1.0);
  return a / (a + b);
}

// multiplier of P_N = psi0(-N^{-2} Delta_A) at eigenvalue lambda^2
inline double pn_weight(double lambda_sq, int N) {
  return psi0(lambda_sq / (static_cast<double>(N) * N));
}

// multiplier of the Littlewood-Paley block Q_M at eigenvalue lambda^2;
// M = 1/2 is the low block psi0(-4 Delta_A).
inline double q_weight(double lambda_sq, double M) {
  if (M == 0.5) return psi0(4.0 * lambda_sq);
  return psi0(lambda_sq / (M * M)) - psi0(4.0 * lambda_sq / (M * M));
}

}  // namespace scgl

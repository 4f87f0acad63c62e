#pragma once

#include "scgl/types.hpp"

// Numerical Besov / Holder norms through the Littlewood-Paley blocks Q_M,
//   ||f||_{B^s_{p,q}} = || <M>^s ||Q_M f||_{L^p(grid)} ||_{l^q_M},
// <M> = (1+M^2)^{1/2}. L^p norms use grid quadrature with weight (2pi/n)^2;
// L^inf is the grid max, a lower bound of the true sup whose gap is controlled
// by oversampling (at least 4 grid points per shortest retained wavelength).

namespace scgl {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct BesovSpec {
  double s = 0.0;
  double p = kInf;
  double q = kInf;
  double m_max = 1.0;  // dyadic cap; blocks above contribute nothing for
                       // fields band-limited below m_max/2
  int n_eval = 0;      // fixed evaluation grid; 0 = per-block adaptive
};

double lp_norm(const GridField& f, double p);

// Requires f band-limited within m_max/2 (checked against the coefficients).
double besov_norm(const ModeField& f, const BesovSpec& spec);

// C^s = B^s_{inf,inf}; m_max chosen from the field's own band
double holder_norm(const ModeField& f, double s);

// spectral gradient (d1 f, d2 f) sampled on an n x n grid
std::pair<GridField, GridField> gradient_grid(const ModeField& f, int n_grid);

}  // namespace scgl

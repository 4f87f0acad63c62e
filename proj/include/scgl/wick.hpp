#pragma once

#include <vector>

#include "scgl/ou.hpp"
#include "scgl/types.hpp"

// Generalized Laguerre calculus and Wick-ordered powers of a complex Gaussian.
//
// Variance convention: every public operation takes the VARIANCE (what the
// generating-function scaling writes as sigma^2), so
//   laguerre_scaled(k, l, x, var) = var^k L_k^{(l)}(x / var).

namespace scgl {

// L_k^{(l)}(x) by the three-term recurrence (stable for the k used here)
double laguerre(int k, int l, double x);

double laguerre_scaled(int k, int l, double x, double var);

// central-difference residual of d/dx L_k^{(l)} = -L_{k-1}^{(l+1)}; test utility
double laguerre_derivative_residual(int k, int l, double x, double h);

// Wick power :z^{j1} zbar^{j2}: of a complex Gaussian with variance var:
//   j1 >= j2: (-1)^{j2} j2! L_{j2}^{(j1-j2)}(|z|^2; var) z^{j1-j2}
//   j2 >  j1: conjugate-symmetric counterpart
Complex wick_power(Complex z, double var, int j1, int j2);

// :|u|^{2m-2} u: = (-1)^{m-1}(m-1)! L_{m-1}^{(1)}(|u|^2; var) u
//               == wick_power(u, var, m, m-1)
Complex renormalized_monomial(Complex u, double var, int m);

// E[ L_k^{(l)}(|f|^2;sigma_f) f^l conj(L_k^{(l)}(|g|^2;sigma_g) g^l) ]
//   = ((k+l)!/k!) |cov|^{2k} cov^l,  cov = E[f conj(g)]
// (cross orders vanish).
Complex covariance_closed_form(int k, int l, Complex cov_fg);

// Brute-force Gaussian moment E[prod_i z_{f_i} prod_j conj(z_{g_j})] by
// summing over perfect matchings, given cov[i][j] = E[z_i conj(z_j)].
// Total degree <= 12. Test oracle only.
Complex isserlis_moment(const std::vector<int>& f_factors, const std::vector<int>& g_factors,
                        const std::vector<std::vector<Complex>>& cov);

// Residual of the Laguerre sum expansion
//   wick_power(x+y, var, m+1, m)
//     = sum_{j1<=m+1, j2<=m} C(m+1,j1) C(m,j2) x^{j1} xbar^{j2}
//         wick_power(y, var, m+1-j1, m-j2).
Complex wick_sum_expansion_residual(Complex x, Complex y, double var, int m);

// Empirical ||P(g)||_{L^p} / ||P(g)||_{L^2} for a degree-k Hermite polynomial
// of a standard Gaussian; bounded by (p-1)^{k/2}.
double chaos_hypercontractivity_ratio(int degree, double p, int samples, RngStream& stream);

// The family Xi_{j1,j2}(x) = wick_power(Psi_N(t,x), sigma_N(t), j1, j2) on the
// grid, 0 <= j1 <= m, 0 <= j2 <= m-1, Xi_{0,0} = 1.
struct WickData {
  int m = 2;
  int n_grid = 0;
  double t = 0.0;
  int N = 0;
  double sigma = 0.0;
  std::vector<GridField> xi;  // index j1*m + j2

  const GridField& at(int j1, int j2) const { return xi[static_cast<size_t>(j1) * m + j2]; }
  GridField& at(int j1, int j2) { return xi[static_cast<size_t>(j1) * m + j2]; }
  std::string slice_csv(int j1, int j2) const;
};

// Builds all entries from the current OU state; sigma = sigma_n at state.t
// unless sigma_override >= 0 is supplied. Requires the grid to hold Psi_N
// alias-free (n_grid > 2*(N + |a|_inf)).
WickData build_wick_data(const OUState& state, const Params& params, int n_grid,
                         double sigma_override = -1.0);

}  // namespace scgl

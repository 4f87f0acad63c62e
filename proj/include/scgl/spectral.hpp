#pragma once

#include <functional>

#include "scgl/cutoff.hpp"
#include "scgl/types.hpp"

// Functional calculus of -Delta_A on the torus: spectral multipliers, the
// smooth projector P_N, Littlewood-Paley blocks Q_M, eigenvalue counting and
// the regularized Green's function.

namespace scgl {

ModeSetPtr enumerate_modes(MagneticPotential a, int k_max);

// coeffs[k] *= mult(lambda_k^2)
ModeField apply_multiplier(const ModeField& f, const std::function<Complex(double)>& mult);

// P_N = psi0(-N^{-2} Delta_A); requires N >= 1
ModeField projector_pn(const ModeField& f, int N);

// Q_M block, M dyadic in {1/2, 1, 2, 4, ...}
ModeField dyadic_block_qm(const ModeField& f, double M);

bool is_dyadic(double M);

// #{ n : lambda_n <= Lambda }. Reliable only while the cutoff cannot truncate
// the count: requires Lambda <= k_max - |a|_inf - 1.
int weyl_count(const ModeSet& set, double Lambda);

// torus geodesic distance between points of [0,2pi)^2
double torus_distance(double x1, double x2, double y1, double y2);

// (psi0(-N1^{-2}Delta_A) (x) psi0(-N2^{-2}Delta_A)) G_A(x,y)
//   = sum_{lambda >= lambda_+} psi0(l2/N1^2) psi0(l2/N2^2) phi(x) phi-bar(y) / l2.
// Requires set.k_max >= 2*max(N1,N2).
Complex green_regularized(const ModeSet& set, int N1, int N2,
                          const std::array<double, 2>& x, const std::array<double, 2>& y);

// Table of the same kernel over grid offsets d = x - y (translation invariance
// of constant-A operators): entry (i,j) is the kernel at offset (2pi i/n, 2pi j/n).
GridField green_regularized_table(MagneticPotential a, int N1, int N2, int n_grid);

// Kernel table of psi0(-h^2 Delta_A) over grid offsets.
GridField multiplier_kernel_table(MagneticPotential a, double h, int n_grid);

}  // namespace scgl

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

// Core value types for fields on the flat 2-torus [0,2pi)^2 with the
// magnetic Laplacian -Delta_A, A = a1 dx1 + a2 dx2 constant.
// Eigenfunctions phi_k(x) = e^{ik.x}/(2pi), eigenvalues lambda_k^2 = |k-a|^2.

namespace scgl {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kTorusArea = kTwoPi * kTwoPi;

struct MagneticPotential {
  double a1 = 0.0;
  double a2 = 0.0;

  // a is gauge-trivial iff both components are integers (A exact).
  bool gauge_trivial() const {
    return a1 == std::floor(a1) && a2 == std::floor(a2);
  }
  double max_abs() const { return std::max(std::abs(a1), std::abs(a2)); }
};

struct Mode {
  int k1 = 0;
  int k2 = 0;
  double lambda_sq = 0.0;
};

// All lattice modes with |k|_inf <= k_max, sorted by lambda_sq ascending,
// ties broken lexicographically by (k1,k2).
class ModeSet {
 public:
  static std::shared_ptr<const ModeSet> create(MagneticPotential a, int k_max);

  int size() const { return static_cast<int>(modes_.size()); }
  const Mode& operator[](int i) const { return modes_[i]; }
  const std::vector<Mode>& modes() const { return modes_; }

  const MagneticPotential& potential() const { return a_; }
  int k_max() const { return k_max_; }

  // min{lambda_n > 0}; NaN when no positive eigenvalue exists.
  double lambda_plus() const { return lambda_plus_; }
  // index of the lambda^2 = 0 mode, -1 when A is not exact
  int zero_mode_index() const { return zero_index_; }

  // position of lattice vector (k1,k2), -1 if outside the cutoff
  int index_of(int k1, int k2) const;
  // index of (-k1,-k2)
  int conjugate_index(int i) const;

  std::string to_csv() const;

 private:
  ModeSet() = default;
  std::vector<Mode> modes_;
  std::vector<int> lookup_;  // (2k_max+1)^2 table, lattice -> sorted index
  MagneticPotential a_;
  int k_max_ = 0;
  double lambda_plus_ = 0.0;
  int zero_index_ = -1;
};

using ModeSetPtr = std::shared_ptr<const ModeSet>;

// Spectral coefficients aligned with a ModeSet; the field is
// sum_k coeffs[k] phi_k.
struct ModeField {
  ModeSetPtr set;
  std::vector<Complex> coeffs;

  ModeField() = default;
  explicit ModeField(ModeSetPtr s) : set(std::move(s)), coeffs(set->size(), Complex(0.0)) {}

  int size() const { return static_cast<int>(coeffs.size()); }
};

// Complex values on an n x n uniform grid, x_i = 2pi i/n, row-major (ix*n+iy).
struct GridField {
  int n = 0;
  std::vector<Complex> v;

  GridField() = default;
  explicit GridField(int n_grid) : n(n_grid), v(static_cast<size_t>(n_grid) * n_grid, Complex(0.0)) {}

  Complex& at(int ix, int iy) { return v[static_cast<size_t>(ix) * n + iy]; }
  const Complex& at(int ix, int iy) const { return v[static_cast<size_t>(ix) * n + iy]; }
};

// Physical constants of the equation. alpha1 > 0, gamma > 0, m >= 2 enforced.
struct Params {
  double alpha1 = 1.0;
  double alpha2 = 0.0;
  double beta1 = 1.0;
  double beta2 = 0.0;
  double gamma = 1.0;
  int m = 2;
  MagneticPotential a;

  void validate() const {
    if (!(alpha1 > 0.0)) throw std::invalid_argument("Params: alpha1 must be > 0");
    if (!(gamma > 0.0)) throw std::invalid_argument("Params: gamma must be > 0");
    if (m < 2) throw std::invalid_argument("Params: m must be >= 2");
    if (!std::isfinite(alpha2) || !std::isfinite(beta1) || !std::isfinite(beta2) ||
        !std::isfinite(a.a1) || !std::isfinite(a.a2))
      throw std::invalid_argument("Params: non-finite entry");
  }
};

inline bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

inline int next_pow2(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace scgl

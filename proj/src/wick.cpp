#include "scgl/wick.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "scgl/fft.hpp"

namespace scgl {

double laguerre(int k, int l, double x) {
  if (k < 0 || l < 0) throw std::invalid_argument("laguerre: k and l must be >= 0");
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + l - x;
  for (int i = 1; i < k; ++i) {
    const double next = ((2.0 * i + 1.0 + l - x) * cur - (i + l) * prev) / (i + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre_scaled(int k, int l, double x, double var) {
  if (!(var > 0.0)) throw std::invalid_argument("laguerre_scaled: var must be > 0");
  return std::pow(var, k) * laguerre(k, l, x / var);
}

double laguerre_derivative_residual(int k, int l, double x, double h) {
  if (k < 1) throw std::invalid_argument("laguerre_derivative_residual: k must be >= 1");
  const double fd = (laguerre(k, l, x + h) - laguerre(k, l, x - h)) / (2.0 * h);
  return fd - (-laguerre(k - 1, l + 1, x));
}

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double b = 1.0;
  for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return std::round(b);
}

Complex ipow(Complex z, int p) {
  Complex r(1.0);
  for (int i = 0; i < p; ++i) r *= z;
  return r;
}

}  // namespace

Complex wick_power(Complex z, double var, int j1, int j2) {
  if (j1 < 0 || j2 < 0) throw std::invalid_argument("wick_power: orders must be >= 0");
  if (!(var > 0.0)) throw std::invalid_argument("wick_power: var must be > 0");
  if (j1 >= j2) {
    const double lag = laguerre_scaled(j2, j1 - j2, std::norm(z), var);
    const double sign = (j2 % 2 == 0) ? 1.0 : -1.0;
    return sign * factorial(j2) * lag * ipow(z, j1 - j2);
  }
  return std::conj(wick_power(std::conj(z), var, j2, j1));
}

Complex renormalized_monomial(Complex u, double var, int m) {
  if (m < 2) throw std::invalid_argument("renormalized_monomial: m must be >= 2");
  return wick_power(u, var, m, m - 1);
}

Complex covariance_closed_form(int k, int l, Complex cov_fg) {
  double c = 1.0;
  for (int i = k + 1; i <= k + l; ++i) c *= i;  // (k+l)!/k!
  return c * std::pow(std::norm(cov_fg), k) * ipow(cov_fg, l);
}

Complex isserlis_moment(const std::vector<int>& f_factors, const std::vector<int>& g_factors,
                        const std::vector<std::vector<Complex>>& cov) {
  if (f_factors.size() + g_factors.size() > 12)
    throw std::invalid_argument("isserlis_moment: degree too large");
  if (f_factors.size() != g_factors.size()) return Complex(0.0);  // circular symmetry
  const int n = static_cast<int>(f_factors.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Complex sum(0.0);
  do {
    Complex prod(1.0);
    for (int i = 0; i < n; ++i) prod *= cov[f_factors[i]][g_factors[perm[i]]];
    sum += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

Complex wick_sum_expansion_residual(Complex x, Complex y, double var, int m) {
  const Complex lhs = wick_power(x + y, var, m + 1, m);
  Complex rhs(0.0);
  for (int j1 = 0; j1 <= m + 1; ++j1)
    for (int j2 = 0; j2 <= m; ++j2)
      rhs += binom(m + 1, j1) * binom(m, j2) * ipow(x, j1) * ipow(std::conj(x), j2) *
             wick_power(y, var, m + 1 - j1, m - j2);
  return lhs - rhs;
}

namespace {

// probabilists' Hermite polynomial He_k: chaos of order exactly k
double hermite(int k, double x) {
  if (k == 0) return 1.0;
  double prev = 1.0, cur = x;
  for (int i = 1; i < k; ++i) {
    const double next = x * cur - i * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

double chaos_hypercontractivity_ratio(int degree, double p, int samples, RngStream& stream) {
  if (degree < 0 || degree > 8) throw std::invalid_argument("chaos ratio: degree out of range");
  if (!(p >= 2.0)) throw std::invalid_argument("chaos ratio: p must be >= 2");
  if (degree == 0) return 1.0;
  double sp = 0.0, s2 = 0.0;
  for (int i = 0; i < samples; ++i) {
    const auto z = gaussian_pair(stream, stream.step, static_cast<uint32_t>(i), DrawPurpose::kGeneric);
    for (double g : {z[0], z[1]}) {
      const double val = hermite(degree, g);
      sp += std::pow(std::abs(val), p);
      s2 += val * val;
    }
  }
  ++stream.step;
  const double n = 2.0 * samples;
  return std::pow(sp / n, 1.0 / p) / std::sqrt(s2 / n);
}

std::string WickData::slice_csv(int j1, int j2) const {
  std::ostringstream os;
  os.precision(17);
  os << "# {\"j1\": " << j1 << ", \"j2\": " << j2 << ", \"t\": " << t << ", \"N\": " << N
     << ", \"n_grid\": " << n_grid << ", \"sigma\": " << sigma << "}\n";
  os << "ix,iy,re,im\n";
  const GridField& g = at(j1, j2);
  for (int i = 0; i < n_grid; ++i)
    for (int j = 0; j < n_grid; ++j)
      os << i << "," << j << "," << g.at(i, j).real() << "," << g.at(i, j).imag() << "\n";
  return os.str();
}

WickData build_wick_data(const OUState& state, const Params& params, int n_grid,
                         double sigma_override) {
  const ModeSet& set = *state.psi().set;
  const int band = state.truncation() + static_cast<int>(std::ceil(set.potential().max_abs()));
  if (n_grid <= 2 * band)
    throw std::invalid_argument("build_wick_data: grid too small to hold Psi_N alias-free");
  WickData wd;
  wd.m = params.m;
  wd.n_grid = n_grid;
  wd.t = state.t();
  wd.N = state.truncation();
  wd.sigma = sigma_override >= 0.0 ? sigma_override : sigma_n(params, set, wd.N, wd.t);
  const GridField psi = to_grid(state.psi(), n_grid);
  wd.xi.assign(static_cast<size_t>(params.m + 1) * params.m, GridField(n_grid));
  for (int j1 = 0; j1 <= params.m; ++j1)
    for (int j2 = 0; j2 <= params.m - 1; ++j2) {
      GridField& out = wd.at(j1, j2);
      if (j1 == 0 && j2 == 0) {
        std::fill(out.v.begin(), out.v.end(), Complex(1.0));
        continue;
      }
      for (size_t i = 0; i < psi.v.size(); ++i) out.v[i] = wick_power(psi.v[i], wd.sigma, j1, j2);
    }
  return wd;
}

}  // namespace scgl

#include "scgl/besov.hpp"

#include <cmath>

#include "scgl/cutoff.hpp"
#include "scgl/fft.hpp"
#include "scgl/spectral.hpp"

namespace scgl {

double lp_norm(const GridField& f, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1 or inf");
  if (p == kInf) {
    double mx = 0.0;
    for (const Complex& z : f.v) mx = std::max(mx, std::abs(z));
    return mx;
  }
  const double cell = (kTwoPi / f.n) * (kTwoPi / f.n);
  double s = 0.0;
  for (const Complex& z : f.v) s += std::pow(std::abs(z), p);
  return std::pow(s * cell, 1.0 / p);
}

namespace {

double jap_bracket(double M) { return std::sqrt(1.0 + M * M); }

// largest |k|_inf carried by a nonzero coefficient (relative threshold)
int field_band(const ModeField& f, double rel_tol = 1e-12) {
  double cmax = 0.0;
  for (const Complex& c : f.coeffs) cmax = std::max(cmax, std::abs(c));
  if (cmax == 0.0) return 0;
  int band = 0;
  for (int i = 0; i < f.size(); ++i)
    if (std::abs(f.coeffs[i]) > rel_tol * cmax) {
      const Mode& mk = (*f.set)[i];
      band = std::max({band, std::abs(mk.k1), std::abs(mk.k2)});
    }
  return band;
}

// grid for evaluating a block with this |k|_inf band: >= 4 points per
// shortest wavelength when the set allows, floor of 32, never beyond the
// minimal alias-free grid of the whole set
int eval_grid(int band, int set_k_max) {
  const int want = std::max(32, 4 * (band + 1));
  const int cap = std::max(32, next_pow2(2 * (set_k_max + 1)));
  return std::min(next_pow2(want), cap);
}

}  // namespace

double besov_norm(const ModeField& f, const BesovSpec& spec) {
  if (!is_dyadic(spec.m_max) || spec.m_max < 1.0)
    throw std::invalid_argument("besov_norm: m_max must be dyadic >= 1");
  double cmax = 0.0;
  for (const Complex& c : f.coeffs) cmax = std::max(cmax, std::abs(c));
  if (cmax == 0.0) return 0.0;
  const double band_limit = spec.m_max / 2.0;
  for (int i = 0; i < f.size(); ++i)
    if (std::abs(f.coeffs[i]) > 1e-12 * cmax &&
        std::sqrt((*f.set)[i].lambda_sq) > band_limit)
      throw std::invalid_argument("besov_norm: field carries modes above m_max/2");

  const bool sup_q = (spec.q == kInf);
  double acc = 0.0;
  ModeField block(f.set);
  for (double M = 0.5; M <= spec.m_max; M *= 2.0) {
    double wmax = 0.0;
    int band = 0;
    for (int i = 0; i < f.size(); ++i) {
      const Mode& mk = (*f.set)[i];
      const double w = q_weight(mk.lambda_sq, M);
      const Complex c = std::abs(f.coeffs[i]) > 1e-12 * cmax ? f.coeffs[i] : Complex(0.0);
      block.coeffs[i] = c * w;
      const double mag = std::abs(block.coeffs[i]);
      if (mag > 0.0) {
        wmax = std::max(wmax, mag);
        band = std::max({band, std::abs(mk.k1), std::abs(mk.k2)});
      }
    }
    if (wmax == 0.0) continue;
    const int n = spec.n_eval > 0 ? spec.n_eval : eval_grid(band, f.set->k_max());
    const double lp = lp_norm(to_grid(block, n), spec.p);
    const double term = std::pow(jap_bracket(M), spec.s) * lp;
    if (sup_q)
      acc = std::max(acc, term);
    else
      acc += std::pow(term, spec.q);
  }
  return sup_q ? acc : std::pow(acc, 1.0 / spec.q);
}

double holder_norm(const ModeField& f, double s) {
  const int band = field_band(f);
  const double lam_max =
      band == 0 ? 1.0 : std::sqrt(2.0) * band + f.set->potential().max_abs();
  double m_max = 1.0;
  while (m_max < 2.0 * lam_max) m_max *= 2.0;
  return besov_norm(f, BesovSpec{s, kInf, kInf, m_max});
}

std::pair<GridField, GridField> gradient_grid(const ModeField& f, int n_grid) {
  ModeField d1(f.set), d2(f.set);
  for (int i = 0; i < f.size(); ++i) {
    const Mode& mk = (*f.set)[i];
    d1.coeffs[i] = f.coeffs[i] * Complex(0.0, mk.k1);
    d2.coeffs[i] = f.coeffs[i] * Complex(0.0, mk.k2);
  }
  return {to_grid(d1, n_grid), to_grid(d2, n_grid)};
}

}  // namespace scgl

#pragma once

#include "scgl/noise.hpp"
#include "scgl/types.hpp"

// The truncated stochastic convolution Psi_N as an exactly-sampled per-mode
// complex Ornstein-Uhlenbeck process. Nonzero modes are stationary with
// variance gamma * w_k^2 / (alpha1 * lambda_k^2), w_k = psi0(lambda_k^2/N^2);
// the zero mode (present only for exact A) is the Brownian branch
// sqrt(2 gamma) B_0(t), started at 0.
//
// All draws are keyed by (step, mode), so runs at different N driven by the
// same stream share the underlying noise path: pathwise, Psi_N = P_N Psi.

namespace scgl {

class OUState {
 public:
  // Stationary sample at t = 0 (consumes one stream tick).
  static OUState init_stationary(const Params& params, const ModeSetPtr& set, int N,
                                 RngStream& stream,
                                 NoiseCoupling coupling = NoiseCoupling::kIdentity);

  // Exact one-step update over delta_t > 0 (consumes one stream tick).
  // Distributionally exact for any step size.
  void evolve(const Params& params, double delta_t, RngStream& stream,
              NoiseCoupling coupling = NoiseCoupling::kIdentity);

  const ModeField& psi() const { return psi_; }
  double t() const { return t_; }
  int truncation() const { return N_; }
  const std::vector<double>& weights() const { return w_; }

  std::string snapshot_csv(uint64_t seed) const;

 private:
  ModeField psi_;
  std::vector<double> w_;
  double t_ = 0.0;
  int N_ = 0;
};

// sigma_N(t) = sum_{lambda >= lambda_+} psi0(l2/N^2)^2 gamma |phi|^2/(alpha1 l2)
//            + [lambda_0 = 0] 2 gamma t |phi_0|^2.
// x-independent on the torus (|phi|^2 = 1/(4 pi^2)), so a scalar.
// Requires the mode set to cover lambda^2 < N^2.
double sigma_n(const Params& params, const ModeSet& set, int N, double t);

// time-independent part of sigma_n (cacheable when lambda_0 > 0)
double sigma_n_spatial(const Params& params, const ModeSet& set, int N);

}  // namespace scgl

#pragma once

#include <optional>

#include "scgl/besov.hpp"
#include "scgl/wick.hpp"

// Time integration of the remainder equation
//   dv/dt = (alpha1 + i alpha2) Delta_A v - F(v, Xi),
//   F(v, Xi) = (beta1 + i beta2) sum C(m,j1) C(m-1,j2) v^{j1} vbar^{j2} Xi_{m-j1,m-j2-1},
// of the direct renormalized truncated equation for u_N, and the
// dissipativity validator for the global regime.
//
// Integrator: exponential Euler with the phi1 weight,
//   vhat <- e^{-z l2 dt} vhat - dt phi1(-z l2 dt) Fhat,  z = alpha1 + i alpha2,
// exact on the linear part and unconditionally stable for alpha1 > 0.
// Nonlinear products are evaluated on a grid with n >= 2 m N and re-projected
// by P_N, which keeps the retained band alias-free.

namespace scgl {

struct Window {
  double lo = 0.0;
  double hi = 0.0;
  bool empty() const { return !(lo < hi); }
};

struct DissipativityReport {
  double r = 0.0;           // alpha1/|alpha2|, inf when alpha2 == 0
  double rhs_bound = 0.0;   // 2 + 2 (r^2 + r sqrt(1+r^2))
  Window condition_window;  // (2m-1, rhs_bound)
  Window matrix_window;     // PSD window of the printed quadratic-form matrix
  Window p_window;          // intersection of the two
  double eta_star = 0.0;    // largest eta in [0,1/4] keeping the form PSD at p_used
  double p_used = 0.0;
  bool windows_disagree = false;
  bool covered() const { return !p_window.empty(); }
};

// Validates the global-existence regime. Throws when beta1 <= 0 (focusing).
// When p is not supplied the window midpoint is used for eta_star.
DissipativityReport validate_global(const Params& params, std::optional<double> p = std::nullopt);

// Pointwise nonlinearity assembly; v and Xi must share the grid.
GridField build_f(const GridField& v, const WickData& xi, const Params& params);

// One exponential-Euler step of the remainder equation. The nonlinearity is
// re-projected by P_N(trunc_n).
ModeField step_v(const ModeField& v, const WickData& xi, const Params& params, double dt,
                 int trunc_n);

// One exponential-Euler step of the direct renormalized equation; the noise
// increment is the exact OU increment drawn from the stream (shared keying
// with OUState so coupled runs use literally the same draws).
ModeField step_u_direct(const ModeField& u, const Params& params, double sigma,
                        RngStream& stream, double dt, int trunc_n, int n_grid,
                        NoiseCoupling coupling = NoiseCoupling::kIdentity);

enum class InitKind { kZero, kGiven, kRough };

struct RunConfig {
  int N = 16;
  int n_grid = 0;       // 0: smallest power of two >= 2 m N
  double dt = 1e-3;
  double t_final = 1.0;
  InitKind init = InitKind::kZero;
  std::vector<Complex> init_coeffs;  // for kGiven, aligned with the run's mode set order
  double init_norm = 1.0;            // target C^{s0} norm for kRough
  double s0 = -0.2;
  double epsilon = 0.1;   // (0, 0.25]
  double p_monitor = 4.0;
  int q_time = 20;
  double noise_dt = 0.0;  // 0: = dt; otherwise dt must be an integer multiple
  int record_stride = 1;
  double blowup_threshold = 1e4;  // local-window threshold on lp_norm(v, p)
  bool cn_constant = false;       // m=2 only: renormalize by C_N = gamma/(2 pi alpha1) log N

  void validate(const Params& params) const;
  int grid(const Params& params) const;
};

enum class RunStatus { kCompleted, kThresholdExceeded, kNumericalBlowup };

struct TrajectorySample {
  double t = 0.0;
  double holder_s0 = 0.0;
  double weighted_c2eps = 0.0;  // t^{(2 eps - s0)/2} ||v||_{C^{2 eps}}
  double lp_p = 0.0;
  double lp_2 = 0.0;
  double xi_norm = 0.0;  // max over entries of ||Xi_{j1,j2}(t)||_{C^{-eps}}
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  RunStatus status = RunStatus::kCompleted;
  double t_end = 0.0;
  double xi_z_norm = 0.0;  // discrete L^q_T of xi_norm over the recorded times

  bool failed() const { return status == RunStatus::kNumericalBlowup; }
};

// Co-evolves Psi_N exactly (noise_dt substeps), rebuilds the Wick data each
// step, steps v, and records the monitor series.
Trajectory run_dpd(const RunConfig& config, const Params& params, RngStream& stream,
                   NoiseCoupling coupling = NoiseCoupling::kIdentity);

struct ConsistencyResult {
  double rel_l2 = 0.0;  // ||u - (Psi+v)||_2 / ||u||_2 at t_final
  double u_l2 = 0.0;
};

// Same Wiener path for both routes: the reference (Psi, v) advances at dt_ref,
// u_direct at dt (an integer multiple) with the noise increment composed
// exactly across its substeps.
ConsistencyResult run_splitting_consistency(const RunConfig& config, const Params& params,
                                            double dt_ref, RngStream& stream,
                                            NoiseCoupling coupling = NoiseCoupling::kIdentity);

}  // namespace scgl

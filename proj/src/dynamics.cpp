#include "scgl/dynamics.hpp"

#include <cmath>

#include "scgl/fft.hpp"
#include "scgl/spectral.hpp"

namespace scgl {

namespace {

constexpr double kZeroEigTol = 1e-12;

double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double b = 1.0;
  for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return std::round(b);
}

Complex phi1(Complex w) {
  if (std::abs(w) < 1e-8) return 1.0 + w / 2.0 + w * w / 6.0;
  return (std::exp(w) - 1.0) / w;
}

// per-mode exponential-Euler tables
struct Stepper {
  std::vector<Complex> decay;
  std::vector<Complex> phi1_dt;
  std::vector<double> w;
  double dt;

  Stepper(const ModeSet& set, const Params& params, double dt_in, int trunc_n) : dt(dt_in) {
    const Complex z(params.alpha1, params.alpha2);
    decay.resize(set.size());
    phi1_dt.resize(set.size());
    w.resize(set.size());
    for (int i = 0; i < set.size(); ++i) {
      const double l2 = set[i].lambda_sq;
      decay[i] = std::exp(-z * l2 * dt);
      phi1_dt[i] = phi1(-z * l2 * dt);
      w[i] = pn_weight(l2, trunc_n);
    }
  }

  void apply(ModeField& v, const ModeField& f_hat) const {
    for (int i = 0; i < v.size(); ++i)
      v.coeffs[i] = decay[i] * v.coeffs[i] - dt * phi1_dt[i] * (w[i] * f_hat.coeffs[i]);
  }
};

bool finite(const ModeField& f) {
  for (const Complex& c : f.coeffs)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  return true;
}

int mode_cutoff(const Params& params, int N) {
  return N + static_cast<int>(std::ceil(params.a.max_abs()));
}

double cn_log_constant(const Params& params, int N) {
  return params.gamma / (kTwoPi * params.alpha1) * std::log(static_cast<double>(N));
}

}  // namespace

DissipativityReport validate_global(const Params& params, std::optional<double> p) {
  params.validate();
  if (!(params.beta1 > 0.0))
    throw std::invalid_argument("validate_global: requires beta1 > 0 (defocusing)");
  DissipativityReport rep;
  const bool no_dispersion = params.alpha2 == 0.0;
  rep.r = no_dispersion ? kInf : params.alpha1 / std::abs(params.alpha2);
  rep.rhs_bound = no_dispersion
                      ? kInf
                      : 2.0 + 2.0 * (rep.r * rep.r + rep.r * std::sqrt(1.0 + rep.r * rep.r));
  rep.condition_window = {2.0 * params.m - 1.0, rep.rhs_bound};
  if (no_dispersion) {
    rep.matrix_window = {1.0, kInf};
  } else {
    const double root = 2.0 * std::sqrt(rep.r * rep.r + rep.r);
    rep.matrix_window = {2.0 + 2.0 * rep.r - root, 2.0 + 2.0 * rep.r + root};
  }
  rep.p_window = {std::max(rep.condition_window.lo, rep.matrix_window.lo),
                  std::min(rep.condition_window.hi, rep.matrix_window.hi)};
  rep.windows_disagree =
      !no_dispersion && (std::abs(rep.condition_window.hi - rep.matrix_window.hi) >
                         1e-9 * (1.0 + std::abs(rep.condition_window.hi)));

  if (p.has_value())
    rep.p_used = *p;
  else if (rep.p_window.empty())
    rep.p_used = std::nan("");
  else
    rep.p_used = std::isfinite(rep.p_window.hi) ? 0.5 * (rep.p_window.lo + rep.p_window.hi)
                                                : rep.p_window.lo + 1.0;

  // largest eta in [0, 1/4] keeping the form nonnegative at p_used
  auto psd = [&](double eta) {
    const double pp = rep.p_used;
    const double m22 = (pp - 1.0) / 4.0 - eta;
    if (eta > 0.25 || m22 < 0.0) return false;
    if (no_dispersion) return true;
    const double m11 = (0.25 - eta) * rep.r;
    const double off = (pp - 2.0) / 8.0;
    return m11 * m22 - off * off >= 0.0;
  };
  if (!std::isnan(rep.p_used) && psd(0.0)) {
    double lo = 0.0, hi = 0.25;
    for (int it = 0; it < 64; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (psd(mid))
        lo = mid;
      else
        hi = mid;
    }
    rep.eta_star = lo;
  }
  return rep;
}

GridField build_f(const GridField& v, const WickData& xi, const Params& params) {
  if (v.n != xi.n_grid) throw std::invalid_argument("build_f: grid mismatch");
  const int m = params.m;
  const Complex beta(params.beta1, params.beta2);
  GridField out(v.n);
  std::vector<Complex> vp(m + 1), vq(m);
  for (size_t idx = 0; idx < v.v.size(); ++idx) {
    const Complex z = v.v[idx];
    const Complex zb = std::conj(z);
    vp[0] = 1.0;
    for (int j = 1; j <= m; ++j) vp[j] = vp[j - 1] * z;
    vq[0] = 1.0;
    for (int j = 1; j <= m - 1; ++j) vq[j] = vq[j - 1] * zb;
    Complex acc(0.0);
    for (int j1 = 0; j1 <= m; ++j1)
      for (int j2 = 0; j2 <= m - 1; ++j2)
        acc += binom(m, j1) * binom(m - 1, j2) * vp[j1] * vq[j2] *
               xi.at(m - j1, m - 1 - j2).v[idx];
    out.v[idx] = beta * acc;
  }
  return out;
}

ModeField step_v(const ModeField& v, const WickData& xi, const Params& params, double dt,
                 int trunc_n) {
  if (!(dt > 0.0)) throw std::invalid_argument("step_v: dt must be > 0");
  const Stepper st(*v.set, params, dt, trunc_n);
  const GridField vg = to_grid(v, xi.n_grid);
  const ModeField f_hat = to_modes(build_f(vg, xi, params), v.set);
  ModeField out = v;
  st.apply(out, f_hat);
  return out;
}

ModeField step_u_direct(const ModeField& u, const Params& params, double sigma,
                        RngStream& stream, double dt, int trunc_n, int n_grid,
                        NoiseCoupling coupling) {
  if (!(dt > 0.0)) throw std::invalid_argument("step_u_direct: dt must be > 0");
  const ModeSet& set = *u.set;
  const Stepper st(set, params, dt, trunc_n);
  const Complex beta(params.beta1, params.beta2);
  GridField ug = to_grid(u, n_grid);
  for (Complex& z : ug.v) z = beta * renormalized_monomial(z, sigma, params.m);
  const ModeField g_hat = to_modes(ug, u.set);
  ModeField out = u;
  st.apply(out, g_hat);
  // exact OU increment, same keying as OUState::evolve
  for (int i = 0; i < set.size(); ++i) {
    int j = i;
    if (coupling == NoiseCoupling::kConjugate) j = set.conjugate_index(i);
    const auto zr = gaussian_pair(stream, stream.step, static_cast<uint32_t>(j),
                                  DrawPurpose::kOuStep);
    Complex g(zr[0], zr[1]);
    if (coupling == NoiseCoupling::kConjugate) g = std::conj(g);
    const double l2 = set[i].lambda_sq;
    if (l2 <= kZeroEigTol) {
      out.coeffs[i] += std::sqrt(2.0 * params.gamma) * std::sqrt(dt / 2.0) * st.w[i] * g;
    } else {
      const double var = params.gamma * st.w[i] * st.w[i] / (params.alpha1 * l2) *
                         (1.0 - std::exp(-2.0 * params.alpha1 * l2 * dt));
      out.coeffs[i] += std::sqrt(var / 2.0) * g;
    }
  }
  ++stream.step;
  return out;
}

void RunConfig::validate(const Params& params) const {
  params.validate();
  if (N < 1) throw std::invalid_argument("RunConfig: N must be >= 1");
  if (!(dt > 0.0) || !(t_final > 0.0)) throw std::invalid_argument("RunConfig: dt, t_final > 0");
  const double s0_lo = -2.0 / (2.0 * params.m - 1.0);
  if (!(s0 > s0_lo && s0 < 0.0))
    throw std::invalid_argument("RunConfig: s0 must lie in (-2/(2m-1), 0)");
  if (!(epsilon > 0.0 && epsilon <= 0.25))
    throw std::invalid_argument("RunConfig: epsilon must lie in (0, 0.25]");
  if (!(p_monitor >= 1.0)) throw std::invalid_argument("RunConfig: p must be >= 1");
  if (q_time < 1) throw std::invalid_argument("RunConfig: q must be >= 1");
  if (record_stride < 1) throw std::invalid_argument("RunConfig: record_stride must be >= 1");
  if (n_grid != 0) {
    if (!is_pow2(n_grid) || n_grid < 2 * params.m * N)
      throw std::invalid_argument("RunConfig: n_grid must be a power of two >= 2 m N");
  }
  if (noise_dt != 0.0) {
    const double k = dt / noise_dt;
    if (!(noise_dt > 0.0) || std::abs(k - std::round(k)) > 1e-9 || k < 1.0)
      throw std::invalid_argument("RunConfig: dt must be an integer multiple of noise_dt");
  }
  if (cn_constant && params.m != 2)
    throw std::invalid_argument("RunConfig: the log-N renormalization constant is m=2 only");
}

int RunConfig::grid(const Params& params) const {
  return n_grid != 0 ? n_grid : next_pow2(2 * params.m * N);
}

namespace {

ModeField initial_remainder(const RunConfig& cfg, const Params& params, const ModeSetPtr& set,
                            RngStream& stream, NoiseCoupling coupling) {
  ModeField v(set);
  switch (cfg.init) {
    case InitKind::kZero:
      break;
    case InitKind::kGiven: {
      if (cfg.init_coeffs.size() != static_cast<size_t>(set->size()))
        throw std::invalid_argument("RunConfig: init_coeffs size mismatch");
      v.coeffs = cfg.init_coeffs;
      break;
    }
    case InitKind::kRough: {
      // Gaussian coefficients with variance <lambda>^{-2-2 s0}, rescaled to the
      // target Holder norm; band-limited to the run
      for (int i = 0; i < set->size(); ++i) {
        const double l2 = (*set)[i].lambda_sq;
        if (pn_weight(l2, cfg.N) == 0.0) continue;
        int j = i;
        if (coupling == NoiseCoupling::kConjugate) j = set->conjugate_index(i);
        const auto z = gaussian_pair(stream, stream.step, static_cast<uint32_t>(j),
                                     DrawPurpose::kInitialData);
        Complex g(z[0], z[1]);
        if (coupling == NoiseCoupling::kConjugate) g = std::conj(g);
        const double sd = std::pow(1.0 + l2, (-2.0 - 2.0 * cfg.s0) / 4.0);
        v.coeffs[i] = sd / std::sqrt(2.0) * g;
      }
      ++stream.step;
      const double nrm = holder_norm(v, cfg.s0);
      if (nrm > 0.0)
        for (Complex& c : v.coeffs) c *= cfg.init_norm / nrm;
      break;
    }
  }
  return v;
}

}  // namespace

Trajectory run_dpd(const RunConfig& config, const Params& params, RngStream& stream,
                   NoiseCoupling coupling) {
  config.validate(params);
  const int n_grid = config.grid(params);
  const auto set = ModeSet::create(params.a, mode_cutoff(params, config.N));
  // mode set covering the full grid band, for norms of the Xi entries
  const auto norm_set = ModeSet::create(params.a, n_grid / 2 - 1);

  OUState psi = OUState::init_stationary(params, set, config.N, stream, coupling);
  ModeField v = initial_remainder(config, params, set, stream, coupling);

  const double noise_dt = config.noise_dt > 0.0 ? config.noise_dt : config.dt;
  const int substeps = static_cast<int>(std::round(config.dt / noise_dt));
  const int nsteps = static_cast<int>(std::round(config.t_final / config.dt));
  const Stepper st(*set, params, config.dt, config.N);
  const double sigma_space = sigma_n_spatial(params, *set, config.N);
  const bool has_zero = set->zero_mode_index() >= 0;
  const double cn = config.cn_constant ? cn_log_constant(params, config.N) : 0.0;
  const Complex beta(params.beta1, params.beta2);

  Trajectory traj;
  double zq_acc = 0.0;
  int n_recorded = 0;

  auto record = [&](double t, const WickData& wd) {
    TrajectorySample s;
    s.t = t;
    s.holder_s0 = holder_norm(v, config.s0);
    const double h2e = holder_norm(v, 2.0 * config.epsilon);
    s.weighted_c2eps = t > 0.0 ? std::pow(t, (2.0 * config.epsilon - config.s0) / 2.0) * h2e : 0.0;
    const GridField vg = to_grid(v, n_grid);
    s.lp_p = lp_norm(vg, config.p_monitor);
    s.lp_2 = lp_norm(vg, 2.0);
    double xn = 0.0;
    for (int j1 = 0; j1 <= params.m; ++j1)
      for (int j2 = 0; j2 <= params.m - 1; ++j2) {
        if (j1 == 0 && j2 == 0) continue;
        const ModeField xm = to_modes(wd.at(j1, j2), norm_set);
        xn = std::max(xn, holder_norm(xm, -config.epsilon));
      }
    s.xi_norm = xn;
    traj.samples.push_back(s);
    zq_acc += std::pow(xn, config.q_time);
    ++n_recorded;
    return s;
  };

  double t = 0.0;
  traj.status = RunStatus::kCompleted;
  for (int n = 0; n < nsteps; ++n) {
    const double sigma = sigma_space + (has_zero ? 2.0 * params.gamma * t / kTorusArea : 0.0);
    WickData wd = build_wick_data(psi, params, n_grid, sigma);
    if (n % config.record_stride == 0) {
      const TrajectorySample s = record(t, wd);
      if (s.lp_p >= config.blowup_threshold) {
        traj.status = RunStatus::kThresholdExceeded;
        traj.t_end = t;
        break;
      }
    }
    const GridField vg = to_grid(v, n_grid);
    GridField fg = build_f(vg, wd, params);
    if (config.cn_constant) {
      // (|u|^2 - 2 C_N) u = :u^2 ubar:_sigma + 2 (sigma - C_N) u, u = Psi + v
      const GridField pg = to_grid(psi.psi(), n_grid);
      const Complex lin = beta * 2.0 * (sigma - cn);
      for (size_t i = 0; i < fg.v.size(); ++i) fg.v[i] += lin * (pg.v[i] + vg.v[i]);
    }
    const ModeField f_hat = to_modes(fg, set);
    st.apply(v, f_hat);
    for (int k = 0; k < substeps; ++k) psi.evolve(params, noise_dt, stream, coupling);
    t += config.dt;
    if (!finite(v)) {
      traj.status = RunStatus::kNumericalBlowup;
      traj.t_end = t;
      break;
    }
  }
  if (traj.status == RunStatus::kCompleted) {
    const double sigma = sigma_space + (has_zero ? 2.0 * params.gamma * t / kTorusArea : 0.0);
    const WickData wd = build_wick_data(psi, params, n_grid, sigma);
    record(t, wd);
    traj.t_end = t;
  }
  const double dt_rec = config.dt * config.record_stride;
  traj.xi_z_norm =
      n_recorded > 0 ? std::pow(zq_acc * dt_rec, 1.0 / config.q_time) : 0.0;
  return traj;
}

ConsistencyResult run_splitting_consistency(const RunConfig& config, const Params& params,
                                            double dt_ref, RngStream& stream,
                                            NoiseCoupling coupling) {
  config.validate(params);
  const double ratio = config.dt / dt_ref;
  if (!(dt_ref > 0.0) || std::abs(ratio - std::round(ratio)) > 1e-9)
    throw std::invalid_argument("run_splitting_consistency: dt must be a multiple of dt_ref");
  const int K = static_cast<int>(std::round(ratio));
  const int n_grid = config.grid(params);
  const auto set = ModeSet::create(params.a, mode_cutoff(params, config.N));

  OUState psi = OUState::init_stationary(params, set, config.N, stream, coupling);
  ModeField v = initial_remainder(config, params, set, stream, coupling);
  ModeField u = psi.psi();
  for (int i = 0; i < u.size(); ++i) u.coeffs[i] += v.coeffs[i];

  const Stepper st_fine(*set, params, dt_ref, config.N);
  const Stepper st_coarse(*set, params, config.dt, config.N);
  const double sigma_space = sigma_n_spatial(params, *set, config.N);
  const bool has_zero = set->zero_mode_index() >= 0;
  const Complex beta(params.beta1, params.beta2);
  const int n_coarse = static_cast<int>(std::round(config.t_final / config.dt));

  double t = 0.0;
  for (int nc = 0; nc < n_coarse; ++nc) {
    // coarse nonlinear term from u at the step start
    const double sigma_c = sigma_space + (has_zero ? 2.0 * params.gamma * t / kTorusArea : 0.0);
    GridField ug = to_grid(u, n_grid);
    for (Complex& z : ug.v) z = beta * renormalized_monomial(z, sigma_c, params.m);
    const ModeField g_hat = to_modes(ug, set);
    const ModeField psi_before = psi.psi();

    for (int kf = 0; kf < K; ++kf) {
      const double sigma_f = sigma_space + (has_zero ? 2.0 * params.gamma * t / kTorusArea : 0.0);
      const WickData wd = build_wick_data(psi, params, n_grid, sigma_f);
      const GridField vg = to_grid(v, n_grid);
      const ModeField f_hat = to_modes(build_f(vg, wd, params), set);
      st_fine.apply(v, f_hat);
      psi.evolve(params, dt_ref, stream, coupling);
      t += dt_ref;
    }
    // u step: exact integrated noise over the coarse window
    for (int i = 0; i < u.size(); ++i) {
      const Complex acc = psi.psi().coeffs[i] - st_coarse.decay[i] * psi_before.coeffs[i];
      u.coeffs[i] = st_coarse.decay[i] * u.coeffs[i] -
                    config.dt * st_coarse.phi1_dt[i] * (st_coarse.w[i] * g_hat.coeffs[i]) + acc;
    }
  }
  ConsistencyResult res;
  double num = 0.0, den = 0.0;
  for (int i = 0; i < u.size(); ++i) {
    num += std::norm(u.coeffs[i] - psi.psi().coeffs[i] - v.coeffs[i]);
    den += std::norm(u.coeffs[i]);
  }
  res.u_l2 = std::sqrt(den);
  res.rel_l2 = den > 0.0 ? std::sqrt(num / den) : 0.0;
  return res;
}

}  // namespace scgl
